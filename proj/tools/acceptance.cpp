// Acceptance report: one line per criterion. Exit status is 0 iff the set of
// failing criteria equals the --expect-fail set.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "d43sca/verify.hpp"

using namespace d43;
using L = letter;

namespace {

struct verdict {
    bool ok;
    std::string detail;
};

coord wc(const std::string& s) { return word_coord(parse_word(s)); }

std::string show(const r_result& r) {
    return "(" + to_ascii(r.b2) + ") x (" + render_word(coord_word(r.b1)) + ") H=" + std::to_string(r.H);
}

verdict golden_r() {
    const auto a = comb_R(wc("2b2b1"), L::b2, 3);
    const bool ok_a = a.b2 == L::b1 && a.b1 == wc("0b2") && a.H == -2;
    const auto b = comb_R(wc("30b1"), L::b3, 4);
    const bool ok_b = b.b2 == L::l2 && b.b1 == wc("2b2b2b1") && b.H == -2;
    return {ok_a && ok_b, "l=3 got " + show(a) + (ok_a ? "" : ", expected (b1) x (0b2) H=-2") + "; l=4 got " +
                              show(b) + (ok_b ? "" : ", expected (2) x (2b2b2b1) H=-2")};
}

verdict from_suite(const verify::result& r) {
    std::string d;
    for (const auto& l : r.lines) d += (d.empty() ? "" : "; ") + l;
    return {r.ok, d};
}

verdict f0_families() {
    int bad = 0, checked = 0;
    for (int l = 2; l <= 6; ++l) {
        const crystal c(l);
        auto family = [&](coord b, int p1, const std::function<coord(int)>& first, int p2,
                          const std::function<coord(int)>& second) {
            for (int p = 0; p <= p2; ++p) {
                ++checked;
                if (b != (p <= p1 ? first(p) : second(p))) ++bad;
                if (p < p2) {
                    auto n = c.f(0, b);
                    if (!n) {
                        bad += p2 - p;
                        return;
                    }
                    b = *n;
                }
            }
        };
        family({0, 0, 0, 0, 0, l}, l, [&](int p) { return coord{0, 0, 0, 0, 0, l - p}; }, 2 * l,
               [&](int p) { return coord{p - l, 0, 0, 0, 0, 0}; });
        family({0, 0, 1, 1, 0, l - 1}, l - 1, [&](int p) { return coord{0, 0, 1, 1, 0, l - 1 - p}; }, 2 * l - 2,
               [&](int p) { return coord{p - l + 1, 0, 1, 1, 0, 0}; });
        family({0, 0, 0, 2, 0, l - 1}, l - 1, [&](int p) { return coord{0, 0, 0, 2, 0, l - 1 - p}; }, 2 * l - 1,
               [&](int p) { return coord{p - l, 1, 0, 0, 0, 0}; });
        family({0, 1, 0, 0, 0, l - 1}, l - 2, [&](int p) { return coord{0, 1, 0, 0, 0, l - 1 - p}; }, 2 * l - 3,
               [&](int p) { return coord{p - l + 1, 1, 1, 1, 0, 0}; });
        family({1, 0, 0, 0, 0, l - 1}, l - 2, [&](int p) { return coord{1, 0, 0, 0, 0, l - 1 - p}; }, 2 * l - 4,
               [&](int p) { return coord{p - l + 3, 0, 0, 0, 0, 1}; });
    }
    return {bad == 0, std::to_string(checked) + " f0 powers over five families, l=2..6, " + std::to_string(bad) +
                          " mismatches"};
}

const std::vector<std::string> intro_d43{
    "22111311111111111111111111", "11221131111111111111111111", "11112213111111111111111111",
    "11111122311111111111111111", "11111111201111111111111111", "1111111111b3111111111111111",
    "11111111111e21111111111111", "11111111111110211111111111", "11111111111111232111111111",
    "11111111111111121321111111", "11111111111111112113211111", "11111111111111111211132111"};

const std::vector<std::string> intro_a2{
    "221113111111111111111111111", "112211311111111111111111111", "111122131111111111111111111",
    "111111223111111111111111111", "111111112321111111111111111", "111111111213211111111111111",
    "111111111121132111111111111", "111111111112111321111111111", "111111111111211113211111111",
    "111111111111121111132111111", "111111111111112111111321111", "111111111111111211111113211"};

verdict golden_traces() {
    std::ostringstream d;
    bool ok = true;
    const std::string t3 = render_cells(T(parse_cells("b20b31111"), 3));
    ok = ok && t3 == "113eb121";
    d << "T_3 line " << (t3 == "113eb121" ? "ok" : "got " + t3);

    path p = parse_cells(intro_d43[0]);
    int bad = 0;
    for (std::size_t t = 1; t < intro_d43.size(); ++t) {
        p = T(p, 2);
        bad += render_cells(p) != intro_d43[t];
    }
    an_path q = parse_an_path(intro_a2[0], 2);
    int bad_a = 0;
    for (std::size_t t = 1; t < intro_a2.size(); ++t) {
        q = evolve_an(q, 2, 2).out;
        bad_a += render_an_path(q) != intro_a2[t];
    }
    ok = ok && bad == 0 && bad_a == 0;
    d << "; D4 trace " << bad << " bad lines; A2 trace " << bad_a << " bad lines";

    // incoming z^{L-2}(2,0) x z^{L-6}(0,1); outgoing z^{L-6+d}(1,0) x z^{L-2-d}(1,1)
    auto delta = [](const std::vector<soliton>& out, int Lsz, int& d) {
        if (out.size() != 2 || out[0].x != std::vector<int>{1, 0} || out[1].x != std::vector<int>{1, 1}) return false;
        d = out[0].gamma - (Lsz - 6);
        return (Lsz - 2) - out[1].gamma == d;
    };
    int dd = 0, da = 0;
    const bool sd = delta(with_time(detect_solitons(p).solitons, 2, 11), 26, dd);
    const bool sa = delta(with_time(detect_solitons_an(q, 2).solitons, 2, 11), 27, da);
    ok = ok && sd && sa && dd == -1 && da == 1;
    d << "; delta D4 " << (sd ? std::to_string(dd) : "?") << ", A2 " << (sa ? std::to_string(da) : "?");
    return {ok, d.str()};
}

verdict scattering_examples() {
    std::ostringstream d;
    bool ok = true;
    auto rep = scatter_experiment({{46, {4, 0}}, {38, {3, 0}}}, {algebra::d43, 2, 50, 4, 40, false});
    bool one = rep.conclusive && rep.outgoing == std::vector<soliton>{{44, {3, 0}}, {40, {4, 0}}} &&
               rep.measured_delta.size() == 1 && rep.measured_delta[0] == 6;
    d << "r=4: " << render(rep.outgoing) << (one ? " ok" : " MISMATCH");
    ok = ok && one;

    rep = scatter_experiment({{47, {3, 0}}, {41, {0, 2}}}, {algebra::d43, 2, 50, 3, 40, false});
    one = rep.conclusive && rep.outgoing == std::vector<soliton>{{39, {2, 0}}, {49, {1, 2}}} &&
          rep.measured_delta.size() == 1 && rep.measured_delta[0] == -2;
    d << "; r=3: " << render(rep.outgoing) << (one ? " ok" : " MISMATCH");
    ok = ok && one;

    rep = scatter_experiment({{47, {1, 2}}, {42, {1, 1}}, {38, {0, 1}}}, {algebra::d43, 2, 50, 3, 40, false});
    const std::vector<soliton> printed{{37, {0, 1}}, {41, {2, 0}}, {47, {0, 3}}};
    const bool agree = rep.predicted_left == rep.predicted_right;
    one = rep.conclusive && rep.outgoing == printed && agree;
    d << "; three-body: measured " << render(rep.outgoing) << ", compositions "
      << (agree ? "agree" : "disagree") << (rep.outgoing == printed ? "" : ", expected " + render(printed));
    ok = ok && one;
    return {ok, d.str()};
}

verdict natural_two_soliton() {
    int cases = 0, bad = 0;
    for (int l = 2; l <= 5; ++l)
        for (int k = 1; k < l; ++k)
            for (int y2 = 0; y2 <= k; ++y2) {
                const int y1 = k - y2, Lsz = 40;
                const std::vector<soliton> in{{Lsz - 3 - l, {l, 0}}, {Lsz - 3 - l - 2 * l - 2 - k, {y1, y2}}};
                const path p = cells_to_path(place_labels(in, Lsz));
                const auto out = detect_solitons(evolve_natural(p).out).solitons;
                const std::vector<soliton> expect{
                    in[0], y2 == 0 ? soliton{in[1].gamma, {k, 0}} : soliton{in[1].gamma - 3, {y1 + 1, y2 - 1}}};
                ++cases;
                bad += out != expect;
                for (int r = 1; r <= l + 1; ++r) bad += evolve_natural(T(p, r)).out != T(evolve_natural(p).out, r);
            }
    return {bad == 0, std::to_string(cases) + " states (l<=5, k<l, y2<=k), commutation with T_r for r<=l+1, " +
                          std::to_string(bad) + " failures"};
}

verdict counts() {
    std::ostringstream d;
    const auto n1 = crystal(1).enumerate().size(), n2 = crystal(2).enumerate().size();
    const auto nn = bnat_crystal().enumerate().size();
    bool ok = n1 == 8 && n2 == 35 && nn == 29;
    d << "|B1|=" << n1 << " |B2|=" << n2 << " |B_natural|=" << nn << "; word sets";
    const std::vector<std::size_t> want{7, 7, 14, 27, 64, 64};
    const std::vector<words::set_tag> tags{words::set_tag::b1,  words::set_tag::b10,  words::set_tag::b12,
                                           words::set_tag::b11, words::set_tag::b112, words::set_tag::b121};
    for (std::size_t i = 0; i < tags.size(); ++i) {
        const auto n = words::table(tags[i]).size();
        d << " " << n;
        ok = ok && n == want[i];
    }
    std::set<L> xi_img;
    bool xi_ok = true;
    for (const auto& s : words::table(words::set_tag::b10)) {
        const auto w = words::decode(s);
        const L a = words::xi(w[0], w[1]);
        xi_img.insert(a);
        const auto back = words::xi_inv(a);
        xi_ok = xi_ok && std::vector<L>(back.begin(), back.end()) == w;
    }
    xi_ok = xi_ok && xi_img.size() == alphabet.size();
    std::set<std::string> eta_img;
    bool eta_ok = true;
    for (const auto& s : words::table(words::set_tag::b121)) {
        const auto w = words::decode(s);
        const auto e = words::eta(w[0], w[1], w[2]);
        const std::vector<L> ev(e.begin(), e.end());
        eta_ok = eta_ok && words::classify(ev) == words::set_tag::b112;
        eta_img.insert(words::encode(ev));
        const auto back = words::eta_inv(e[0], e[1], e[2]);
        eta_ok = eta_ok && std::vector<L>(back.begin(), back.end()) == w;
    }
    eta_ok = eta_ok && eta_img.size() == 64;
    d << "; xi " << (xi_ok ? "bijective" : "NOT bijective") << ", eta " << (eta_ok ? "bijective" : "NOT bijective");
    return {ok && xi_ok && eta_ok, d.str()};
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> v;
    std::stringstream in(s);
    for (std::string t; std::getline(in, t, ',');)
        if (!t.empty()) v.insert(std::stoi(t));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance report"};
    std::string expect_fail;
    app.add_option("--expect-fail", expect_fail, "comma-separated criteria known to fail");
    CLI11_PARSE(app, argc, argv);
    const std::set<int> expected = parse_list(expect_fail);

    const std::vector<std::pair<std::string, std::function<verdict()>>> criteria{
        {"golden R values", golden_r},
        {"highest-weight table l=1..4", [] { return from_suite(verify::hwe_table(1, 4)); }},
        {"insertion R equals graph oracle l=1..4", [] { return from_suite(verify::oracle_vs_insertion(4)); }},
        {"B_natural table rows", [] { return from_suite(verify::natural_table()); }},
        {"f0 power families l=2..6", f0_families},
        {"Yang-Baxter", [] { return from_suite(verify::yangbaxter(3)); }},
        {"golden time evolution traces", golden_traces},
        {"scattering examples", scattering_examples},
        {"phase-shift law on 50 states", [] { return from_suite(verify::phase_shift_law(7, 50)); }},
        {"conservation and commutation on 100 paths", [] { return from_suite(verify::conservation(2024, 100, 30)); }},
        {"T_natural on two-soliton states", natural_two_soliton},
        {"structural counts", counts},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.ok) failed.insert(n);
        std::cout << (v.ok ? "PASS" : "FAIL") << " " << n << " " << criteria[i].first << ": " << v.detail
                  << (!v.ok && expected.count(n) ? " [expected]" : "") << "\n";
    }
    const bool as_expected = failed == expected;
    std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass"
              << (as_expected ? "" : "; the failing set differs from --expect-fail") << "\n";
    return as_expected ? 0 : 1;
}
