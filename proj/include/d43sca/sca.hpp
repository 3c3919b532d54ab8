#pragma once

// Soliton cellular automata: carrier time evolutions T_l for D4^(3) and A_n^(1),
// the operator T_natural, soliton labels and scattering experiments.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "an.hpp"
#include "bnatural.hpp"
#include "comb_r.hpp"
#include "d43.hpp"

namespace d43 {

using path = std::vector<letter>;

inline path vacuum(int L) { return path(static_cast<std::size_t>(L), letter::l1); }

inline path parse_path(std::string_view s) {
    path p = parse_cells(s);
    if (p.empty() || p.back() != letter::l1)
        throw std::invalid_argument("a path must end with the vacuum letter 1");
    return p;
}

struct evolution {
    path out;
    int E = 0;
    std::vector<int> H;
    coord carrier{};
};

inline evolution evolve(const path& p, int l) {
    if (l < 1) throw std::invalid_argument("carrier level must be >= 1");
    evolution ev;
    ev.out.reserve(p.size());
    coord c = u(l);
    for (letter b : p) {
        const r_result r = comb_R(c, b, l);
        ev.out.push_back(r.b2);
        ev.H.push_back(r.H);
        ev.E -= r.H;
        c = r.b1;
    }
    ev.carrier = c;
    if (c != u(l))
        throw std::domain_error("carrier did not return to u_" + std::to_string(l) +
                                " (ended at " + render_coord(c) + "); the vacuum tail is too short");
    return ev;
}

inline path T(const path& p, int l) { return evolve(p, l).out; }
inline int energy(const path& p, int l) { return evolve(p, l).E; }

struct natural_evolution {
    path out;
    bnat carrier;
};

inline natural_evolution evolve_natural(const path& p) {
    natural_evolution ev{{}, bnat_crystal().highest()};
    for (std::size_t j = 0; j < p.size(); ++j) {
        natural_result r;
        try {
            r = comb_R_natural(ev.carrier, p[j]);
        } catch (const std::out_of_range&) {
            throw std::domain_error("T_natural: unsupported letter " + to_ascii(p[j]) + " at cell " +
                                    std::to_string(j + 1));
        }
        ev.out.push_back(r.c);
        ev.carrier = r.b;
    }
    return ev;
}

// ---- A_n^(1) automaton; cells are letters 1..n+1 ----

using an_path = std::vector<int>;

struct an_evolution {
    an_path out;
    int E = 0;
    std::vector<int> H;
};

inline an_evolution evolve_an(const an_path& p, int l, int n) {
    const an::crystal bl(n, l);
    an::coord c = bl.highest();
    an_evolution ev;
    for (int a : p) {
        if (a < 1 || a > n + 1) throw std::invalid_argument("letter out of range for A_n");
        an::coord y(n + 1, 0);
        y[a - 1] = 1;
        const auto r = an::comb_R(c, y);
        const int out = static_cast<int>(std::find(r.left.begin(), r.left.end(), 1) - r.left.begin()) + 1;
        ev.out.push_back(out);
        ev.H.push_back(r.H);
        ev.E -= r.H;
        c = r.right;
    }
    if (c != bl.highest()) throw std::domain_error("carrier did not return to the highest element");
    return ev;
}

inline an_path parse_an_path(std::string_view s, int n) {
    an_path p;
    for (char ch : s) {
        const int a = ch - '0';
        if (a < 1 || a > n + 1) throw std::invalid_argument("bad A_n letter '" + std::string(1, ch) + "'");
        p.push_back(a);
    }
    return p;
}

inline std::string render_an_path(const an_path& p) {
    std::string s;
    for (int a : p) s += std::to_string(a);
    return s;
}

// ---- solitons ----

enum class algebra { d43, an };

// z^gamma (x_1, ..., x_k); x_i counts the letter i+1 in the block
// (n+1)^{x_n} ... 2^{x_1}. For D4^(3), k = 2.
struct soliton {
    int gamma = 0;
    std::vector<int> x;
    int length() const { return std::accumulate(x.begin(), x.end(), 0); }
    friend bool operator==(const soliton&, const soliton&) = default;
};

inline std::string render(const soliton& s) {
    std::string r = "z^" + std::to_string(s.gamma) + "(";
    for (std::size_t k = 0; k < s.x.size(); ++k) r += (k ? "," : "") + std::to_string(s.x[k]);
    return r + ")";
}

inline std::string render(const std::vector<soliton>& v) {
    std::string r;
    for (std::size_t k = 0; k < v.size(); ++k) r += (k ? " x " : "") + render(v[k]);
    return r.empty() ? "(none)" : r;
}

struct detection {
    bool interacting = false;
    std::vector<soliton> solitons;
    std::vector<int> right;  // 1-based index of each block's rightmost cell
};

// Cells as integers: 1 vacuum, 2..k+1 soliton letters, anything else 0.
inline detection detect_blocks(const std::vector<int>& cells, int k) {
    detection d;
    const int L = static_cast<int>(cells.size());
    int j = 0;
    while (j < L) {
        if (cells[j] == 1) {
            ++j;
            continue;
        }
        std::vector<int> x(k, 0);
        int prev = k + 2;
        while (j < L && cells[j] != 1) {
            const int a = cells[j];
            if (a < 2 || a > k + 1 || a > prev) d.interacting = true;
            else ++x[a - 2];
            prev = a;
            ++j;
        }
        d.solitons.push_back({L - j, x});
        d.right.push_back(j);
    }
    if (d.interacting) d.solitons.clear(), d.right.clear();
    return d;
}

inline std::vector<int> soliton_cells(const path& p) {
    std::vector<int> c;
    for (letter a : p)
        c.push_back(a == letter::l1 ? 1 : a == letter::l2 ? 2 : a == letter::l3 ? 3 : 0);
    return c;
}

inline detection detect_solitons(const path& p) { return detect_blocks(soliton_cells(p), 2); }

inline detection detect_solitons_an(const an_path& p, int n) { return detect_blocks(p, n); }

// Phase at time t under T_r: gamma = min(r, l) t + position.
inline std::vector<soliton> with_time(std::vector<soliton> v, int r, int t) {
    for (auto& s : v) s.gamma += std::min(r, s.length()) * t;
    return v;
}

struct soliton_spec {
    int length, x1, x2, gap;  // gap: vacuum cells before the block
};

inline path make_state(const std::vector<soliton_spec>& specs, int L) {
    path p;
    for (const auto& s : specs) {
        if (s.x1 < 0 || s.x2 < 0 || s.gap < 0 || s.x1 + s.x2 != s.length || s.length < 1)
            throw std::invalid_argument("bad soliton spec");
        p.insert(p.end(), static_cast<std::size_t>(s.gap), letter::l1);
        p.insert(p.end(), static_cast<std::size_t>(s.x2), letter::l3);
        p.insert(p.end(), static_cast<std::size_t>(s.x1), letter::l2);
    }
    if (static_cast<int>(p.size()) >= L) throw std::invalid_argument("solitons do not fit in the lattice");
    p.resize(static_cast<std::size_t>(L), letter::l1);
    return p;
}

// Integer cells for a list of labels placed at their phases (t = 0).
inline std::vector<int> place_labels(const std::vector<soliton>& labels, int L) {
    std::vector<int> cells(static_cast<std::size_t>(L), 1);
    int last_right = 0;
    for (const auto& s : labels) {
        const int right = L - s.gamma, left = right - s.length() + 1;
        if (left <= last_right + 1 && last_right > 0)
            throw std::invalid_argument("solitons overlap or touch: " + render(s));
        if (left < 1 || right >= L) throw std::invalid_argument("soliton outside the lattice: " + render(s));
        int j = left - 1;
        for (int a = static_cast<int>(s.x.size()); a >= 1; --a)
            for (int c = 0; c < s.x[a - 1]; ++c) cells[j++] = a + 1;
        last_right = right;
    }
    return cells;
}

inline path cells_to_path(const std::vector<int>& cells) {
    path p;
    for (int a : cells) {
        if (a < 1 || a > 3) throw std::invalid_argument("letter out of range for D4^(3) solitons");
        p.push_back(a == 1 ? letter::l1 : a == 2 ? letter::l2 : letter::l3);
    }
    return p;
}

// ---- two-body map and its compositions ----

// z^g1 b1 x z^g2 b2 -> z^(g2+d) b2' x z^(g1-d) b1',
// d = 2 min(l1, l2) + c H with c = 3 for D4^(3) and 1 for A_n^(1).
inline std::pair<soliton, soliton> two_body(const soliton& a, const soliton& b, algebra g) {
    const auto r = an::comb_R(a.x, b.x);
    const int c = g == algebra::d43 ? 3 : 1;
    const int d = 2 * std::min(a.length(), b.length()) + c * r.H;
    return {soliton{b.gamma + d, r.left}, soliton{a.gamma - d, r.right}};
}

inline int phase_shift(const soliton& a, const soliton& b, algebra g) {
    return two_body(a, b, g).first.gamma - b.gamma;
}

// Longest-permutation compositions: bubble passes from the left, or from the right.
inline std::vector<soliton> compose(std::vector<soliton> v, algebra g, bool from_left) {
    const int m = static_cast<int>(v.size());
    auto apply = [&](int k) {
        auto [x, y] = two_body(v[k], v[k + 1], g);
        v[k] = x;
        v[k + 1] = y;
    };
    for (int pass = 0; pass + 1 < m; ++pass) {
        if (from_left)
            for (int k = 0; k + 1 < m - pass; ++k) apply(k);
        else
            for (int k = m - 2; k >= pass; --k) apply(k);
    }
    return v;
}

struct scatter_report {
    algebra alg = algebra::d43;
    int rank = 2;  // n for A_n
    int L = 0, r = 0;
    int pad = 0;  // vacuum cells appended on the right of the lattice
    std::vector<soliton> incoming;
    std::vector<soliton> outgoing;  // measured
    std::vector<soliton> predicted_left, predicted_right;
    std::vector<int> measured_delta, predicted_delta;  // two-body only
    int t_free = -1;
    bool conclusive = false;
    std::vector<std::string> trace;
    bool pass() const {
        return conclusive && outgoing == predicted_left && predicted_left == predicted_right;
    }
};

struct scatter_config {
    algebra alg = algebra::d43;
    int rank = 2;
    int L = 0;  // 0: sized automatically
    int r = 0;
    int t_max = 0;
    bool keep_trace = true;
};

// Room on the left for the first soliton; the phases fix the distance to the right end.
inline int auto_size(const std::vector<soliton>& labels) {
    if (labels.empty()) return 8;
    return labels.front().gamma + labels.front().length() + 4;
}

namespace detail {
template <class State, class Step, class Cells, class Render>
void run_scatter(scatter_report& rep, const scatter_config& cfg, const std::vector<soliton>& labels,
                 State state, Step step, Cells cells, Render show, int k) {
    const int l1 = labels.front().length();
    auto free_and_reversed = [&](const detection& d) {
        if (d.interacting || d.solitons.size() != labels.size()) return false;
        for (std::size_t i = 1; i < d.solitons.size(); ++i) {
            if (d.solitons[i].length() <= d.solitons[i - 1].length()) return false;
            const int gap = d.right[i] - d.solitons[i].length() - d.right[i - 1];
            if (gap < l1 + 1) return false;
        }
        return true;
    };
    if (cfg.keep_trace) rep.trace.push_back(show(state));
    for (int t = 1; t <= cfg.t_max; ++t) {
        try {
            state = step(state);
        } catch (const std::domain_error&) {
            return;  // a soliton reached the right boundary
        }
        if (cfg.keep_trace) rep.trace.push_back(show(state));
        const detection d = detect_blocks(cells(state), k);
        if (free_and_reversed(d)) {
            rep.t_free = t;
            rep.conclusive = true;
            rep.outgoing = with_time(d.solitons, cfg.r, t);
            return;
        }
    }
}
}  // namespace detail

inline scatter_report scatter_experiment(const std::vector<soliton>& labels, scatter_config cfg) {
    scatter_report rep;
    rep.alg = cfg.alg;
    rep.rank = cfg.rank;
    rep.r = cfg.r;
    rep.incoming = labels;
    const int k = cfg.alg == algebra::d43 ? 2 : cfg.rank;
    if (cfg.alg == algebra::an && cfg.rank < 2) throw std::invalid_argument("A_n scattering needs n >= 2");
    for (const auto& s : labels)
        if (static_cast<int>(s.x.size()) != k || s.length() < 1 ||
            std::any_of(s.x.begin(), s.x.end(), [](int v) { return v < 0; }))
            throw std::invalid_argument("label " + render(s) + " has the wrong shape");
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i].length() >= labels[i - 1].length())
            throw std::invalid_argument("soliton lengths must be strictly decreasing left to right");
    if (labels.size() >= 2 && cfg.r <= labels[1].length())
        throw std::invalid_argument("carrier level must exceed the second longest soliton");
    if (labels.empty()) {
        rep.conclusive = true;
        return rep;
    }

    // Phases are distances from the right end, so room for the outgoing solitons is
    // added on the right: every phase is raised by `pad` while simulating.
    rep.L = cfg.L > 0 ? cfg.L : auto_size(labels);
    rep.pad = cfg.t_max * labels.front().length() + 4;
    std::vector<soliton> shifted = labels;
    for (auto& s : shifted) s.gamma += rep.pad;
    const std::vector<int> cells = place_labels(shifted, rep.L + rep.pad);
    rep.predicted_left = compose(labels, cfg.alg, true);
    rep.predicted_right = compose(labels, cfg.alg, false);
    if (labels.size() == 2) rep.predicted_delta.push_back(phase_shift(labels[0], labels[1], cfg.alg));

    if (cfg.alg == algebra::d43) {
        detail::run_scatter(
            rep, cfg, labels, cells_to_path(cells), [&](const path& p) { return T(p, cfg.r); },
            [](const path& p) { return soliton_cells(p); }, [](const path& p) { return render_cells(p); }, k);
    } else {
        detail::run_scatter(
            rep, cfg, labels, cells, [&](const an_path& p) { return evolve_an(p, cfg.r, cfg.rank).out; },
            [](const an_path& p) { return p; }, [](const an_path& p) { return render_an_path(p); }, k);
    }
    for (auto& s : rep.outgoing) s.gamma -= rep.pad;
    if (rep.conclusive && labels.size() == 2)
        rep.measured_delta.push_back(rep.outgoing[0].gamma - labels[1].gamma);
    return rep;
}

// iota_l : (x1, x2) -> (3)^{x2} x (2)^{x1}
inline std::vector<coord> iota(const an::coord& x) {
    std::vector<coord> w(static_cast<std::size_t>(x[1]), letter_coord(letter::l3));
    w.insert(w.end(), static_cast<std::size_t>(x[0]), letter_coord(letter::l2));
    return w;
}

// Random path: letters i.i.d. from B_1 on the first `body` cells, vacuum afterwards.
template <class Rng>
path random_path(Rng& rng, int L, int body) {
    std::uniform_int_distribution<int> pick(0, 7);
    path p = vacuum(L);
    for (int j = 0; j < std::min(body, L); ++j) p[j] = static_cast<letter>(pick(rng));
    return p;
}

}  // namespace d43
