#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "d43sca/sca.hpp"
#include "d43sca/verify.hpp"

namespace d43::cli {

using json = nlohmann::json;

enum exit_code { ok = 0, failed = 1, usage = 2 };

struct evolve_preset {
    std::string name;
    algebra alg;
    int rank;
    std::string cells;
    int r, steps;
};

inline const std::vector<evolve_preset>& evolve_presets() {
    static const std::vector<evolve_preset> p{
        {"intro-d43", algebra::d43, 2, "22111311111111111111111111", 2, 11},
        {"intro-a2", algebra::an, 2, "221113111111111111111111111", 2, 11},
        {"t3-example", algebra::d43, 2, "b20b31111", 3, 1},
        {"an-t3-example", algebra::an, 2, "3321111", 3, 1},
        {"r4-two-body", algebra::d43, 2, "22221111122211111111111111111111111111111111111111", 4, 4},
        {"r3-two-body", algebra::d43, 2, "22211113311111111111111111111111111111111111111111", 3, 15},
        {"three-body", algebra::d43, 2, "33211132111311111111111111111111111111111111111111", 3, 12},
    };
    return p;
}

struct options {
    std::string algebra_name = "d43";
    int rank = 2;
    std::string format = "text";
    bool unicode = false;
    bool dump_config = false;

    // evolve
    std::string cells;
    std::string preset;
    int level = 0;
    int size = 0;
    int steps = -1;
    long seed = -1;

    // scatter
    std::vector<std::string> solitons;

    // verify
    std::string suite;

    // export / tables
    std::string what;
    std::string crystal_name = "B1";
    std::string out_dir = ".";
};

inline std::vector<soliton> parse_labels(const std::vector<std::string>& specs, int k) {
    std::vector<soliton> v;
    for (const auto& s : specs) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("soliton spec must look like gamma:x1,x2");
        soliton sol;
        sol.gamma = std::stoi(s.substr(0, colon));
        std::stringstream rest(s.substr(colon + 1));
        for (std::string t; std::getline(rest, t, ',');) sol.x.push_back(std::stoi(t));
        if (static_cast<int>(sol.x.size()) != k)
            throw std::invalid_argument("soliton " + s + " needs " + std::to_string(k) + " entries");
        v.push_back(sol);
    }
    return v;
}

inline json solitons_json(const detection& d) {
    json arr = json::array();
    for (const auto& s : d.solitons) {
        json o{{"gamma", s.gamma}};
        for (std::size_t i = 0; i < s.x.size(); ++i) o["x" + std::to_string(i + 1)] = s.x[i];
        arr.push_back(o);
    }
    return arr;
}

inline json labels_json(const std::vector<soliton>& v) {
    detection d;
    d.solitons = v;
    return solitons_json(d);
}

// ---- evolve ----

inline int cmd_evolve(options o, std::ostream& out) {
    const evolve_preset* pre = nullptr;
    if (!o.preset.empty()) {
        for (const auto& p : evolve_presets())
            if (p.name == o.preset) pre = &p;
        if (!pre) throw std::invalid_argument("unknown preset '" + o.preset + "'");
        o.algebra_name = pre->alg == algebra::d43 ? "d43" : "an";
        o.rank = pre->rank;
        if (o.cells.empty()) o.cells = pre->cells;
        if (o.level == 0) o.level = pre->r;
        if (o.steps < 0) o.steps = pre->steps;
    }
    if (o.level < 1) throw std::invalid_argument("--level must be given and >= 1");
    if (o.steps < 0) o.steps = 10;
    const bool is_d43 = o.algebra_name == "d43";
    if (o.cells.empty()) {
        if (o.seed < 0) throw std::invalid_argument("give --path, --preset or --seed");
        const int L = o.size > 0 ? o.size : 30;
        std::mt19937 rng(static_cast<unsigned>(o.seed));
        if (is_d43) {
            o.cells = render_cells(random_path(rng, L, L / 2));
        } else {
            std::uniform_int_distribution<int> pick(1, o.rank + 1);
            for (int j = 0; j < L; ++j) o.cells += std::to_string(j < L / 2 ? pick(rng) : 1);
        }
    }

    std::vector<std::string> lines;
    json energies = json::object();
    json sols;
    int L = 0;
    if (is_d43) {
        path p = parse_cells(o.cells);
        if (o.size > static_cast<int>(p.size())) p.resize(static_cast<std::size_t>(o.size), letter::l1);
        if (p.empty() || p.back() != letter::l1)
            throw std::invalid_argument("a path must end with the vacuum letter 1");
        L = static_cast<int>(p.size());
        const auto d0 = detect_solitons(p);
        sols = solitons_json(d0);
        for (int l = 1; l <= std::max(4, o.level); ++l) energies["E" + std::to_string(l)] = energy(p, l);
        for (int t = 0; t <= o.steps; ++t) {
            lines.push_back(render_cells(p, o.unicode));
            if (t < o.steps) p = T(p, o.level);
        }
    } else {
        an_path p = parse_an_path(o.cells, o.rank);
        if (o.size > static_cast<int>(p.size())) p.resize(static_cast<std::size_t>(o.size), 1);
        if (p.empty() || p.back() != 1) throw std::invalid_argument("a path must end with the vacuum letter 1");
        L = static_cast<int>(p.size());
        sols = solitons_json(detect_solitons_an(p, o.rank));
        for (int l = 1; l <= std::max(4, o.level); ++l)
            energies["E" + std::to_string(l)] = evolve_an(p, l, o.rank).E;
        for (int t = 0; t <= o.steps; ++t) {
            lines.push_back(render_an_path(p));
            if (t < o.steps) p = evolve_an(p, o.level, o.rank).out;
        }
    }
    if (o.format == "json") {
        json j{{"algebra", o.algebra_name}, {"L", L}, {"r", o.level}, {"steps", lines},
               {"solitons", sols}, {"energies", energies}};
        if (!is_d43) j["rank"] = o.rank;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : lines) out << l << "\n";
    }
    return ok;
}

// ---- scatter ----

inline int cmd_scatter(options o, std::ostream& out) {
    const bool is_d43 = o.algebra_name == "d43";
    const int k = is_d43 ? 2 : o.rank;
    std::vector<soliton> labels;
    int L = o.size, r = o.level, t_max = o.steps;
    if (o.preset == "random") {
        std::mt19937 rng(static_cast<unsigned>(o.seed < 0 ? 1 : o.seed));
        auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
        const int l2 = pick(1, 4), l1 = pick(l2 + 1, l2 + 3), gap = pick(l1 + 1, l1 + 4);
        std::vector<int> second(k, 0);
        for (int c = 0; c < l2; ++c) ++second[pick(0, k - 1)];
        std::vector<int> first(k, 0);
        first[0] = l1;
        labels = {{10 + l2 + gap, first}, {10, second}};
        if (r == 0) r = l2 + 1;
    } else if (!o.preset.empty()) {
        const verify::scatter_preset* pre = nullptr;
        for (const auto& p : verify::scatter_presets())
            if (p.name == o.preset) pre = &p;
        if (!pre) throw std::invalid_argument("unknown scatter preset '" + o.preset + "'");
        if (!is_d43) throw std::invalid_argument("scatter presets are D4^(3) experiments");
        labels = pre->labels;
        if (L == 0) L = pre->L;
        if (r == 0) r = pre->r;
    } else {
        labels = parse_labels(o.solitons, k);
    }
    if (t_max < 0) t_max = 80;
    if (r == 0) {
        for (const auto& s : labels) r = std::max(r, s.length());
        r += 1;
    }
    scatter_config cfg{is_d43 ? algebra::d43 : algebra::an, o.rank, L, r, t_max, true};
    const auto rep = scatter_experiment(labels, cfg);

    if (o.format == "json") {
        json j{{"algebra", o.algebra_name},
               {"L", rep.L},
               {"pad", rep.pad},
               {"r", rep.r},
               {"incoming", labels_json(rep.incoming)},
               {"outgoing", labels_json(rep.outgoing)},
               {"predicted", labels_json(rep.predicted_left)},
               {"predicted_other_order", labels_json(rep.predicted_right)},
               {"conclusive", rep.conclusive},
               {"t_free", rep.t_free},
               {"pass", rep.pass()}};
        if (!rep.measured_delta.empty()) j["delta_measured"] = rep.measured_delta[0];
        if (!rep.predicted_delta.empty()) j["delta_predicted"] = rep.predicted_delta[0];
        out << j.dump(2) << "\n";
    } else {
        out << "incoming:  " << render(rep.incoming) << "\n";
        if (!rep.conclusive) {
            out << "inconclusive: solitons not separated within " << t_max << " steps\n";
            if (!rep.trace.empty()) out << "final state: " << rep.trace.back() << "\n";
        } else {
            if (!rep.incoming.empty())
                out << "outgoing:  " << render(rep.outgoing) << "  (t = " << rep.t_free << ", T_" << r << ")\n";
            out << "predicted: " << render(rep.predicted_left) << "\n";
            if (rep.incoming.size() > 2) out << "other bracketing: " << render(rep.predicted_right) << "\n";
            if (!rep.measured_delta.empty()) {
                const int H = an::comb_R(labels[0].x, labels[1].x).H;
                out << "delta measured " << rep.measured_delta[0] << ", predicted 2*"
                    << std::min(labels[0].length(), labels[1].length()) << (is_d43 ? " + 3*" : " + ")
                    << "(" << H << ") = " << rep.predicted_delta[0] << "\n";
            }
        }
        out << (rep.pass() ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass() ? ok : failed;
}

// ---- verify ----

inline int cmd_verify(const options& o, std::ostream& out, std::ostream& err) {
    const auto& names = verify::suite_names();
    std::vector<std::string> todo;
    if (o.suite == "all") todo = names;
    else if (std::find(names.begin(), names.end(), o.suite) != names.end()) todo = {o.suite};
    else {
        err << "unknown suite '" << o.suite << "'; choose one of: all";
        for (const auto& n : names) err << ", " << n;
        err << "\n";
        return usage;
    }
    bool all_ok = true;
    for (const auto& n : todo) {
        const auto r = verify::run(n, o.level);
        out << n << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
        for (const auto& l : r.lines) out << "  " << l << "\n";
        all_ok = all_ok && r.ok;
    }
    return all_ok ? ok : failed;
}

// ---- tables / export ----

inline std::string hwe_table_text(int l) {
    std::ostringstream os;
    const auto rep = verify_hwe_table(l);
    os << "# highest-weight pairs of B_" << l << " x B_1\n";
    for (const auto& row : rep.rows) {
        os << "(" << render_word(coord_word(row.b1)) << ") x (" << to_ascii(row.b2) << ") -> ("
           << to_ascii(row.got.b2) << ") x (" << render_word(coord_word(row.got.b1)) << ")  H = " << row.got.H
           << (row.ok ? "" : "  MISMATCH") << "\n";
    }
    return os.str();
}

inline std::string natural_table_text() {
    std::ostringstream os;
    os << "# B_natural x B_1 -> B_1 x B_natural on the printed sources\n";
    for (const auto& row : verify::natural_rows()) {
        const auto got = comb_R_natural(parse_bnat(row.b), *parse_letter(row.c));
        os << row.b << " x (" << row.c << ") -> (" << to_ascii(got.c) << ") x " << render(got.b) << "\n";
    }
    return os.str();
}

inline std::string graph_dot(const std::string& which, int level) {
    if (which == "natural") {
        const bnat_crystal c;
        return to_dot(c, c.enumerate(), [](const bnat& x) { return render(x); }, "B_natural");
    }
    int l = level;
    if (which == "B1") l = 1;
    else if (which == "B2") l = 2;
    else if (which != "Bl") throw std::invalid_argument("unknown crystal '" + which + "' (B1, B2, Bl, natural)");
    if (l < 1) throw std::invalid_argument("--level must be >= 1 for Bl");
    const crystal c(l);
    return to_dot(c, c.enumerate(), [](const coord& b) { return render_word(coord_word(b)); },
                  "B_" + std::to_string(l));
}

inline int cmd_tables(const options& o, std::ostream& out) {
    out << hwe_table_text(o.level > 0 ? o.level : 3) << "\n" << natural_table_text();
    return ok;
}

inline int cmd_export(const options& o, std::ostream& out) {
    namespace fs = std::filesystem;
    fs::create_directories(o.out_dir);
    auto write = [&](const std::string& name, const std::string& body) {
        const fs::path p = fs::path(o.out_dir) / name;
        std::ofstream f(p);
        if (!f) throw std::runtime_error("cannot write " + p.string());
        f << body;
        out << "wrote " << p.string() << "\n";
    };
    if (o.what == "graph") {
        const std::string which = o.crystal_name;
        const std::string stem = which == "Bl" ? "B" + std::to_string(o.level) : which;
        write(stem + ".dot", graph_dot(which, o.level));
    } else if (o.what == "tables") {
        for (int l = 1; l <= 4; ++l) write("hwe_B" + std::to_string(l) + ".txt", hwe_table_text(l));
        write("natural.txt", natural_table_text());
    } else {
        throw std::invalid_argument("export what? (graph | tables)");
    }
    return ok;
}

// ---- entry ----

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Soliton cellular automata from D4^(3) and A_n^(1) crystals"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "read options from a TOML/INI file");
    options o;
    app.add_option("--algebra", o.algebra_name, "d43 or an")->check(CLI::IsMember({"d43", "an"}));
    app.add_option("--rank", o.rank, "n for A_n^(1)")->check(CLI::Range(1, 9));
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--unicode", o.unicode, "render barred letters with overbars");
    app.add_flag("--dump-config", o.dump_config, "print the effective configuration and exit")
        ->configurable(false);

    auto* ev = app.add_subcommand("evolve", "print a time evolution trace");
    ev->add_option("--path,-p", o.cells, "initial cells, e.g. 2211131111");
    ev->add_option("--preset", o.preset, "named initial state");
    ev->add_option("--level,-l", o.level, "carrier level r of T_r");
    ev->add_option("--size,-L", o.size, "lattice size (pads with vacuum)");
    ev->add_option("--steps,-t", o.steps, "number of time steps");
    ev->add_option("--seed", o.seed, "random initial path");

    auto* sc = app.add_subcommand("scatter", "run a soliton scattering experiment");
    sc->add_option("--soliton,-s", o.solitons, "incoming label gamma:x1,x2 (left to right)");
    sc->add_option("--preset", o.preset, "r4-two-body, r3-two-body, three-body or random");
    sc->add_option("--level,-l", o.level, "carrier level r of T_r");
    sc->add_option("--size,-L", o.size, "lattice size the phases refer to");
    sc->add_option("--steps,-t", o.steps, "maximum number of time steps");
    sc->add_option("--seed", o.seed, "seed for the random preset");

    auto* vf = app.add_subcommand("verify", "run an invariant suite");
    vf->add_option("suite", o.suite, "all, axioms, yangbaxter, hwe-table, natural-table, oracle-vs-insertion, "
                                     "conservation, scattering")
        ->required();
    vf->add_option("--level,-l", o.level, "restrict level-dependent suites");

    auto* ex = app.add_subcommand("export", "write DOT graphs or tables");
    ex->add_option("what", o.what, "graph or tables")->required()->check(CLI::IsMember({"graph", "tables"}));
    ex->add_option("--crystal", o.crystal_name, "B1, B2, Bl or natural");
    ex->add_option("--level,-l", o.level, "level for Bl");
    ex->add_option("--out,-o", o.out_dir, "target directory (created if missing)");

    auto* tb = app.add_subcommand("tables", "print the highest-weight R table and the B_natural table");
    tb->add_option("--level,-l", o.level, "level of the highest-weight table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << "run with --help for usage\n";
        return usage;
    }
    if (o.dump_config) {
        out << app.config_to_str(false, false);
        return ok;
    }
    try {
        if (*ev) return cmd_evolve(o, out);
        if (*sc) return cmd_scatter(o, out);
        if (*vf) return cmd_verify(o, out, err);
        if (*ex) return cmd_export(o, out);
        if (*tb) return cmd_tables(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace d43::cli
