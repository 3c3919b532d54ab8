#pragma once

// The 29-element crystal B_natural: phi, singles (a)_1, (a)_2 for a in B_1,
// and two-box columns t(ab) with ab in B(12).

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "d43.hpp"
#include "word_sets.hpp"

namespace d43 {

struct bnat {
    enum class kind : std::uint8_t { empty, single, column };
    kind k = kind::empty;
    letter a = letter::phi;
    letter b = letter::phi;  // column bottom
    int j = 0;               // subscript of a single

    static bnat empty_elem() { return {}; }
    static bnat single(letter x, int j) {
        if (x == letter::phi || (j != 1 && j != 2)) throw std::invalid_argument("bad single");
        return {kind::single, x, letter::phi, j};
    }
    static bnat column(letter top, letter bottom) {
        if (words::classify(top, bottom) != words::set_tag::b12)
            throw std::invalid_argument("column word not in B(12)");
        return {kind::column, top, bottom, 0};
    }

    friend auto operator<=>(const bnat&, const bnat&) = default;
    friend bool operator==(const bnat&, const bnat&) = default;
};

// e, (3)1, t(12)
inline std::string render(const bnat& x) {
    switch (x.k) {
        case bnat::kind::empty: return "e";
        case bnat::kind::single: return "(" + to_ascii(x.a) + ")" + std::to_string(x.j);
        case bnat::kind::column: return "t(" + to_ascii(x.a) + to_ascii(x.b) + ")";
    }
    return "?";
}

inline bnat parse_bnat(const std::string& s) {
    if (s == "e") return bnat::empty_elem();
    if (s.size() > 3 && s.rfind("t(", 0) == 0 && s.back() == ')') {
        auto cells = parse_cells(s.substr(2, s.size() - 3));
        if (cells.size() != 2) throw std::invalid_argument("column needs two letters: " + s);
        return bnat::column(cells[0], cells[1]);
    }
    if (s.size() >= 4 && s.front() == '(') {
        auto close = s.find(')');
        if (close != std::string::npos && close + 2 == s.size()) {
            auto cells = parse_cells(s.substr(1, close - 1));
            if (cells.size() == 1) return bnat::single(cells[0], s.back() - '0');
        }
    }
    throw std::invalid_argument("not an element of B_natural: " + s);
}

class bnat_crystal {
public:
    using element = bnat;

    std::vector<int> indices() const { return {0, 1, 2}; }

    std::optional<bnat> e(int i, const bnat& x) const { return act(i, x, true); }
    std::optional<bnat> f(int i, const bnat& x) const { return act(i, x, false); }
    int eps(int i, const bnat& x) const { return eps_by_iteration(*this, i, x, 64); }
    int phi(int i, const bnat& x) const { return phi_by_iteration(*this, i, x, 64); }

    std::vector<bnat> enumerate() const {
        std::vector<bnat> out{bnat::empty_elem()};
        for (int j : {1, 2})
            for (letter a : alphabet) out.push_back(bnat::single(a, j));
        for (const auto& w : words::table(words::set_tag::b12)) {
            auto v = words::decode(w);
            out.push_back(bnat::column(v[0], v[1]));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bnat highest() const { return bnat::column(letter::l1, letter::l2); }

    // The 0-arrows b -> f_0 b.
    static const std::vector<std::pair<bnat, bnat>>& zero_arrows() {
        static const std::vector<std::pair<bnat, bnat>> arrows = [] {
            using L = letter;
            auto c = bnat::column;
            auto s = bnat::single;
            return std::vector<std::pair<bnat, bnat>>{
                {c(L::b3, L::b1), s(L::b3, 1)}, {s(L::b3, 1), s(L::l2, 2)}, {s(L::l2, 2), c(L::l1, L::l2)},
                {c(L::b2, L::b1), s(L::b2, 1)}, {s(L::b2, 1), s(L::l3, 2)}, {s(L::l3, 2), c(L::l1, L::l3)},
                {c(L::b3, L::b2), s(L::l0, 1)}, {s(L::l0, 1), s(L::l1, 2)},
                {s(L::b1, 1), s(L::l0, 2)},     {s(L::l0, 2), c(L::l2, L::l3)},
                {s(L::b1, 2), bnat::empty_elem()}, {bnat::empty_elem(), s(L::l1, 1)},
                {c(L::l0, L::b2), s(L::l3, 1)}, {s(L::b3, 2), c(L::l2, L::l0)},
                {c(L::l0, L::b3), s(L::l2, 1)}, {s(L::b2, 2), c(L::l3, L::l0)},
            };
        }();
        return arrows;
    }

private:
    std::optional<bnat> act(int i, const bnat& x, bool up) const {
        if (i == 0) {
            for (const auto& [src, dst] : zero_arrows()) {
                if (!up && src == x) return dst;
                if (up && dst == x) return src;
            }
            return std::nullopt;
        }
        if (i != 1 && i != 2) throw std::invalid_argument("index out of range");
        const crystal b1(1);
        auto op = [&](letter a) -> std::optional<letter> {
            auto r = up ? b1.e(i, letter_coord(a)) : b1.f(i, letter_coord(a));
            if (!r) return std::nullopt;
            return as_letter(*r);
        };
        switch (x.k) {
            case bnat::kind::empty: return std::nullopt;
            case bnat::kind::single: {
                auto r = op(x.a);
                if (!r) return std::nullopt;
                return bnat::single(*r, x.j);
            }
            case bnat::kind::column: {
                const tensor<crystal, crystal> tt(b1, b1);
                const auto p = std::make_pair(letter_coord(x.a), letter_coord(x.b));
                auto r = up ? tt.e(i, p) : tt.f(i, p);
                if (!r) return std::nullopt;
                return bnat::column(as_letter(r->first), as_letter(r->second));
            }
        }
        return std::nullopt;
    }
};

}  // namespace d43
