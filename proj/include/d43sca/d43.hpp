#pragma once

// D4^(3) crystals B_l in the coordinate representation
// b = (x1, x2, x3, xb3, xb2, xb1), x3 = xb3 mod 2, s(b) <= l.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crystal.hpp"

namespace d43 {

using coord = std::array<int, 6>;

// Alphabet order 1 < 2 < 3 < 0 < 3b < 2b < 1b; phi is the empty element of B_1.
enum class letter : std::uint8_t { l1, l2, l3, l0, b3, b2, b1, phi };

inline constexpr std::array<letter, 7> alphabet{letter::l1, letter::l2, letter::l3, letter::l0,
                                                letter::b3, letter::b2, letter::b1};

inline constexpr int x1 = 0, x2 = 1, x3 = 2, xb3 = 3, xb2 = 4, xb1 = 5;

inline int s_of(const coord& b) { return b[x1] + b[x2] + (b[x3] + b[xb3]) / 2 + b[xb2] + b[xb1]; }

inline bool valid(const coord& b, int l) {
    return std::all_of(b.begin(), b.end(), [](int v) { return v >= 0; }) &&
           (b[x3] - b[xb3]) % 2 == 0 && s_of(b) <= l;
}

struct zvals {
    int z1, z2, z3, z4;
};

inline zvals zs(const coord& b) {
    return {b[xb1] - b[x1], b[xb2] - b[xb3], b[x3] - b[x2], (b[xb3] - b[x3]) / 2};
}

inline coord letter_coord(letter a) {
    switch (a) {
        case letter::l1: return {1, 0, 0, 0, 0, 0};
        case letter::l2: return {0, 1, 0, 0, 0, 0};
        case letter::l3: return {0, 0, 2, 0, 0, 0};
        case letter::l0: return {0, 0, 1, 1, 0, 0};
        case letter::b3: return {0, 0, 0, 2, 0, 0};
        case letter::b2: return {0, 0, 0, 0, 1, 0};
        case letter::b1: return {0, 0, 0, 0, 0, 1};
        case letter::phi: return {0, 0, 0, 0, 0, 0};
    }
    throw std::invalid_argument("bad letter");
}

inline std::optional<letter> coord_letter(const coord& b) {
    for (int k = 0; k < 8; ++k)
        if (letter_coord(static_cast<letter>(k)) == b) return static_cast<letter>(k);
    return std::nullopt;
}

inline letter as_letter(const coord& b) {
    if (auto a = coord_letter(b)) return *a;
    throw std::invalid_argument("coordinate is not an element of B_1");
}

// ASCII: 1 2 3 0 b3 b2 b1, and e for phi.
inline std::string to_ascii(letter a) {
    static const char* names[] = {"1", "2", "3", "0", "b3", "b2", "b1", "e"};
    return names[static_cast<int>(a)];
}

inline std::string to_unicode(letter a) {
    static const char* names[] = {"1", "2", "3", "0", "3̄", "2̄", "1̄", "φ"};
    return names[static_cast<int>(a)];
}

inline std::optional<letter> parse_letter(std::string_view t) {
    if (t == "1") return letter::l1;
    if (t == "2") return letter::l2;
    if (t == "3") return letter::l3;
    if (t == "0") return letter::l0;
    if (t == "b3") return letter::b3;
    if (t == "b2") return letter::b2;
    if (t == "b1") return letter::b1;
    if (t == "e") return letter::phi;
    return std::nullopt;
}

// Cells written without separators: "2b331e". A 'b' always takes the next digit.
inline std::vector<letter> parse_cells(std::string_view s) {
    std::vector<letter> out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == ' ') continue;
        std::string_view tok = s.substr(k, 1);
        if (s[k] == 'b') {
            if (k + 1 >= s.size()) throw std::invalid_argument("dangling 'b' in cells");
            tok = s.substr(k, 2);
            ++k;
        }
        auto a = parse_letter(tok);
        if (!a) throw std::invalid_argument("unknown letter '" + std::string(tok) + "'");
        out.push_back(*a);
    }
    return out;
}

inline std::string render_cells(const std::vector<letter>& cells, bool unicode = false) {
    std::string s;
    for (letter a : cells) s += unicode ? to_unicode(a) : to_ascii(a);
    return s;
}

// One-row tableau. Words never contain phi; the empty word is (phi).
using word = std::vector<letter>;

inline coord word_coord(const word& w) {
    coord b{};
    for (letter a : w) {
        if (a == letter::phi) throw std::invalid_argument("phi inside a word");
        auto c = letter_coord(a);
        for (int k = 0; k < 6; ++k) b[k] += c[k];
    }
    return b;
}

// w_0 = x3 mod 2, w_3 = (x3 - w_0)/2, wb_3 = (xb3 - w_0)/2
inline word coord_word(const coord& b) {
    const int w0 = b[x3] % 2;
    word w;
    w.insert(w.end(), b[x1], letter::l1);
    w.insert(w.end(), b[x2], letter::l2);
    w.insert(w.end(), (b[x3] - w0) / 2, letter::l3);
    w.insert(w.end(), w0, letter::l0);
    w.insert(w.end(), (b[xb3] - w0) / 2, letter::b3);
    w.insert(w.end(), b[xb2], letter::b2);
    w.insert(w.end(), b[xb1], letter::b1);
    return w;
}

inline bool is_row(const word& w) {
    int zeros = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == letter::phi) return false;
        if (w[k] == letter::l0) ++zeros;
        if (k && w[k] < w[k - 1]) return false;
    }
    return zeros <= 1;
}

inline std::string render_word(const word& w) { return w.empty() ? "e" : render_cells(w); }

inline word parse_word(std::string_view s) {
    if (s == "e") return {};
    auto w = parse_cells(s);
    if (!is_row(w)) throw std::invalid_argument("not a one-row tableau: " + std::string(s));
    return w;
}

inline std::string render_coord(const coord& b) {
    std::string s = "(";
    for (int k = 0; k < 6; ++k) s += (k ? "," : "") + std::to_string(b[k]);
    return s + ")";
}

// Moves applied by f_0 in the six cases (e_0 subtracts them).
inline constexpr std::array<coord, 6> zero_moves{{{1, 0, 0, 0, 0, 0},
                                                  {0, 0, 1, 1, 0, -1},
                                                  {0, 0, 2, 0, -1, 0},
                                                  {0, 1, 0, -2, 0, 0},
                                                  {1, 0, -1, -1, 0, 0},
                                                  {0, 0, 0, 0, 0, -1}}};

namespace detail {
inline int pos(int v) { return std::max(v, 0); }
inline int neg(int v) { return std::min(v, 0); }
}  // namespace detail

// Guarded clauses for f_0, top to bottom; returns the case index 0..5.
// Exactly one clause holds on every element; anything else is a transcription bug.
inline int f0_case(const coord& b) {
    using detail::neg;
    using detail::pos;
    const auto [z1, z2, z3, z4] = zs(b);
    const bool c[6] = {
        z1 + pos(z2 + pos(3 * z4 + pos(z3))) <= 0,
        z2 + pos(3 * z4 + pos(z1 + z3)) <= 0 && 0 < z1,
        3 * z4 + pos(z3 + pos(z1)) <= 0 && 0 < z2 + neg(z1),
        3 * z4 + neg(z2 + neg(z1)) > 0 && 0 >= z3 + pos(z1),
        z3 + neg(3 * z4 + neg(z1 + z2)) > 0 && 0 >= z1,
        z1 + neg(z3 + neg(3 * z4 + neg(z2))) > 0,
    };
    int hit = -1;
    for (int k = 0; k < 6; ++k) {
        if (!c[k]) continue;
        if (hit >= 0) throw std::logic_error("f_0 cases overlap at " + render_coord(b));
        hit = k;
    }
    if (hit < 0) throw std::logic_error("no f_0 case at " + render_coord(b));
    return hit;
}

inline int e0_case(const coord& b) {
    using detail::neg;
    using detail::pos;
    const auto [z1, z2, z3, z4] = zs(b);
    const bool c[6] = {
        z1 + pos(z2 + pos(3 * z4 + pos(z3))) < 0,
        z2 + pos(3 * z4 + pos(z1 + z3)) < 0 && 0 <= z1,
        3 * z4 + pos(z3 + pos(z1)) < 0 && 0 <= z2 + neg(z1),
        3 * z4 + neg(z2 + neg(z1)) >= 0 && 0 > z3 + pos(z1),
        z3 + neg(3 * z4 + neg(z1 + z2)) >= 0 && 0 > z1,
        z1 + neg(z3 + neg(3 * z4 + neg(z2))) >= 0,
    };
    int hit = -1;
    for (int k = 0; k < 6; ++k) {
        if (!c[k]) continue;
        if (hit >= 0) throw std::logic_error("e_0 cases overlap at " + render_coord(b));
        hit = k;
    }
    if (hit < 0) throw std::logic_error("no e_0 case at " + render_coord(b));
    return hit;
}

// The six branches whose maximum gives phi_0 - (l - s).
inline std::array<int, 6> zero_branches(const coord& b) {
    const auto [z1, z2, z3, z4] = zs(b);
    return {0, z1, z1 + z2, z1 + z2 + 3 * z4, z1 + z2 + z3 + 3 * z4, 2 * z1 + z2 + z3 + 3 * z4};
}

class crystal {
public:
    using element = coord;

    explicit crystal(int l) : l_(l) {
        if (l < 0) throw std::invalid_argument("level must be >= 0");
    }
    int level() const { return l_; }
    std::vector<int> indices() const { return {0, 1, 2}; }

    std::optional<coord> e(int i, const coord& b) const {
        coord r = b;
        switch (i) {
            case 0: {
                const auto& m = zero_moves[e0_case(b)];
                for (int k = 0; k < 6; ++k) r[k] -= m[k];
                break;
            }
            case 1: {
                const int d = b[xb2] - b[xb3], u = b[x2] - b[x3];
                if (d >= detail::pos(u)) { ++r[xb2]; --r[xb1]; }
                else if (d < 0 && 0 <= -u) { ++r[x3]; --r[xb3]; }
                else { ++r[x1]; --r[x2]; }
                break;
            }
            case 2:
                if (b[xb3] >= b[x3]) { r[xb3] += 2; --r[xb2]; }
                else { ++r[x2]; r[x3] -= 2; }
                break;
            default: throw std::invalid_argument("index out of range");
        }
        return valid(r, l_) ? std::optional<coord>(r) : std::nullopt;
    }

    std::optional<coord> f(int i, const coord& b) const {
        coord r = b;
        switch (i) {
            case 0: {
                const auto& m = zero_moves[f0_case(b)];
                for (int k = 0; k < 6; ++k) r[k] += m[k];
                break;
            }
            case 1: {
                const int d = b[xb2] - b[xb3], u = b[x2] - b[x3];
                if (detail::pos(d) <= u) { --r[x1]; ++r[x2]; }
                else if (d <= 0 && 0 < -u) { --r[x3]; ++r[xb3]; }
                else { --r[xb2]; ++r[xb1]; }
                break;
            }
            case 2:
                if (b[xb3] <= b[x3]) { --r[x2]; r[x3] += 2; }
                else { r[xb3] -= 2; ++r[xb2]; }
                break;
            default: throw std::invalid_argument("index out of range");
        }
        return valid(r, l_) ? std::optional<coord>(r) : std::nullopt;
    }

    int phi(int i, const coord& b) const {
        using detail::pos;
        switch (i) {
            case 0: {
                auto t = zero_branches(b);
                return l_ - s_of(b) + *std::max_element(t.begin(), t.end());
            }
            case 1: return b[x1] + pos(b[x3] - b[x2] + pos(b[xb2] - b[xb3]));
            case 2: return b[x2] + pos(b[xb3] - b[x3]) / 2;
        }
        throw std::invalid_argument("index out of range");
    }

    int eps(int i, const coord& b) const {
        using detail::pos;
        switch (i) {
            case 0: {
                const auto [z1, z2, z3, z4] = zs(b);
                return phi(0, b) - (2 * z1 + z2 + z3 + 3 * z4);
            }
            case 1: return b[xb1] + pos(b[xb3] - b[xb2] + pos(b[x2] - b[x3]));
            case 2: return b[xb2] + pos(b[x3] - b[xb3]) / 2;
        }
        throw std::invalid_argument("index out of range");
    }

    // Lexicographic on coordinates.
    std::vector<coord> enumerate() const {
        std::vector<coord> out;
        const int m = 2 * l_;
        coord b{};
        for (b[0] = 0; b[0] <= l_; ++b[0])
            for (b[1] = 0; b[1] <= l_; ++b[1])
                for (b[2] = 0; b[2] <= m; ++b[2])
                    for (b[3] = 0; b[3] <= m; ++b[3])
                        for (b[4] = 0; b[4] <= l_; ++b[4])
                            for (b[5] = 0; b[5] <= l_; ++b[5])
                                if (valid(b, l_)) out.push_back(b);
        return out;
    }

    coord highest() const { return {l_, 0, 0, 0, 0, 0}; }

private:
    int l_;
};

inline coord u(int l) { return {l, 0, 0, 0, 0, 0}; }

}  // namespace d43
