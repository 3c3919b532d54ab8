#pragma once

// G_2 column insertion restricted to shapes (n) and (n+1, 1).

#include <stdexcept>
#include <string>
#include <vector>

#include "d43.hpp"
#include "word_sets.hpp"

namespace d43 {

// Columns left to right, each column top to bottom. Only the leftmost column
// may have height 2. No columns is the empty tableau.
struct tableau {
    std::vector<std::vector<letter>> cols;

    bool empty() const { return cols.empty(); }
    int q() const { return !cols.empty() && cols.front().size() == 2 ? 1 : 0; }
    int first_row_length() const { return static_cast<int>(cols.size()); }
    int size() const { return static_cast<int>(cols.size()) + q(); }

    std::vector<letter> first_row() const {
        std::vector<letter> r;
        for (const auto& c : cols) r.push_back(c.front());
        return r;
    }
    std::vector<letter> second_row() const {
        if (q()) return {cols.front()[1]};
        return {};
    }

    static tableau row(const std::vector<letter>& w) {
        tableau t;
        for (letter a : w) {
            if (a == letter::phi) throw std::invalid_argument("phi inside a tableau row");
            t.cols.push_back({a});
        }
        return t;
    }

    friend bool operator==(const tableau&, const tableau&) = default;
};

inline void check_shape(const tableau& t) {
    for (std::size_t k = 0; k < t.cols.size(); ++k) {
        const auto& c = t.cols[k];
        if (c.empty() || c.size() > 2) throw std::invalid_argument("column height must be 1 or 2");
        if (c.size() == 2 && k > 0) throw std::invalid_argument("only shapes (n) and (n+1,1) are supported");
        if (c.size() == 2 && words::classify(c[0], c[1]) != words::set_tag::b12)
            throw std::invalid_argument("height-2 column is not in B(12)");
    }
}

// (a -> T). Bumps move rightward until a box is appended or the insertion stops.
inline tableau insert(letter a, tableau t) {
    using words::set_tag;
    if (a == letter::phi) return t;
    letter carry = a;
    std::size_t k = 0;
    for (;;) {
        if (k == t.cols.size()) {
            t.cols.push_back({carry});
            return t;
        }
        auto& col = t.cols[k];
        if (col.size() == 1) {
            const letter top = col[0];
            if (top == letter::l1 && carry == letter::b1) {
                t.cols.erase(t.cols.begin() + static_cast<std::ptrdiff_t>(k));
                return t;
            }
            switch (words::classify(top, carry)) {
                case set_tag::b12:
                    if (k > 0) throw std::domain_error("insertion would create a second two-box column");
                    col.push_back(carry);
                    return t;
                case set_tag::b11:
                    col[0] = carry;
                    carry = top;
                    ++k;
                    break;
                case set_tag::b10:
                    carry = words::xi(top, carry);
                    t.cols.erase(t.cols.begin() + static_cast<std::ptrdiff_t>(k));
                    break;
                default:
                    throw std::domain_error("pair " + to_ascii(top) + to_ascii(carry) +
                                            " outside the insertion cases");
            }
        } else {
            if (words::classify({col[0], col[1], carry}) != set_tag::b121)
                throw std::domain_error("column insertion into a two-box column outside B(121)");
            const auto [g, a1, b1] = words::eta(col[0], col[1], carry);
            col = {a1, b1};
            carry = g;
            ++k;
        }
    }
}

// b1 * b2 for a one-row b1 and a single letter (or phi) b2.
inline tableau star(const word& b1, letter b2) { return insert(b2, tableau::row(b1)); }

// t_1 ... t_{p+2q} with T = (t_1 -> (t_2 -> ... (t_{p+2q} -> empty))).
inline std::vector<letter> reverse_bump(const tableau& t) {
    check_shape(t);
    if (!t.q()) return t.first_row();
    letter p = t.cols[0][0], q = t.cols[0][1];
    std::vector<letter> out;
    for (std::size_t k = 1; k < t.cols.size(); ++k) {
        const auto [p1, q1, r1] = words::eta_inv(t.cols[k][0], p, q);
        p = p1;
        q = q1;
        out.push_back(r1);
    }
    out.push_back(q);
    out.push_back(p);
    return out;
}

inline tableau reinsert(const std::vector<letter>& seq) {
    tableau t;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) t = insert(*it, t);
    return t;
}

// (t_1 -> (t_2 -> ... -> empty)) in ASCII; "e" stands for the empty tableau.
inline std::string render_bump_trace(const std::vector<letter>& seq, bool trailing_empty) {
    std::string s, close;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const bool last = k + 1 == seq.size();
        if (last && !trailing_empty) {
            s += to_ascii(seq[k]);
        } else {
            s += "(" + to_ascii(seq[k]) + "->";
            close += ")";
        }
    }
    if (trailing_empty || seq.empty()) s += "e";
    return s + close;
}

// Columns right to left, each column top to bottom.
inline std::vector<letter> reading_word(const tableau& t) {
    std::vector<letter> w;
    for (auto it = t.cols.rbegin(); it != t.cols.rend(); ++it)
        for (letter a : *it) w.push_back(a);
    return w;
}

inline tableau from_reading_word(const std::vector<letter>& w, int q) {
    tableau t;
    std::size_t k = 0;
    const std::size_t n = w.size();
    if (q && n < 2) throw std::invalid_argument("reading word too short for a two-row tableau");
    const std::size_t singles = q ? n - 2 : n;
    for (; k < singles; ++k) t.cols.insert(t.cols.begin(), {w[k]});
    if (q) t.cols.insert(t.cols.begin(), {w[n - 2], w[n - 1]});
    return t;
}

inline std::string render_tableau(const tableau& t, bool unicode = false) {
    if (t.empty()) return "e";
    std::string s = render_cells(t.first_row(), unicode);
    if (t.q()) s += "\n" + render_cells(t.second_row(), unicode);
    return s;
}

}  // namespace d43
