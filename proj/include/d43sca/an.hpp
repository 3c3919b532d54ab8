#pragma once

// A_n^(1) crystals B_l in symmetric-tensor coordinates (x_1, ..., x_{n+1}).

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"

namespace d43::an {

using coord = std::vector<int>;

inline int level(const coord& x) { return std::accumulate(x.begin(), x.end(), 0); }

class crystal {
public:
    using element = coord;

    crystal(int n, int l) : n_(n), l_(l) {
        if (n < 1 || l < 0) throw std::invalid_argument("A_n crystal needs n >= 1, l >= 0");
    }
    int rank() const { return n_; }
    int level() const { return l_; }

    std::vector<int> indices() const {
        std::vector<int> v(n_ + 1);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    // e_0: x_1 - 1, x_{n+1} + 1;  e_i: x_i + 1, x_{i+1} - 1
    std::optional<coord> e(int i, const coord& x) const {
        coord y = x;
        if (i == 0) { --y[0]; ++y[n_]; }
        else { ++y[i - 1]; --y[i]; }
        return valid(y) ? std::optional<coord>(y) : std::nullopt;
    }
    std::optional<coord> f(int i, const coord& x) const {
        coord y = x;
        if (i == 0) { ++y[0]; --y[n_]; }
        else { --y[i - 1]; ++y[i]; }
        return valid(y) ? std::optional<coord>(y) : std::nullopt;
    }
    int eps(int i, const coord& x) const { return i == 0 ? x[0] : x[i]; }
    int phi(int i, const coord& x) const { return i == 0 ? x[n_] : x[i - 1]; }

    std::vector<coord> enumerate() const {
        std::vector<coord> out;
        coord x(n_ + 1, 0);
        fill(x, 0, l_, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    coord highest() const {
        coord x(n_ + 1, 0);
        x[0] = l_;
        return x;
    }

private:
    bool valid(const coord& y) const {
        return std::all_of(y.begin(), y.end(), [](int v) { return v >= 0; });
    }
    void fill(coord& x, int k, int rest, std::vector<coord>& out) const {
        if (k == n_) {
            x[k] = rest;
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            x[k] = v;
            fill(x, k + 1, rest - v, out);
        }
    }

    int n_, l_;
};

struct r_image {
    coord left;   // image of y, level of y
    coord right;  // image of x, level of x
    int H;
};

// Piecewise-linear R on B_l x B_l'. Indices are cyclic mod n+1.
inline r_image comb_R(const coord& x, const coord& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("comb_R: coordinates of different rank");
    const int m = static_cast<int>(x.size());  // n + 1
    auto at = [m](const coord& v, int k) { return v[((k - 1) % m + m) % m]; };
    auto Q = [&](int i) {
        int best = 0;
        for (int k = 1; k <= m; ++k) {
            int s = 0;
            for (int j = 1; j <= k - 1; ++j) s += at(x, i + j);
            for (int j = k + 1; j <= m; ++j) s += at(y, i + j);
            if (k == 1 || s < best) best = s;
        }
        return best;
    };
    std::vector<int> q(m + 1);
    for (int i = 0; i <= m; ++i) q[i] = Q(i);
    if (q[0] != q[m]) throw std::logic_error("comb_R: Q_0 != Q_{n+1}");
    r_image r{coord(m), coord(m), -q[m]};
    for (int i = 1; i <= m; ++i) {
        r.right[i - 1] = x[i - 1] + q[i] - q[i - 1];
        r.left[i - 1] = y[i - 1] + q[i - 1] - q[i];
    }
    return r;
}

inline std::pair<affine<coord>, affine<coord>> comb_R(const affine<coord>& zx,
                                                      const affine<coord>& zy) {
    auto r = comb_R(zx.b, zy.b);
    return {{zy.d + r.H, r.left}, {zx.d - r.H, r.right}};
}

// (2,1,1,0) <-> "1123"
inline std::string to_tableau(const coord& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s.append(static_cast<std::size_t>(x[i]), char('1' + i));
    return s;
}

inline coord from_tableau(const std::string& w, int n) {
    coord x(n + 1, 0);
    char prev = '0';
    for (char ch : w) {
        const int k = ch - '1';
        if (k < 0 || k > n) throw std::invalid_argument("letter out of range: " + w);
        if (ch < prev) throw std::invalid_argument("tableau row must be weakly increasing: " + w);
        prev = ch;
        ++x[k];
    }
    return x;
}

// Exhaustive (R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) at zero phases.
// Returns the counterexamples as text.
inline std::vector<std::string> yang_baxter_check(int n, int l1, int l2, int l3) {
    using A = affine<coord>;
    using triple = std::vector<A>;
    auto r12 = [](triple t) {
        auto [a, b] = comb_R(t[0], t[1]);
        t[0] = a;
        t[1] = b;
        return t;
    };
    auto r23 = [](triple t) {
        auto [a, b] = comb_R(t[1], t[2]);
        t[1] = a;
        t[2] = b;
        return t;
    };
    std::vector<std::string> bad;
    for (const auto& a : crystal(n, l1).enumerate())
        for (const auto& b : crystal(n, l2).enumerate())
            for (const auto& c : crystal(n, l3).enumerate()) {
                triple t{{0, a}, {0, b}, {0, c}};
                if (r12(r23(r12(t))) != r23(r12(r23(t))))
                    bad.push_back(to_tableau(a) + " x " + to_tableau(b) + " x " + to_tableau(c));
            }
    return bad;
}

}  // namespace d43::an
