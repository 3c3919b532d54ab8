#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace d43 {

// A finite crystal. The null element 0 is std::nullopt, never a sentinel.
template <class C>
concept Crystal = requires(const C& c, int i, const typename C::element& b) {
    typename C::element;
    { c.e(i, b) } -> std::same_as<std::optional<typename C::element>>;
    { c.f(i, b) } -> std::same_as<std::optional<typename C::element>>;
    { c.eps(i, b) } -> std::convertible_to<int>;
    { c.phi(i, b) } -> std::convertible_to<int>;
    { c.indices() } -> std::convertible_to<std::vector<int>>;
};

// Counts successive applications; the cap only guards against a broken crystal.
template <Crystal C>
int eps_by_iteration(const C& c, int i, typename C::element b, int cap = 1 << 16) {
    int n = 0;
    while (auto nb = c.e(i, b)) {
        b = *nb;
        if (++n > cap) throw std::logic_error("e_i does not terminate");
    }
    return n;
}

template <Crystal C>
int phi_by_iteration(const C& c, int i, typename C::element b, int cap = 1 << 16) {
    int n = 0;
    while (auto nb = c.f(i, b)) {
        b = *nb;
        if (++n > cap) throw std::logic_error("f_i does not terminate");
    }
    return n;
}

enum class side { left, right };

template <Crystal A, Crystal B>
class tensor {
public:
    using element = std::pair<typename A::element, typename B::element>;

    tensor(A a, B b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.indices() != b_.indices())
            throw std::invalid_argument("tensor factors have different index sets");
    }

    const A& left() const { return a_; }
    const B& right() const { return b_; }
    std::vector<int> indices() const { return a_.indices(); }

    // e_i acts on the left factor iff phi_i(b) >= eps_i(b')
    side e_side(int i, const element& p) const {
        return a_.phi(i, p.first) >= b_.eps(i, p.second) ? side::left : side::right;
    }
    // f_i acts on the left factor iff phi_i(b) > eps_i(b')
    side f_side(int i, const element& p) const {
        return a_.phi(i, p.first) > b_.eps(i, p.second) ? side::left : side::right;
    }

    std::optional<element> e(int i, const element& p) const {
        if (e_side(i, p) == side::left) {
            auto x = a_.e(i, p.first);
            if (!x) return std::nullopt;
            return element{*x, p.second};
        }
        auto y = b_.e(i, p.second);
        if (!y) return std::nullopt;
        return element{p.first, *y};
    }

    std::optional<element> f(int i, const element& p) const {
        if (f_side(i, p) == side::left) {
            auto x = a_.f(i, p.first);
            if (!x) return std::nullopt;
            return element{*x, p.second};
        }
        auto y = b_.f(i, p.second);
        if (!y) return std::nullopt;
        return element{p.first, *y};
    }

    int eps(int i, const element& p) const {
        const int pa = a_.phi(i, p.first), ea = a_.eps(i, p.first), eb = b_.eps(i, p.second);
        return ea + std::max(0, eb - pa);
    }
    int phi(int i, const element& p) const {
        const int pa = a_.phi(i, p.first), eb = b_.eps(i, p.second), pb = b_.phi(i, p.second);
        return pb + std::max(0, pa - eb);
    }

private:
    A a_;
    B b_;
};

// z^d b
template <class E>
struct affine {
    int d = 0;
    E b{};
    friend auto operator<=>(const affine&, const affine&) = default;
    friend bool operator==(const affine&, const affine&) = default;
};

// Aff(B): e_0 raises d, f_0 lowers d, everything else as in B.
template <Crystal C>
class affinization {
public:
    using base_element = typename C::element;
    using element = affine<base_element>;

    explicit affinization(C c) : c_(std::move(c)) {}
    const C& base() const { return c_; }
    std::vector<int> indices() const { return c_.indices(); }

    std::optional<element> e(int i, const element& x) const {
        auto y = c_.e(i, x.b);
        if (!y) return std::nullopt;
        return element{x.d + (i == 0 ? 1 : 0), *y};
    }
    std::optional<element> f(int i, const element& x) const {
        auto y = c_.f(i, x.b);
        if (!y) return std::nullopt;
        return element{x.d - (i == 0 ? 1 : 0), *y};
    }
    int eps(int i, const element& x) const { return c_.eps(i, x.b); }
    int phi(int i, const element& x) const { return c_.phi(i, x.b); }

private:
    C c_;
};

// Signature rule on b_1 x ... x b_k, all factors from one crystal.
// The product is associative, so fold from the left.
template <Crystal C>
std::optional<std::vector<typename C::element>> word_f(const C& c, int i,
                                                       std::vector<typename C::element> w) {
    if (w.empty()) return std::nullopt;
    // phi of each prefix
    std::vector<int> pp(w.size());
    pp[0] = c.phi(i, w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) {
        const int eb = c.eps(i, w[k]), pb = c.phi(i, w[k]);
        pp[k] = pb + std::max(0, pp[k - 1] - eb);
    }
    std::size_t k = w.size() - 1;
    while (k > 0) {
        if (pp[k - 1] > c.eps(i, w[k])) --k;
        else break;
    }
    auto y = c.f(i, w[k]);
    if (!y) return std::nullopt;
    w[k] = *y;
    return w;
}

template <Crystal C>
std::optional<std::vector<typename C::element>> word_e(const C& c, int i,
                                                       std::vector<typename C::element> w) {
    if (w.empty()) return std::nullopt;
    std::vector<int> pp(w.size());
    pp[0] = c.phi(i, w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) {
        const int eb = c.eps(i, w[k]), pb = c.phi(i, w[k]);
        pp[k] = pb + std::max(0, pp[k - 1] - eb);
    }
    std::size_t k = w.size() - 1;
    while (k > 0) {
        if (pp[k - 1] >= c.eps(i, w[k])) --k;
        else break;
    }
    auto y = c.e(i, w[k]);
    if (!y) return std::nullopt;
    w[k] = *y;
    return w;
}

// Elements killed by every e_i, i in idx.
template <Crystal C>
std::vector<typename C::element> classical_highest(const C& c,
                                                   const std::vector<typename C::element>& elems,
                                                   const std::vector<int>& idx) {
    std::vector<typename C::element> out;
    for (const auto& b : elems) {
        bool hw = std::all_of(idx.begin(), idx.end(), [&](int i) { return !c.e(i, b); });
        if (hw) out.push_back(b);
    }
    return out;
}

template <Crystal C>
std::vector<int> weight(const C& c, const typename C::element& b) {
    std::vector<int> w;
    for (int i : c.indices()) w.push_back(c.phi(i, b) - c.eps(i, b));
    return w;
}

// BFS over the given arrows; sorted output.
template <Crystal C>
std::vector<typename C::element> component(const C& c, const typename C::element& seed,
                                           const std::vector<int>& idx) {
    std::set<typename C::element> seen{seed};
    std::deque<typename C::element> q{seed};
    while (!q.empty()) {
        auto b = q.front();
        q.pop_front();
        for (int i : idx) {
            for (auto nb : {c.e(i, b), c.f(i, b)}) {
                if (nb && seen.insert(*nb).second) q.push_back(*nb);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

template <Crystal C, class Name>
std::string to_dot(const C& c, const std::vector<typename C::element>& elems, Name name,
                   const std::string& graph_name = "crystal") {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (const auto& b : elems) os << "  \"" << name(b) << "\";\n";
    for (const auto& b : elems) {
        for (int i : c.indices()) {
            if (auto nb = c.f(i, b))
                os << "  \"" << name(b) << "\" -> \"" << name(*nb) << "\" [label=\"" << i
                   << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace d43
