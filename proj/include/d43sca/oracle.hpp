#pragma once

// Combinatorial R and energy by graph search: start from an anchor pair,
// walk every arrow of B x B' and B' x B in lockstep.

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"

namespace d43 {

template <Crystal A, Crystal B>
struct iso_table {
    using source = std::pair<typename A::element, typename B::element>;
    using image = std::pair<typename B::element, typename A::element>;
    struct entry {
        image img;
        int H;
        friend bool operator==(const entry&, const entry&) = default;
    };
    std::map<source, entry> map;
    std::vector<source> unreached;

    const entry& at(const source& s) const {
        auto it = map.find(s);
        if (it == map.end()) throw std::out_of_range("pair not reached by the oracle");
        return it->second;
    }
};

// Energy change along e_0: +1 if e_0 acts on the left factor on both sides,
// -1 if on the right factor on both sides, 0 otherwise.
template <Crystal A, Crystal B>
int energy_step(const tensor<A, B>& src, const tensor<B, A>& dst,
                const typename tensor<A, B>::element& p, const typename tensor<B, A>::element& q) {
    const side s1 = src.e_side(0, p), s2 = dst.e_side(0, q);
    if (s1 == side::left && s2 == side::left) return 1;
    if (s1 == side::right && s2 == side::right) return -1;
    return 0;
}

template <Crystal A, Crystal B>
iso_table<A, B> graph_iso_R(const A& a, const B& b,
                            const typename iso_table<A, B>::source& anchor,
                            const typename iso_table<A, B>::image& anchor_image, int H0 = 0,
                            const std::vector<typename iso_table<A, B>::source>* domain = nullptr) {
    using T = iso_table<A, B>;
    tensor<A, B> src(a, b);
    tensor<B, A> dst(b, a);
    T out;
    out.map.emplace(anchor, typename T::entry{anchor_image, H0});
    std::deque<typename T::source> q{anchor};

    auto fail = [](const std::string& what) {
        throw std::logic_error("inconsistent isomorphism propagation: " + what);
    };

    while (!q.empty()) {
        const auto p = q.front();
        q.pop_front();
        const auto cur = out.map.at(p);
        for (int i : src.indices()) {
            for (int up = 0; up < 2; ++up) {
                auto np = up ? src.e(i, p) : src.f(i, p);
                auto ni = up ? dst.e(i, cur.img) : dst.f(i, cur.img);
                if (np.has_value() != ni.has_value()) fail("null on one side only");
                if (!np) continue;
                int H = cur.H;
                if (i == 0) {
                    if (up) H += energy_step(src, dst, p, cur.img);
                    else H -= energy_step(src, dst, *np, *ni);
                }
                typename T::entry e{*ni, H};
                auto [it, fresh] = out.map.emplace(*np, e);
                if (fresh) q.push_back(*np);
                else if (!(it->second == e)) fail("two walks disagree");
            }
        }
    }
    if (domain) {
        for (const auto& s : *domain)
            if (!out.map.count(s)) out.unreached.push_back(s);
    }
    return out;
}

}  // namespace d43
