#pragma once

// The classified word sets of the G_2 column insertion and the positional
// bijections xi : B(10) -> B(1), eta : B(121) -> B(112).

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d43.hpp"

namespace d43::words {

// Compact encoding used by the tables: 1 2 3 0 a b c for 1 2 3 0 3b 2b 1b.
inline char code(letter a) {
    static constexpr char c[] = "1230abc";
    if (a == letter::phi) throw std::invalid_argument("phi has no word code");
    return c[static_cast<int>(a)];
}

inline letter from_code(char ch) {
    static constexpr std::string_view c = "1230abc";
    auto k = c.find(ch);
    if (k == std::string_view::npos) throw std::invalid_argument("bad word code");
    return static_cast<letter>(k);
}

inline std::string encode(const std::vector<letter>& w) {
    std::string s;
    for (letter a : w) s += code(a);
    return s;
}

inline std::vector<letter> decode(std::string_view s) {
    std::vector<letter> w;
    for (char ch : s) w.push_back(from_code(ch));
    return w;
}

enum class set_tag { b1, b10, b12, b11, b112, b121, none };

inline std::string tag_name(set_tag t) {
    switch (t) {
        case set_tag::b1: return "B(1)";
        case set_tag::b10: return "B(10)";
        case set_tag::b12: return "B(12)";
        case set_tag::b11: return "B(11)";
        case set_tag::b112: return "B(112)";
        case set_tag::b121: return "B(121)";
        case set_tag::none: return "none";
    }
    return "none";
}

namespace detail {
inline std::vector<std::string> split(std::string_view s) {
    std::istringstream is{std::string(s)};
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}
}  // namespace detail

inline const std::vector<std::string>& table(set_tag t) {
    static const std::vector<std::string> b1 = detail::split("1 2 3 0 a b c");
    static const std::vector<std::string> b10 = detail::split("10 1a 1b 2b 2c 3c 0c");
    static const std::vector<std::string> b12 =
        detail::split("12 13 23 20 2a 30 3a 3b 00 0a 0b ab ac bc");
    static const std::vector<std::string> b11 = detail::split(
        "11 21 22 31 32 33 01 02 03 a1 a2 a3 a0 aa b1 b2 b3 b0 ba bb c1 c2 c3 c0 ca cb cc");
    static const std::vector<std::string> b112 = detail::split(
        "112 113 212 213 223 220 22a 312 313 323 320 "
        "32a 330 33a 33b 012 013 023 020 02a 030 03a "
        "03b a12 a13 a23 a20 a2a a30 a3a a3b a00 a0a "
        "a0b aab aac b12 b13 b23 b20 b2a b30 b3a b3b "
        "b00 b0a b0b bab bac bbc c12 c13 c23 c20 c2a "
        "c30 c3a c3b c00 c0a c0b cab cac cbc");
    static const std::vector<std::string> b121 = detail::split(
        "121 131 122 231 201 2a1 2a2 132 133 301 3a1 "
        "3a2 3b1 3b2 3b3 232 233 001 0a1 0a2 0b1 0b2 "
        "0b3 202 203 2a3 2a0 2aa ab1 ab2 ab3 ac1 ac2 "
        "ac3 ac0 aca 302 303 3a3 3a0 3aa 3b0 3ba 3bb "
        "bc1 bc2 bc3 bc0 bca bcb 002 003 0a3 0a0 0aa "
        "0b0 0ba 0bb ab0 aba abb acb acc bcc");
    static const std::vector<std::string> none;
    switch (t) {
        case set_tag::b1: return b1;
        case set_tag::b10: return b10;
        case set_tag::b12: return b12;
        case set_tag::b11: return b11;
        case set_tag::b112: return b112;
        case set_tag::b121: return b121;
        case set_tag::none: return none;
    }
    return none;
}

inline constexpr std::array<set_tag, 6> all_tags{set_tag::b1,  set_tag::b10,  set_tag::b12,
                                                 set_tag::b11, set_tag::b112, set_tag::b121};

namespace detail {
inline const std::map<std::string, set_tag>& index() {
    static const auto m = [] {
        std::map<std::string, set_tag> out;
        for (auto t : all_tags)
            for (const auto& w : table(t))
                if (!out.emplace(w, t).second) throw std::logic_error("word sets overlap at " + w);
        return out;
    }();
    return m;
}

inline std::map<std::string, std::string> positional(set_tag from, set_tag to) {
    const auto& a = table(from);
    const auto& b = table(to);
    std::map<std::string, std::string> m;
    for (std::size_t k = 0; k < a.size(); ++k) m.emplace(a[k], b[k]);
    return m;
}

inline const std::string& lookup(const std::map<std::string, std::string>& m,
                                 const std::string& key, const char* what) {
    auto it = m.find(key);
    if (it == m.end()) throw std::invalid_argument(std::string(what) + ": word " + key + " outside domain");
    return it->second;
}
}  // namespace detail

inline set_tag classify(std::string_view coded) {
    auto it = detail::index().find(std::string(coded));
    return it == detail::index().end() ? set_tag::none : it->second;
}

inline set_tag classify(const std::vector<letter>& w) {
    for (letter a : w)
        if (a == letter::phi) return set_tag::none;
    return classify(encode(w));
}

inline set_tag classify(letter a, letter b) { return classify(std::vector<letter>{a, b}); }

inline letter xi(letter a, letter b) {
    static const auto m = detail::positional(set_tag::b10, set_tag::b1);
    return from_code(detail::lookup(m, encode({a, b}), "xi")[0]);
}

inline std::array<letter, 2> xi_inv(letter g) {
    static const auto m = detail::positional(set_tag::b1, set_tag::b10);
    const auto& w = detail::lookup(m, std::string(1, code(g)), "xi_inv");
    return {from_code(w[0]), from_code(w[1])};
}

inline std::array<letter, 3> eta(letter a, letter b, letter c) {
    static const auto m = detail::positional(set_tag::b121, set_tag::b112);
    const auto& w = detail::lookup(m, encode({a, b, c}), "eta");
    return {from_code(w[0]), from_code(w[1]), from_code(w[2])};
}

inline std::array<letter, 3> eta_inv(letter a, letter b, letter c) {
    static const auto m = detail::positional(set_tag::b112, set_tag::b121);
    const auto& w = detail::lookup(m, encode({a, b, c}), "eta_inv");
    return {from_code(w[0]), from_code(w[1]), from_code(w[2])};
}

}  // namespace d43::words
