#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "d43sca/bnatural.hpp"
#include "d43sca/d43.hpp"
#include "d43sca/word_sets.hpp"

using namespace d43;

namespace {

std::optional<coord> f0_pow(const crystal& c, coord b, int p) {
    for (int k = 0; k < p; ++k) {
        auto n = c.f(0, b);
        if (!n) return std::nullopt;
        b = *n;
    }
    return b;
}

}  // namespace

TEST(CrystalD43, B1ElementsAndCounts) {
    const crystal b1(1);
    const auto all = b1.enumerate();
    EXPECT_EQ(all.size(), 8u);
    EXPECT_EQ(letter_coord(letter::l3), (coord{0, 0, 2, 0, 0, 0}));
    EXPECT_EQ(letter_coord(letter::l0), (coord{0, 0, 1, 1, 0, 0}));
    EXPECT_EQ(letter_coord(letter::b3), (coord{0, 0, 0, 2, 0, 0}));
    EXPECT_EQ(letter_coord(letter::phi), (coord{0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(crystal(0).enumerate().size(), 1u);
    const auto b2 = crystal(2).enumerate();
    EXPECT_EQ(b2.size(), 35u);
    std::map<int, int> strata;
    for (const auto& b : b2) ++strata[s_of(b)];
    EXPECT_EQ(strata[0], 1);
    EXPECT_EQ(strata[1], 7);
    EXPECT_EQ(strata[2], 27);
}

TEST(CrystalD43, InvariantsOfEnumeration) {
    for (int l = 0; l <= 4; ++l) {
        for (const auto& b : crystal(l).enumerate()) {
            EXPECT_EQ((b[x3] - b[xb3]) % 2, 0);
            EXPECT_GE(s_of(b), 0);
            EXPECT_LE(s_of(b), l);
        }
    }
}

TEST(CrystalD43, B1GraphMatchesPicture) {
    const crystal c(1);
    using L = letter;
    std::set<std::tuple<L, int, L>> edges;
    for (L a : {L::l1, L::l2, L::l3, L::l0, L::b3, L::b2, L::b1, L::phi})
        for (int i = 0; i < 3; ++i)
            if (auto n = c.f(i, letter_coord(a))) edges.insert({a, i, as_letter(*n)});
    const std::set<std::tuple<L, int, L>> expected{
        {L::l1, 1, L::l2}, {L::l2, 2, L::l3}, {L::l3, 1, L::l0},  {L::l0, 1, L::b3},
        {L::b3, 2, L::b2}, {L::b2, 1, L::b1}, {L::b1, 0, L::phi}, {L::phi, 0, L::l1},
        {L::b3, 0, L::l2}, {L::b2, 0, L::l3},
    };
    EXPECT_EQ(edges, expected);
}

TEST(CrystalD43, AxiomsAndClosedForms) {
    for (int l = 0; l <= 4; ++l) {
        const crystal c(l);
        for (const auto& b : c.enumerate()) {
            for (int i = 0; i < 3; ++i) {
                if (auto n = c.f(i, b)) {
                    ASSERT_TRUE(c.e(i, *n));
                    EXPECT_EQ(*c.e(i, *n), b);
                    EXPECT_LE(std::abs(s_of(*n) - s_of(b)), 1);
                }
                if (auto n = c.e(i, b)) {
                    ASSERT_TRUE(c.f(i, *n));
                    EXPECT_EQ(*c.f(i, *n), b);
                }
                EXPECT_EQ(c.eps(i, b), eps_by_iteration(c, i, b)) << render_coord(b) << " i=" << i;
                EXPECT_EQ(c.phi(i, b), phi_by_iteration(c, i, b)) << render_coord(b) << " i=" << i;
            }
        }
    }
}

TEST(CrystalD43, ZeroCasesAreExclusive) {
    for (int l = 1; l <= 4; ++l)
        for (const auto& b : crystal(l).enumerate()) {
            EXPECT_NO_THROW(e0_case(b));
            EXPECT_NO_THROW(f0_case(b));
        }
}

TEST(CrystalD43, VacuumZeroString) {
    for (int l = 1; l <= 4; ++l) {
        const crystal c(l);
        EXPECT_EQ(c.phi(0, u(l)), 0);
        EXPECT_EQ(c.eps(0, u(l)), 2 * l);
        EXPECT_EQ(c.eps(1, letter_coord(letter::phi)), 0);
    }
}

TEST(CrystalD43, ZeroStringFamilies) {
    for (int l = 2; l <= 6; ++l) {
        const crystal c(l);
        auto check = [&](coord start, int p_end1, auto first, int p_end2, auto second) {
            for (int p = 0; p <= p_end1; ++p) {
                auto got = f0_pow(c, start, p);
                ASSERT_TRUE(got) << "l=" << l << " p=" << p;
                EXPECT_EQ(*got, first(p)) << "l=" << l << " p=" << p << " from " << render_coord(start);
            }
            for (int p = p_end1 + 1; p <= p_end2; ++p) {
                auto got = f0_pow(c, start, p);
                ASSERT_TRUE(got) << "l=" << l << " p=" << p;
                EXPECT_EQ(*got, second(p)) << "l=" << l << " p=" << p << " from " << render_coord(start);
            }
        };
        check({0, 0, 0, 0, 0, l}, l, [&](int p) { return coord{0, 0, 0, 0, 0, l - p}; }, 2 * l,
              [&](int p) { return coord{p - l, 0, 0, 0, 0, 0}; });
        check({0, 0, 1, 1, 0, l - 1}, l - 1, [&](int p) { return coord{0, 0, 1, 1, 0, l - 1 - p}; },
              2 * l - 2, [&](int p) { return coord{p - l + 1, 0, 1, 1, 0, 0}; });
        check({0, 0, 0, 2, 0, l - 1}, l - 1, [&](int p) { return coord{0, 0, 0, 2, 0, l - 1 - p}; },
              2 * l - 1, [&](int p) { return coord{p - l, 1, 0, 0, 0, 0}; });
        check({0, 1, 0, 0, 0, l - 1}, l - 2, [&](int p) { return coord{0, 1, 0, 0, 0, l - 1 - p}; },
              2 * l - 3, [&](int p) { return coord{p - l + 1, 1, 1, 1, 0, 0}; });
        check({1, 0, 0, 0, 0, l - 1}, l - 2, [&](int p) { return coord{1, 0, 0, 0, 0, l - 1 - p}; },
              2 * l - 4, [&](int p) { return coord{p - l + 3, 0, 0, 0, 0, 1}; });
    }
}

TEST(CrystalD43, ClassicalHighest) {
    const crystal b1(1);
    auto hw = classical_highest(b1, b1.enumerate(), {1, 2});
    std::set<letter> got;
    for (const auto& b : hw) got.insert(as_letter(b));
    EXPECT_EQ(got, (std::set<letter>{letter::l1, letter::phi}));
    for (int l = 1; l <= 4; ++l) {
        const crystal c(l);
        auto h = classical_highest(c, c.enumerate(), {1, 2});
        std::set<coord> expect;
        for (int n = 0; n <= l; ++n) expect.insert({n, 0, 0, 0, 0, 0});
        EXPECT_EQ(std::set<coord>(h.begin(), h.end()), expect);
    }
}

TEST(CrystalD43, Words) {
    EXPECT_EQ(word_coord(parse_word("12230b1b1")), (coord{1, 2, 3, 1, 0, 2}));
    EXPECT_EQ(render_word(coord_word({1, 2, 3, 1, 0, 2})), "12230b1b1");
    EXPECT_EQ(word_coord({}), (coord{0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(render_word(coord_word(coord{})), "e");
    for (int l = 0; l <= 5; ++l)
        for (const auto& b : crystal(l).enumerate()) {
            const auto w = coord_word(b);
            EXPECT_TRUE(is_row(w));
            EXPECT_EQ(word_coord(w), b);
            EXPECT_EQ(word_coord(parse_word(render_word(w))), b);
        }
}

TEST(CrystalD43, LetterIo) {
    EXPECT_EQ(render_cells(parse_cells("b20b3e1")), "b20b3e1");
    EXPECT_EQ(render_cells(parse_cells("b1"), true), to_unicode(letter::b1));
    EXPECT_EQ(parse_letter("b2"), letter::b2);
    EXPECT_FALSE(parse_letter("7"));
}

TEST(BNatural, SizeAndHighest) {
    const bnat_crystal c;
    const auto all = c.enumerate();
    EXPECT_EQ(all.size(), 29u);
    const auto top = c.highest();
    EXPECT_EQ(render(top), "t(12)");
    EXPECT_FALSE(c.e(1, top));
    EXPECT_FALSE(c.e(2, top));
}

TEST(BNatural, ZeroChain) {
    const bnat_crystal c;
    auto step = [&](const std::string& from) { return render(*c.f(0, parse_bnat(from))); };
    EXPECT_EQ(step("t(b3b1)"), "(b3)1");
    EXPECT_EQ(step("(b3)1"), "(2)2");
    EXPECT_EQ(step("(2)2"), "t(12)");
}

TEST(BNatural, ColumnComponentIsB12) {
    const bnat_crystal c;
    const auto comp = component(c, c.highest(), {1, 2});
    EXPECT_EQ(comp.size(), 14u);
    std::set<std::string> words;
    for (const auto& x : comp) {
        ASSERT_EQ(x.k, bnat::kind::column);
        words.insert(words::encode({x.a, x.b}));
    }
    const auto& table = words::table(words::set_tag::b12);
    EXPECT_EQ(words, std::set<std::string>(table.begin(), table.end()));
}

TEST(BNatural, Axioms) {
    const bnat_crystal c;
    for (const auto& b : c.enumerate())
        for (int i = 0; i < 3; ++i)
            if (auto n = c.f(i, b)) {
                ASSERT_TRUE(c.e(i, *n));
                EXPECT_EQ(*c.e(i, *n), b);
            }
}
