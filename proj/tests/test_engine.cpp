#include <gtest/gtest.h>

#include <set>

#include "hexa/engine.hpp"

using namespace hexa;

TEST(Inflation, SectorCountsArePowersOfFour) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        for (int l = 0; l < s.size(); l += 5) {
            Patch one{name, {{Point{0, 0}, l}}};
            for (int m = 0; m <= 5; ++m) EXPECT_EQ(inflate(s, one, m).size(), std::size_t{1} << (2 * m));
        }
    }
}

TEST(Inflation, PowersCompose) {
    const System& s = load_system("taylor");
    Patch one{"taylor", {{Point{0, 0}, s.parse_label("C:0:+")}, {Point{1, 0}, 7}}};
    EXPECT_EQ(inflate(s, inflate(s, one, 2), 1), inflate(s, one, 3));
}

TEST(Inflation, DigitsTileTheSupertile) {
    for (int m = 0; m <= 5; ++m) {
        auto d = sector_digits(m);
        std::set<Point> uniq(d.begin(), d.end());
        EXPECT_EQ(uniq.size(), std::size_t{1} << (2 * m));
        // distinct residues mod 2^m
        std::set<Point> res;
        std::int64_t s = std::int64_t{1} << m;
        for (Point w : d) res.insert({((w.a % s) + s) % s, ((w.b % s) + s) % s});
        EXPECT_EQ(res.size(), d.size());
    }
}

TEST(Inflation, DescendantMatchesInflation) {
    const System& s = load_system("penrose");
    int l = s.seeds()[0];
    Patch big = inflate(s, Patch{"penrose", {{Point{0, 0}, l}}}, 4);
    for (Point w : sector_digits(4)) EXPECT_EQ(sector_descendant(s, l, 4, w), big.at(w));
}

TEST(Inflation, FixedPointsAreNestedBalls) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        for (int seed : s.seeds()) {
            Patch p5 = fixed_point_patch(s, seed, 5), p4 = fixed_point_patch(s, seed, 4);
            EXPECT_EQ(static_cast<std::int64_t>(p5.size()), hex_ball_size(31));
            EXPECT_EQ(restrict_to(p5, hex_ball(15)), p4);
            EXPECT_EQ(p5.at({0, 0}), seed);
        }
    }
}

TEST(Inflation, PseudoContainsSector) {
    const System& s = load_system("taylor");
    Patch p = fixed_point_patch(s, s.seeds()[0], 3);
    Patch sec = inflate(s, p, 1), pse = pseudo_inflate(s, p, 1);
    for (const auto& [q, l] : sec.cells) EXPECT_EQ(pse.at(q), l);
    EXPECT_GT(pse.size(), sec.size());
}

TEST(Inflation, BadSeedIsRejected) {
    const System& s = load_system("halfhex");
    std::vector<int> non;
    for (int l = 0; l < s.size(); ++l)
        if (s.child[l][0] != l) non.push_back(l);
    for (int l : non) EXPECT_THROW(fixed_point_patch(s, l, 2), std::invalid_argument);
    EXPECT_THROW(inflate(s, Patch{"halfhex", {{Point{0, 0}, 9}}}, 1), std::invalid_argument);
}

TEST(Consistency, PseudoInflationIsConsistent) {
    for (const auto& name : kSystemNames) {
        auto rep = verify_pseudo_consistency(load_system(name));
        EXPECT_GT(rep.pairs_checked, 0u);
        EXPECT_TRUE(rep.conflicts.empty()) << name;
    }
}

TEST(Consistency, MutatedRuleConflicts) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        auto pairs = legal_pairs(s, 5);
        System bad = s;
        // an overlap cell (outside the sector) of one label
        bad.child[0][5] = (bad.child[0][5] + 1) % bad.size();
        auto rep = verify_pseudo_consistency(bad, pairs);
        EXPECT_FALSE(rep.conflicts.empty()) << name;
    }
}

TEST(Consistency, BorderForcing) {
    for (const auto& name : kSystemNames) {
        auto bf = verify_border_forcing(load_system(name), 4);
        EXPECT_TRUE(bf.holds) << name;
        EXPECT_GE(bf.minimal_order, 1);
        EXPECT_LE(bf.minimal_order, 4);
    }
}

TEST(Consistency, Primitive) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        EXPECT_TRUE(is_primitive(s)) << name;
        auto m = substitution_matrix(s);
        for (int j = 0; j < s.size(); ++j) {
            int col = 0;
            for (int i = 0; i < s.size(); ++i) col += m[i][j];
            EXPECT_EQ(col, kSectorSize);
        }
    }
}

TEST(Atlas, LegalBallsAreD6Closed) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        Atlas a = legal_patches(s, 1);
        EXPECT_FALSE(a.balls.empty());
        auto offsets = hex_ball(1);
        for (const Patch& p : a.patches(name))
            for (D6 g : D6::all()) ASSERT_TRUE(a.contains(ball_key(transform(p, g, &s), {0, 0}, offsets))) << name;
    }
}

TEST(Atlas, FixedPointBallsAreLegal) {
    const System& s = load_system("arrowed");
    Atlas a = legal_patches(s, 2);
    auto offsets = hex_ball(2);
    for (int seed : s.seeds()) {
        Patch p = fixed_point_patch(s, seed, 5);
        for (Point c : hex_ball(29)) EXPECT_TRUE(a.contains(ball_key(p, c, offsets)));
    }
}

TEST(Atlas, EveryLabelOccurs) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        EXPECT_EQ(static_cast<int>(legal_patches(s, 0).balls.size()), s.size()) << name;
    }
    // each hexagon of the covers is a pair of half-hex prototiles
    EXPECT_EQ(2 * legal_patches(load_system("taylor"), 0).balls.size(), 168u);
}
