#include <gtest/gtest.h>

#include <algorithm>

#include "hexa/engine.hpp"
#include "hexa/modelset.hpp"

using namespace hexa;

TEST(ModelSet, FixedPointsMatchTheFormula) {
    for (int seed = 0; seed < 3; ++seed) {
        auto rep = verify_against_inflation(seed, 64);
        EXPECT_EQ(rep.points, static_cast<std::size_t>(hex_ball_size(64)));
        EXPECT_TRUE(rep.discrepancies.empty()) << "seed " << seed;
    }
}

TEST(ModelSet, AddressesAreUniqueAndComplete) {
    for (int seed = 0; seed < 3; ++seed) {
        auto ac = check_addresses(seed, 64);
        EXPECT_EQ(ac.unaddressed, 0u);
        EXPECT_EQ(ac.multiple, 0u);
    }
}

TEST(ModelSet, OneMislabelIsOneDiscrepancy) {
    const System& s = load_system("halfhex");
    Patch p = fixed_point_patch(s, 1, 5);
    Point x{5, -2};
    int old = p.at(x);
    p.cells[x] = (old + 1) % 3;
    auto rep = compare_with_formula(p, 1, 20);
    ASSERT_EQ(rep.discrepancies.size(), 1u);
    EXPECT_EQ(rep.discrepancies[0].at, x);
    EXPECT_EQ(rep.discrepancies[0].expected, old);
}

TEST(ModelSet, MissingCellIsReported) {
    const System& s = load_system("halfhex");
    Patch p = fixed_point_patch(s, 0, 3);
    auto rep = compare_with_formula(p, 0, 9);
    EXPECT_EQ(rep.discrepancies.size(), static_cast<std::size_t>(hex_ball_size(9) - hex_ball_size(7)));
    for (const auto& d : rep.discrepancies) EXPECT_EQ(d.found, -1);
}

TEST(ModelSet, DoublingPreservesType) {
    for (int seed = 0; seed < 3; ++seed)
        for (int t = 0; t < 3; ++t) {
            auto h = toeplitz_points(t, seed, 12, 80);
            for (Point p : toeplitz_points(t, seed, 12, 40))
                EXPECT_TRUE(std::binary_search(h.begin(), h.end(), 2 * p));
        }
}

TEST(ModelSet, AddressReconstructsThePoint) {
    for (Point p : hex_ball(30)) {
        auto a = two_adic_address(p, 2);
        if (p == Point{0, 0}) {
            EXPECT_TRUE(a.limit);
            EXPECT_EQ(a.type, 2);
            continue;
        }
        EXPECT_FALSE(a.limit);
        Point q = 2 * a.gamma + kToeplitzOffset[a.type];
        EXPECT_EQ((std::int64_t{1} << a.level) * q, p);
    }
}

TEST(ModelSet, EveryPointHasAType) {
    auto a = toeplitz_points(0, 0, 12, 60), b = toeplitz_points(1, 0, 12, 60), c = toeplitz_points(2, 0, 12, 60);
    EXPECT_EQ(a.size() + b.size() + c.size(), static_cast<std::size_t>(hex_ball_size(60)));
}

TEST(ModelSet, BadSeed) {
    EXPECT_THROW(verify_against_inflation(3, 4), std::invalid_argument);
    EXPECT_THROW(compare_with_formula(Patch{"taylor", {}}, 0, 2), std::invalid_argument);
}

TEST(ModelSet, LatticePeriodicSubset) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        auto ps = lattice_periodic_subset(s);
        ASSERT_TRUE(ps.has_value()) << name;
        EXPECT_FALSE(ps->offsets.empty());
        for (int l = 0; l < s.size(); ++l) {
            if (s.alphabet[l].base != s.preferred) continue;
            for (std::size_t i = 0; i < ps->offsets.size(); ++i)
                EXPECT_EQ(sector_descendant(s, l, ps->k, ps->offsets[i]), ps->labels[i]);
        }
    }
}

TEST(ModelSet, PreferredTilesFormACoset) {
    for (const char* name : {"penrose", "taylor"}) {
        const System& s = load_system(name);
        std::int64_t first = 0;
        for (int k = 4; k <= 5; ++k)
            for (int seed : s.seeds()) {
                auto idx = preferred_sublattice_index(s, fixed_point_patch(s, seed, k));
                EXPECT_GT(idx, 0) << name;
                if (first == 0) first = idx;
                EXPECT_EQ(idx, first);
            }
    }
}
