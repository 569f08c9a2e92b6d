#include <gtest/gtest.h>

#include "hexa/derive.hpp"
#include "hexa/engine.hpp"
#include "hexa/rules.hpp"

using namespace hexa;

namespace {

std::size_t count_rule(const std::vector<Violation>& v, const std::string& rule) {
    std::size_t n = 0;
    for (const auto& x : v) n += x.rule == rule;
    return n;
}

Patch taylor_llama(int k, int seed_index = 0) {
    const System& s = load_system("taylor");
    return decorated_llama(fixed_point_patch(s, s.seeds().at(seed_index), k));
}

}  // namespace

// The marker seen from a tile along diagonal k is fixed by the half-hex
// tiling: walk back along the line of type k mod 3 to the first tile of
// another type t; the marker is (k - t) mod 3.
TEST(Rules, CapflagMatchesTheRayThroughTheHalfHexTiling) {
    const System& s = load_system("taylor");
    for (int seed : s.seeds()) {
        Patch p = fixed_point_patch(s, seed, 6);
        Patch ll = decorated_llama(p), hh = derive_halfhex(p);
        std::size_t checked = 0;
        for (Point x : hex_ball(30)) {
            int l = hh.at(x);
            for (int k = 0; k < 6; ++k) {
                int line = k % 3, t = l;
                for (int j = 1; t == line; ++j) {
                    t = hh.at(x - j * kDiagonal[k]);
                    if (t < 0) break;
                }
                if (t < 0) continue;
                ASSERT_EQ(capflag(ll.at(x), k), ((line - t) % 3 + 3) % 3) << x.a << "," << x.b << " k=" << k;
                ++checked;
            }
        }
        EXPECT_GT(checked, 10000u);
    }
}

TEST(Rules, CapflagTakesValuesOneAndTwo) {
    for (int t = 0; t < 12; ++t)
        for (int k = 0; k < 6; ++k) {
            int c = capflag(t, k);
            EXPECT_TRUE(c == 1 || c == 2);
        }
}

TEST(Rules, TaylorFixedPointsPass) {
    const System& s = load_system("taylor");
    for (std::size_t i = 0; i < s.seeds().size(); ++i)
        for (int k = 1; k <= 5; ++k) EXPECT_TRUE(check_taylor_rules(taylor_llama(k, static_cast<int>(i))).empty());
}

TEST(Rules, RulesAreD6Invariant) {
    Patch ll = taylor_llama(4);
    for (D6 g : D6::all()) {
        Patch q{kLlama, {}};
        for (const auto& [p, t] : ll.cells) q.cells.emplace(act(g, p), llama_act(g, t));
        EXPECT_TRUE(check_taylor_rules(q).empty());
    }
}

TEST(Rules, ReversedArrowBreaksR1) {
    Patch ll = taylor_llama(4);
    // opposite arrow, same chirality
    int t = ll.at({0, 0});
    ll.cells[{0, 0}] = (t + 6) % 12;
    auto v = check_taylor_rules(ll);
    EXPECT_GT(count_rule(v, "R1"), 0u);
}

TEST(Rules, FlippedChiralityBreaksR2) {
    Patch ll = taylor_llama(4);
    int t = ll.at({3, 2});
    ll.cells[{3, 2}] = t ^ 1;
    auto v = check_taylor_rules(ll);
    EXPECT_EQ(count_rule(v, "R1"), 0u);
    EXPECT_GT(count_rule(v, "R2"), 0u);
}

TEST(Rules, ThreefoldSeedHasExactlyOneR3) {
    Patch seed = threefold_seed();
    EXPECT_EQ(seed.size(), 3u);
    auto v = check_taylor_rules(seed);
    EXPECT_EQ(count_rule(v, "R1"), 0u);
    EXPECT_EQ(count_rule(v, "R3"), 1u);
    EXPECT_EQ(v.size(), 1u);
}

TEST(Rules, EdgeMatchingOnFixedPoints) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        for (int seed : s.seeds()) EXPECT_TRUE(check_edge_matching(fixed_point_patch(s, seed, 4)).empty()) << name;
    }
}

TEST(Rules, EdgeMatchingCatchesAMislabel) {
    const System& s = load_system("penrose");
    Patch p = fixed_point_patch(s, s.seeds()[0], 4);
    Point x{2, -1};
    p.cells[x] = s.rotate[p.at(x)];
    EXPECT_FALSE(check_edge_matching(p).empty());
}

TEST(Rules, WrongAlphabet) {
    EXPECT_THROW(check_taylor_rules(Patch{"taylor", {}}), std::invalid_argument);
    EXPECT_THROW(check_taylor_rules(Patch{kLlama, {{Point{0, 0}, 12}}}), std::invalid_argument);
}

TEST(Rules, ViolationJson) {
    auto j = violations_to_json(check_taylor_rules(threefold_seed()));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["rule"], "R3");
    EXPECT_EQ(j[0]["vertex"], true);
}
