#include <gtest/gtest.h>

#include <fstream>

#include "hexa/system.hpp"

using namespace hexa;

TEST(System, TablesRegenerateFromTheCoding) {
    for (const auto& name : kSystemNames) {
        std::ifstream f(data_dir() / (name + ".json"));
        ASSERT_TRUE(f) << name;
        nlohmann::json stored;
        f >> stored;
        EXPECT_EQ(to_json(generate_system(name)), stored) << name;
    }
}

TEST(System, JsonRoundTrip) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        EXPECT_EQ(to_json(system_from_json(to_json(s))), to_json(s)) << name;
    }
}

TEST(System, AlphabetSizes) {
    EXPECT_EQ(load_system("halfhex").size(), 3);
    EXPECT_EQ(load_system("arrowed").size(), 6);
    // seven bases, six arrow directions, two chiralities
    EXPECT_EQ(load_system("penrose").size(), 84);
    EXPECT_EQ(load_system("taylor").size(), 84);
    EXPECT_EQ(load_system("penrose").base_names.size(), 7u);
}

TEST(System, D6ActsOnLabels) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        for (int l = 0; l < s.size(); ++l) {
            EXPECT_EQ(s.act(D6{6, false}, l), l);
            EXPECT_EQ(s.reflect[s.reflect[l]], l);
            for (D6 a : D6::all())
                for (D6 b : D6::all()) ASSERT_EQ(s.act(a * b, l), s.act(a, s.act(b, l))) << name;
        }
    }
}

TEST(System, RotationTurnsTheArrow) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        for (int l = 0; l < s.size(); ++l) {
            const auto& t = s.alphabet[l];
            const auto& r = s.alphabet[s.rotate[l]];
            EXPECT_EQ(r.base, t.base);
            EXPECT_EQ(r.chirality, t.chirality);
            int period = name == "halfhex" ? 3 : 6;
            EXPECT_EQ(r.orientation, (t.orientation + 1) % period);
        }
    }
}

TEST(System, ReflectionSwapsChirality) {
    for (const char* name : {"penrose", "taylor"}) {
        const System& s = load_system(name);
        for (int l = 0; l < s.size(); ++l) EXPECT_NE(s.alphabet[s.reflect[l]].chirality, s.alphabet[l].chirality);
    }
}

TEST(System, PseudoRuleIsD6Equivariant) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        for (D6 g : D6::all())
            for (int l = 0; l < s.size(); ++l)
                for (int i = 0; i < 7; ++i) {
                    int j = child_index(act(g, kChild[i]));
                    ASSERT_GE(j, 0);
                    EXPECT_EQ(s.child[s.act(g, l)][j], s.act(g, s.child[l][i])) << name << " " << s.label_name(l);
                }
    }
}

TEST(System, FactorMapsAreEquivariant) {
    const System& hh = load_system("halfhex");
    const System& ahh = load_system("arrowed");
    for (const char* name : {"arrowed", "penrose", "taylor"}) {
        const System& s = load_system(name);
        for (D6 g : D6::all())
            for (int l = 0; l < s.size(); ++l) {
                EXPECT_EQ(s.halfhex[s.act(g, l)], hh.act(g, s.halfhex[l]));
                if (s.chiral) EXPECT_EQ(s.arrowed[s.act(g, l)], ahh.act(g, s.arrowed[l]));
            }
    }
}

TEST(System, FactorMapsIntertwineThePseudoRule) {
    const System& hh = load_system("halfhex");
    const System& ahh = load_system("arrowed");
    for (const char* name : {"arrowed", "penrose", "taylor"}) {
        const System& s = load_system(name);
        for (int l = 0; l < s.size(); ++l)
            for (int i = 0; i < 7; ++i) {
                EXPECT_EQ(s.halfhex[s.child[l][i]], hh.child[s.halfhex[l]][i]);
                if (s.chiral) EXPECT_EQ(s.arrowed[s.child[l][i]], ahh.child[s.arrowed[l]][i]);
            }
    }
}

TEST(System, LabelNames) {
    const System& t = load_system("taylor");
    for (int l = 0; l < t.size(); ++l) EXPECT_EQ(t.parse_label(t.label_name(l)), l);
    EXPECT_EQ(t.label_name(t.parse_label("C:0:+")), "C:0:+");
    try {
        t.parse_label("Z:9:+");
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("A:0:+"), std::string::npos);
    }
}

TEST(System, SeedsReproduceThemselves) {
    for (const auto& name : kSystemNames) {
        const System& s = load_system(name);
        ASSERT_FALSE(s.seeds().empty());
        for (int l : s.seeds()) EXPECT_EQ(s.child[l][0], l);
    }
}

TEST(System, UnknownSystem) { EXPECT_THROW(load_system("square"), std::invalid_argument); }
