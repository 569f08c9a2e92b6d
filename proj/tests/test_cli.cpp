#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "config.hpp"
#include "hexa/derive.hpp"
#include "hexa/engine.hpp"
#include "hexa/patch.hpp"
#include "render.hpp"

using namespace hexa;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("hexa_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                           "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
    std::string read(const std::string& name) const {
        std::ifstream f(path(name));
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    fs::path dir;
};

}  // namespace

TEST_F(Cli, GenWritesFourToTheKCells) {
    auto r = run({"gen", "--system", "taylor", "--seed", "C:0:+", "--steps", "5", "--out", path("p.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    Patch p = patch_from_json(nlohmann::json::parse(read("p.json")));
    EXPECT_EQ(p.size(), 1024u);
    EXPECT_EQ(p.system, "taylor");
}

TEST_F(Cli, GenRenderRoundTripKeepsCells) {
    ASSERT_EQ(run({"gen", "--system", "penrose", "--mode", "fixed", "--steps", "3", "--out", path("p.json")}).code, 0);
    Patch p = patch_from_json(nlohmann::json::parse(read("p.json")));
    const System& s = load_system("penrose");
    EXPECT_EQ(p, fixed_point_patch(s, s.seeds()[0], 3));
    EXPECT_EQ(patch_from_json(patch_to_json(p)), p);
    ASSERT_EQ(run({"render", "--patch", path("p.json"), "--out", path("p.svg")}).code, 0);
    EXPECT_EQ(patch_from_json(nlohmann::json::parse(read("p.json"))), p);
}

TEST_F(Cli, RenderIsDeterministic) {
    ASSERT_EQ(run({"gen", "--system", "taylor", "--mode", "fixed", "--steps", "4", "--out", path("p.json")}).code, 0);
    auto a = run({"render", "--patch", path("p.json"), "--parity"});
    auto b = run({"render", "--patch", path("p.json"), "--parity"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("<svg"), std::string::npos);
    // one polygon per cell
    std::size_t n = 0;
    for (auto i = a.out.find("<polygon"); i != std::string::npos; i = a.out.find("<polygon", i + 1)) ++n;
    EXPECT_EQ(n, static_cast<std::size_t>(hex_ball_size(15)));
}

TEST_F(Cli, EmptyPatchGivesAnEmptyCanvas) {
    write("e.json", R"({"system": "parity", "cells": []})");
    auto r = run({"render", "--patch", path("e.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("<svg"), std::string::npos);
    EXPECT_NE(r.out.find("</svg>"), std::string::npos);
    EXPECT_EQ(r.out.find("<polygon"), std::string::npos);
}

TEST_F(Cli, MissingStyleIsAnError) {
    write("p.json", R"({"system": "parity", "cells": [[0, 0, 0], [1, 0, 1]]})");
    write("s.json", R"({"fill": {"0": "#ffffff"}})");
    EXPECT_EQ(run({"render", "--patch", path("p.json"), "--style", path("s.json")}).code, 2);
    write("s.json", R"({"fill": {"0": "#ffffff", "1": "#000000"}, "scale": 5})");
    auto r = run({"render", "--patch", path("p.json"), "--style", path("s.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("#000000"), std::string::npos);
}

TEST(Render, HexagonsHaveUnitEdges) {
    render::RenderSpec spec = render::default_spec(kParity);
    spec.scale = 1;
    std::string svg = render::render(Patch{kParity, {{Point{0, 0}, 0}}}, spec);
    EXPECT_NE(svg.find("points=\"1.000,0.000 0.500,-0.866 -0.500,-0.866 -1.000,0.000 -0.500,0.866 0.500,0.866\""),
              std::string::npos);
}

TEST_F(Cli, RulesOnCorruptedPatch) {
    const System& s = load_system("taylor");
    Patch ll = decorated_llama(fixed_point_patch(s, s.seeds()[0], 4));
    write("good.json", patch_to_json(ll).dump());
    auto good = run({"rules", "--patch", path("good.json")});
    EXPECT_EQ(good.code, 0);
    EXPECT_EQ(nlohmann::json::parse(good.out)["count"], 0);
    ll.cells[{1, 1}] = (ll.at({1, 1}) + 6) % 12;
    write("corrupted.json", patch_to_json(ll).dump());
    auto bad = run({"rules", "--patch", path("corrupted.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_GT(nlohmann::json::parse(bad.out)["count"].get<int>(), 0);
}

TEST_F(Cli, ZetaHalfHex) {
    auto r = run({"zeta", "--system", "halfhex", "--mmax", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["a"], nlohmann::json({3, 11, 51, 227, 963}));
}

TEST_F(Cli, ConfigSuppliesDefaultsAndFlagsOverride) {
    write("c.conf", "# defaults\nsystem = halfhex\nmmax = 3\n");
    auto r = run({"--config", path("c.conf"), "zeta"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["a"], nlohmann::json({3, 11, 51}));
    r = run({"--config", path("c.conf"), "zeta", "--mmax", "2", "--system", "arrowed"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["a"], nlohmann::json({6, 20}));
    write("bad.conf", "colour = red\n");
    EXPECT_EQ(run({"--config", path("bad.conf"), "zeta"}).code, 2);
    EXPECT_THROW(cli::Config::parse("system halfhex"), std::invalid_argument);
    EXPECT_EQ(cli::Config::parse(" depth=8 # scan\n").get("depth"), "8");
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"zeta", "--system", "square"}).code, 2);
    EXPECT_EQ(run({"rules", "--patch", path("nowhere.json")}).code, 2);
    write("m.json", "{\"system\": ");
    EXPECT_EQ(run({"rules", "--patch", path("m.json")}).code, 2);
    auto r = run({"gen", "--system", "taylor", "--seed", "Q:0:+"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("C:0:+"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Modelset) {
    auto r = run({"modelset", "--seed", "2", "--radius", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["discrepancies"].empty());
}

TEST_F(Cli, Derive) {
    ASSERT_EQ(run({"gen", "--system", "penrose", "--mode", "fixed", "--steps", "2", "--out", path("p.json")}).code, 0);
    for (const char* to : {"halfhex", "arrowed", "parity", "llama", "double"}) {
        auto r = run({"derive", "--patch", path("p.json"), "--to", to});
        ASSERT_EQ(r.code, 0) << to << r.err;
        EXPECT_NO_THROW(nlohmann::json::parse(r.out));
    }
    auto h = run({"derive", "--patch", path("p.json"), "--to", "halfhex"});
    EXPECT_EQ(nlohmann::json::parse(h.out)["system"], "halfhex");
}

TEST_F(Cli, CohomologyFixture) {
    std::string fixture = std::string(HEXA_TEST_DIR) + "/fixtures/cohomology/arrowed.json";
    auto r = run({"cohomology", "--system", "arrowed", "--expect", fixture});
    EXPECT_EQ(r.code, 0) << r.err;
    write("wrong.json", R"({"degrees": [{"k": 1, "eventual_rank": 7}]})");
    EXPECT_EQ(run({"cohomology", "--system", "arrowed", "--expect", path("wrong.json")}).code, 1);
}

TEST_F(Cli, CoronaAndPerc) {
    auto c = run({"corona", "--system", "taylor", "--order", "3", "--depth", "7", "--out", path("atlas.json")});
    EXPECT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(nlohmann::json::parse(c.out)["injective"], true);
    EXPECT_TRUE(fs::exists(path("atlas.json")));
    auto p = run({"perc", "--system", "taylor", "--steps", "4", "--csv", path("c.csv"), "--svg", path("c.svg")});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_EQ(read("c.csv").substr(0, 29), "id,colour,size,diameter,islan");
    EXPECT_NE(read("c.svg").find("<svg"), std::string::npos);
}
