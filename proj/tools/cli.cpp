#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "hexa/ap.hpp"
#include "hexa/derive.hpp"
#include "hexa/engine.hpp"
#include "hexa/modelset.hpp"
#include "hexa/percolation.hpp"
#include "hexa/periodic.hpp"
#include "hexa/recon.hpp"
#include "hexa/rules.hpp"
#include "render.hpp"

namespace hexa::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": malformed JSON: " + e.what());
    }
}

Patch read_patch(const std::string& path) {
    try {
        return patch_from_json(read_json(path));
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

const System& system_named(const std::string& name) {
    if (std::find(kSystemNames.begin(), kSystemNames.end(), name) == kSystemNames.end()) {
        std::string msg = "unknown system '" + name + "'; valid systems:";
        for (const auto& n : kSystemNames) msg += " " + n;
        throw UsageError(msg);
    }
    return load_system(name);
}

const System& cover_named(const std::string& name) {
    const System& s = system_named(name);
    if (!s.chiral) throw UsageError("system must be penrose or taylor, got " + name);
    return s;
}

int to_int(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    int x = 0;
    try {
        x = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size()) throw UsageError("config: " + key + " must be an integer, got '" + v + "'");
    return x;
}

// flags override the config file, which overrides built-in defaults
struct Defaults {
    Config config;
    void str(CLI::Option* opt, std::string& v, const std::string& key) const {
        if (opt->count() == 0)
            if (auto c = config.get(key)) v = *c;
    }
    void num(CLI::Option* opt, int& v, const std::string& key) const {
        if (opt->count() == 0)
            if (auto c = config.get(key)) v = to_int(key, *c);
    }
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int seed_label(const System& sys, const std::string& seed) {
    if (seed.empty()) return sys.seeds().at(0);
    try {
        return sys.parse_label(seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hexagonal substitution tilings: generation, rules, reconstruction, invariants", "hexa"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value file with defaults");

    std::string system, seed, patch_path, out_path, style_path, to, mode = "sector", csv_path, svg_path, expect_path;
    int steps = 3, order = 3, depth = 7, mmax = 6, radius = 32, radius_cap = 5, seed_type = 0;
    double scale = 0;
    bool parity_only = false, no_deco = false;
    std::function<int(const Defaults&)> action;

    auto* gen = app.add_subcommand("gen", "inflate a seed tile");
    auto* gen_sys = gen->add_option("--system", system, "halfhex, arrowed, penrose or taylor");
    gen->add_option("--seed", seed, "base:orientation[:chirality], default the first self-reproducing tile");
    auto* gen_steps = gen->add_option("--steps", steps, "inflation steps");
    gen->add_option("--mode", mode, "sector: 4^k stone inflation of one tile; fixed: ball of the fixed point")
        ->check(CLI::IsMember({"sector", "fixed"}));
    gen->add_option("--out", out_path, "output JSON (default stdout)");
    gen->callback([&] {
        action = [&](const Defaults& d) {
            d.str(gen_sys, system, "system");
            d.num(gen_steps, steps, "steps");
            const System& sys = system_named(system);
            if (steps < 0 || steps > 12) throw UsageError("--steps must be in 0..12");
            int s = seed_label(sys, seed);
            Patch p;
            if (mode == "fixed") {
                if (sys.child[s][0] != s) {
                    std::string msg = "seed " + sys.label_name(s) + " does not reproduce itself; valid seeds:";
                    for (const auto& n : sys.seed_names()) msg += " " + n;
                    throw UsageError(msg);
                }
                p = fixed_point_patch(sys, s, steps);
            } else {
                Patch one{sys.name, {}};
                one.cells.emplace(Point{0, 0}, s);
                p = inflate(sys, one, steps);
            }
            emit(out, out_path, dump(patch_to_json(p)));
            return kOk;
        };
    });

    auto* ren = app.add_subcommand("render", "draw a patch as SVG");
    ren->add_option("--patch", patch_path, "patch JSON")->required();
    ren->add_option("--style", style_path, "style JSON");
    auto* ren_scale = ren->add_option("--scale", scale, "pixels per edge length");
    ren->add_flag("--parity", parity_only, "draw the parity pattern of a penrose or taylor patch");
    ren->add_flag("--plain", no_deco, "no decorations");
    ren->add_option("--out", out_path, "output SVG (default stdout)");
    ren->callback([&] {
        action = [&](const Defaults& d) {
            Patch p = read_patch(patch_path);
            if (parity_only) p = parity(p);
            render::RenderSpec spec = style_path.empty() ? render::default_spec(p.system)
                                                         : render::spec_from_json(read_json(style_path), p.system);
            if (ren_scale->count() == 0)
                if (auto c = d.config.get("scale")) scale = std::stod(*c);
            if (scale > 0) spec.scale = scale;
            if (no_deco) spec.arrows = spec.diagonals = spec.markers = false;
            emit(out, out_path, render::render(p, spec));
            return kOk;
        };
    });

    auto* rules = app.add_subcommand("rules", "check local rules on a patch");
    rules->add_option("--patch", patch_path, "llama patch (R1-R3) or decorated hexagon patch (edge matching)")->required();
    rules->add_option("--out", out_path, "output JSON (default stdout)");
    rules->callback([&] {
        action = [&](const Defaults&) {
            Patch p = read_patch(patch_path);
            std::vector<Violation> v;
            if (p.system == kLlama)
                v = check_taylor_rules(p);
            else if (std::find(kSystemNames.begin(), kSystemNames.end(), p.system) != kSystemNames.end())
                v = check_edge_matching(p);
            else
                throw UsageError("rules: no rule set for system '" + p.system + "'");
            json rep = {{"system", p.system}, {"cells", p.size()}, {"count", v.size()}, {"violations", violations_to_json(v)}};
            emit(out, out_path, dump(rep));
            return v.empty() ? kOk : kFailed;
        };
    });

    auto* cor = app.add_subcommand("corona", "parity corona atlas and its injectivity");
    auto* cor_sys = cor->add_option("--system", system, "penrose or taylor");
    auto* cor_order = cor->add_option("--order", order, "corona radius");
    auto* cor_depth = cor->add_option("--depth", depth, "fixed point depth scanned");
    cor->add_option("--out", out_path, "write the full atlas JSON here");
    cor->callback([&] {
        action = [&](const Defaults& d) {
            d.str(cor_sys, system, "system");
            d.num(cor_order, order, "order");
            d.num(cor_depth, depth, "depth");
            const System& sys = cover_named(system);
            if (order < 0 || depth < 1 || depth > 10) throw UsageError("need order >= 0 and depth in 1..10");
            CoronaAtlas a = corona_atlas(sys, order, depth);
            CoronaAtlas b = corona_atlas(sys, order, depth + 1);
            bool stable = a.table == b.table;
            if (!out_path.empty()) write_file(out_path, dump(a.to_json()));
            json rep = {{"system", sys.name},  {"order", order},         {"depth", depth},
                        {"coronae", a.table.size()}, {"ambiguous", a.ambiguous()}, {"injective", a.injective()},
                        {"stable", stable}};
            out << dump(rep);
            return a.injective() && stable ? kOk : kFailed;
        };
    });

    auto* perc = app.add_subcommand("perc", "clusters of the parity pattern of a fixed point");
    auto* perc_sys = perc->add_option("--system", system, "penrose or taylor");
    auto* perc_steps = perc->add_option("--steps", steps, "inflation level k");
    perc->add_option("--seed", seed, "seed tile, default the first self-reproducing tile");
    perc->add_option("--csv", csv_path, "cluster table as CSV");
    perc->add_option("--svg", svg_path, "SVG with the islands coloured");
    perc->add_option("--out", out_path, "output JSON (default stdout)");
    perc->callback([&] {
        action = [&](const Defaults& d) {
            d.str(perc_sys, system, "system");
            d.num(perc_steps, steps, "steps");
            const System& sys = cover_named(system);
            if (steps < 1 || steps > 10) throw UsageError("--steps must be in 1..10");
            int s = seed_label(sys, seed);
            if (sys.child[s][0] != s) throw UsageError("seed " + sys.label_name(s) + " does not reproduce itself");
            Patch par = parity(fixed_point_patch(sys, s, steps));
            ClusterReport rep = clusters(par);
            auto census = island_census(par);
            json islands = json::array();
            for (const auto& c : census)
                islands.push_back({{"size", c.shape.size()}, {"colour", c.colour}, {"count", c.count}, {"shape", c.shape}});
            json j = rep.to_json();
            j["system"] = sys.name;
            j["steps"] = steps;
            j["island_census"] = islands;
            if (!csv_path.empty()) {
                std::ostringstream c;
                c << "id,colour,size,diameter,island\n";
                for (std::size_t i = 0; i < rep.clusters.size(); ++i) {
                    const auto& x = rep.clusters[i];
                    c << i << "," << x.colour << "," << x.cells.size() << "," << x.diameter << "," << (x.island ? 1 : 0) << "\n";
                }
                write_file(csv_path, c.str());
            }
            if (!svg_path.empty()) {
                Patch marked{"clusters", {}};
                for (const auto& x : rep.clusters)
                    for (Point q : x.cells) marked.cells.emplace(q, x.colour + (x.island ? 2 : 0));
                render::RenderSpec spec;
                spec.fill = {{0, "#ffffff"}, {1, "#9a9a9a"}, {2, "#f4d03f"}, {3, "#7d3c98"}};
                write_file(svg_path, render::render(marked, spec));
            }
            emit(out, out_path, dump(j));
            return kOk;
        };
    });

    auto* zeta = app.add_subcommand("zeta", "periodic point counts and the zeta function");
    auto* zeta_sys = zeta->add_option("--system", system, "halfhex, arrowed, penrose or taylor");
    auto* zeta_m = zeta->add_option("--mmax", mmax, "largest period");
    auto* zeta_cap = zeta->add_option("--radius-cap", radius_cap, "largest ball radius for the hull test");
    zeta->add_option("--out", out_path, "output JSON (default stdout)");
    zeta->callback([&] {
        action = [&](const Defaults& d) {
            d.str(zeta_sys, system, "system");
            d.num(zeta_m, mmax, "mmax");
            d.num(zeta_cap, radius_cap, "radius_cap");
            const System& sys = system_named(system);
            if (mmax < 1 || mmax > 8) throw UsageError("--mmax must be in 1..8");
            PeriodicOptions opt;
            opt.max_radius = radius_cap;
            ZetaReport rep = zeta_series(sys, mmax, opt);
            emit(out, out_path, dump(rep.to_json()));
            return rep.matches ? kOk : kFailed;
        };
    });

    auto* coh = app.add_subcommand("cohomology", "integer Cech cohomology of the hull");
    auto* coh_sys = coh->add_option("--system", system, "halfhex, arrowed, penrose or taylor");
    coh->add_option("--expect", expect_path, "fixture JSON; every field present must match");
    coh->add_option("--out", out_path, "output JSON (default stdout)");
    coh->callback([&] {
        action = [&](const Defaults& d) {
            d.str(coh_sys, system, "system");
            const System& sys = system_named(system);
            json rep = integer_cohomology(build_complex(sys)).to_json();
            emit(out, out_path, dump(rep));
            if (expect_path.empty()) return kOk;
            json want = read_json(expect_path);
            bool ok = true;
            if (want.contains("degrees")) {
                for (const auto& w : want.at("degrees")) {
                    int k = w.at("k").get<int>();
                    for (const auto& [key, v] : w.items())
                        if (rep["degrees"][k][key] != v) {
                            err << "H" << k << " " << key << ": expected " << v.dump() << ", got "
                                << rep["degrees"][k][key].dump() << "\n";
                            ok = false;
                        }
                }
            }
            return ok ? kOk : kFailed;
        };
    });

    auto* ms = app.add_subcommand("modelset", "compare the half-hex fixed point with its Toeplitz description");
    ms->add_option("--seed", seed_type, "seed type 0, 1 or 2")->check(CLI::Range(0, 2));
    auto* ms_radius = ms->add_option("--radius", radius, "ball radius");
    ms->add_option("--out", out_path, "output JSON (default stdout)");
    ms->callback([&] {
        action = [&](const Defaults& d) {
            d.num(ms_radius, radius, "radius");
            if (radius < 0 || radius > 4096) throw UsageError("--radius must be in 0..4096");
            ModelSetReport rep = verify_against_inflation(seed_type, radius);
            AddressCheck ac = check_addresses(seed_type, radius);
            json j = rep.to_json();
            j["unaddressed"] = ac.unaddressed;
            j["multiply_addressed"] = ac.multiple;
            emit(out, out_path, dump(j));
            return rep.discrepancies.empty() && ac.unaddressed == 0 && ac.multiple == 0 ? kOk : kFailed;
        };
    });

    auto* der = app.add_subcommand("derive", "local derivations of a penrose or taylor patch");
    der->add_option("--patch", patch_path, "input patch JSON")->required();
    der->add_option("--to", to, "halfhex, arrowed, parity, llama or double")
        ->required()
        ->check(CLI::IsMember({"halfhex", "arrowed", "parity", "llama", "double"}));
    der->add_option("--out", out_path, "output JSON (default stdout)");
    der->callback([&] {
        action = [&](const Defaults&) {
            Patch p = read_patch(patch_path);
            if (std::find(kSystemNames.begin(), kSystemNames.end(), p.system) == kSystemNames.end())
                throw UsageError("derive: unsupported system '" + p.system + "'");
            json j;
            if (to == "halfhex")
                j = patch_to_json(derive_halfhex(p));
            else if (to == "arrowed")
                j = patch_to_json(derive_arrowed_halfhex(p));
            else if (to == "parity")
                j = patch_to_json(parity(p));
            else if (to == "llama")
                j = patch_to_json(decorated_llama(p));
            else {
                if (p.system != "penrose") throw UsageError("derive --to double needs a penrose patch");
                DoubleHexagon dh = double_hexagon(p);
                json large = json::array(), small = json::array();
                for (const auto& [q, l] : dh.large) large.push_back({{"at", q}, {"arrows", l.arrows}, {"inner", l.inner}});
                for (const auto& [q, s] : dh.small)
                    if (s.complete) small.push_back({{"at3", q}, {"around", s.around}});
                j = {{"system", "double"}, {"large", large}, {"small", small}};
            }
            emit(out, out_path, dump(j));
            return kOk;
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    try {
        Defaults d;
        if (!config_path.empty()) d.config = Config::load(config_path);
        return action(d);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace hexa::cli
