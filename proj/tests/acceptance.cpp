// One PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hexa/ap.hpp"
#include "hexa/derive.hpp"
#include "hexa/engine.hpp"
#include "hexa/modelset.hpp"
#include "hexa/percolation.hpp"
#include "hexa/periodic.hpp"
#include "hexa/recon.hpp"
#include "hexa/rules.hpp"

using namespace hexa;

namespace {

std::int64_t formula(const std::string& name, int m) {
    std::int64_t n = (std::int64_t{1} << m) - 1;
    if (name == "halfhex") return n * n + 2;
    if (name == "arrowed") return n * n + 3 * n + 2;
    return n * n + 6 * n + 5 + 2 * (1 + (m % 2 ? -1 : 1));
}

const std::vector<std::string> kAll(kSystemNames.begin(), kSystemNames.end());
const std::vector<std::string> kCovers = {"penrose", "taylor"};

std::map<std::string, CohomologyReport>& cohomology() {
    static std::map<std::string, CohomologyReport> c;
    if (c.empty())
        for (const auto& n : kAll) c.emplace(n, integer_cohomology(build_complex(load_system(n))));
    return c;
}

bool c1(std::ostream& d) {
    bool ok = true;
    for (const auto& n : kAll) {
        d << n << ":";
        for (int m = 1; m <= 6; ++m) {
            auto a = count_periodic(load_system(n), m);
            d << " " << a;
            ok = ok && a == formula(n, m);
        }
        d << "; ";
    }
    return ok;
}

bool c2(std::ostream& d) {
    bool ok = true;
    std::vector<std::vector<std::int64_t>> cov;
    for (const auto& n : kAll) {
        auto rep = zeta_series(load_system(n), 6);
        bool same = exp_log_series(rep.a) == series(rep.zeta, 6);
        d << n << (same ? " ok; " : " differs; ");
        ok = ok && same && rep.matches;
        if (load_system(n).chiral) cov.push_back(rep.a);
    }
    ok = ok && cov.size() == 2 && cov[0] == cov[1];
    d << "penrose and taylor series " << (cov[0] == cov[1] ? "equal" : "differ");
    return ok;
}

bool c3(std::ostream& d) {
    struct Want {
        int r1, r2;
        const char *p1, *p2;
        std::vector<mpz_class> t2;
    };
    std::map<std::string, Want> want = {
        {"halfhex", {2, 3, "(x-2)^2", "(x-4)(x-1)^2", {}}},
        {"arrowed", {3, 4, "(x-2)^2(x-1)", "(x-4)(x-2)^3", {}}},
        {"penrose", {4, 12, "(x-2)^2(x-1)^2", "(x-4)(x-2)^6(x-1)^3(x+1)^2", {3}}},
        {"taylor", {6, 14, "(x-2)^2(x-1)^4", "(x-4)(x-2)^6(x-1)^5(x+1)^2", {}}},
    };
    bool ok = true;
    for (const auto& n : kAll) {
        const auto& r = cohomology().at(n);
        const auto& w = want.at(n);
        const auto& l0 = r.degree[0].limit;
        const auto& l1 = r.degree[1].limit;
        const auto& l2 = r.degree[2].limit;
        bool good = l0.eventual_rank == 1 && l0.stable_torsion.empty() && l1.eventual_rank == w.r1 &&
                    poly_string(l1.eventual_charpoly) == w.p1 && l1.stable_torsion.empty() && l2.eventual_rank == w.r2 &&
                    poly_string(l2.eventual_charpoly) == w.p2 && l2.stable_torsion == w.t2;
        d << n << " H1 " << l1.eventual_rank << " " << poly_string(l1.eventual_charpoly) << " H2 " << l2.eventual_rank << " "
          << poly_string(l2.eventual_charpoly) << (l2.stable_torsion.empty() ? "" : " torsion Z" + l2.stable_torsion[0].get_str())
          << "; ";
        ok = ok && good;
    }
    return ok;
}

bool c4(std::ostream& d) {
    bool ok = true;
    for (const auto& n : kAll) {
        auto z = zeta_from_cohomology(cohomology().at(n), 6);
        bool same = true;
        for (int m = 1; m <= 6; ++m) same = same && z.a[m - 1] == count_periodic(load_system(n), m);
        d << n << (same ? " ok; " : " differs; ");
        ok = ok && same;
    }
    return ok;
}

bool c5(std::ostream& d) {
    bool ok = true;
    for (int s = 0; s < 3; ++s) {
        auto rep = verify_against_inflation(s, 64);
        auto ac = check_addresses(s, 64);
        d << "seed " << s << ": " << rep.discrepancies.size() << " discrepancies, " << ac.unaddressed << " unaddressed, "
          << ac.multiple << " multiple; ";
        ok = ok && rep.discrepancies.empty() && ac.unaddressed == 0 && ac.multiple == 0;
    }
    return ok;
}

bool c6(std::ostream& d) {
    bool ok = true;
    for (const auto& n : kCovers) {
        const System& s = load_system(n);
        CoronaAtlas a = corona_atlas(s, 3, 7);
        bool trip = true;
        for (int seed : s.seeds()) {
            Patch p = fixed_point_patch(s, seed, 4);
            trip = trip && reconstruct(parity(p), a).patch == restrict_to(p, interior(p, 3));
        }
        d << n << ": " << a.table.size() << " coronae, " << a.ambiguous() << " ambiguous, round trip " << (trip ? "ok" : "fails")
          << "; ";
        ok = ok && a.injective() && trip;
    }
    return ok;
}

bool c7(std::ostream& d) {
    const System& t = load_system("taylor");
    std::size_t taylor = 0;
    for (int seed : t.seeds())
        for (int k = 1; k <= 5; ++k) taylor += check_taylor_rules(decorated_llama(fixed_point_patch(t, seed, k))).size();
    auto seedv = check_taylor_rules(threefold_seed());
    std::size_t r3 = 0;
    for (const auto& v : seedv) r3 += v.rule == "R3";
    const System& p = load_system("penrose");
    std::size_t pen = 0;
    for (int seed : p.seeds())
        for (int k = 1; k <= 5; ++k) pen += check_edge_matching(fixed_point_patch(p, seed, k)).size();
    d << "taylor violations " << taylor << ", threefold seed R3 " << r3 << " of " << seedv.size() << ", penrose mismatches " << pen;
    return taylor == 0 && r3 == 1 && seedv.size() == 1 && pen == 0;
}

bool c8(std::ostream& d) {
    const System& hh = load_system("halfhex");
    const System& ahh = load_system("arrowed");
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& n : kCovers) {
        const System& s = load_system(n);
        std::vector<Patch> ps;
        for (int seed : s.seeds()) ps.push_back(fixed_point_patch(s, seed, 2));
        for (const Patch& b : legal_patches(s, 1).patches(n)) ps.push_back(b);
        for (const Patch& p : ps)
            for (int k = 1; k <= 4; ++k) {
                Patch big = inflate(s, p, k);
                ok = ok && derive_halfhex(big) == inflate(hh, derive_halfhex(p), k);
                ok = ok && derive_arrowed_halfhex(big) == inflate(ahh, derive_arrowed_halfhex(p), k);
                ++checked;
            }
    }
    d << checked << " patch/level pairs";
    return ok;
}

bool c9(std::ostream& d) {
    bool ok = true;
    for (const auto& n : kAll) {
        const System& s = load_system(n);
        auto c = verify_pseudo_consistency(s);
        auto b = verify_border_forcing(s, 4);
        d << n << ": " << c.conflicts.size() << " conflicts in " << c.pairs_checked << " pairs, border forced at order "
          << b.minimal_order << "; ";
        ok = ok && c.conflicts.empty() && b.holds && b.minimal_order <= 4;
    }
    return ok;
}

bool c10(std::ostream& d) {
    bool ok = true;
    for (const auto& n : kCovers) {
        auto g = growth_curve(n, 3, 7);
        d << n << " diameters";
        for (int c = 0; c < 2; ++c) {
            d << " [";
            for (std::size_t i = 0; i < g.size(); ++i) {
                d << (i ? " " : "") << g[i].max_diameter[c];
                if (i > 0) ok = ok && g[i].max_diameter[c] >= g[i - 1].max_diameter[c];
            }
            d << "]";
            ok = ok && g.back().max_diameter[c] >= 2 * g.front().max_diameter[c];
        }
        const System& s = load_system(n);
        Patch par = parity(fixed_point_patch(s, s.seeds()[0], 6));
        auto a = clusters(par), b = clusters(swap_colours(par));
        bool swap = a.colour[0].sizes == b.colour[1].sizes && a.colour[1].sizes == b.colour[0].sizes &&
                    a.colour[0].islands == b.colour[1].islands && a.colour[1].islands == b.colour[0].islands;
        ok = ok && swap && !island_census(par).empty();
        d << ", swap " << (swap ? "ok" : "fails") << "; ";
    }
    const System& t = load_system("taylor");
    std::vector<Shape> smallest;
    for (int k = 5; k <= 7; ++k) {
        auto c = island_census(parity(fixed_point_patch(t, t.seeds()[0], k)));
        if (c.empty()) return false;
        smallest.push_back(c[0].shape);
    }
    bool same = smallest[0] == smallest[1] && smallest[1] == smallest[2];
    d << "smallest llama island " << smallest[0].size() << " cells, " << (same ? "same" : "different") << " at k = 5, 6, 7";
    return ok && same;
}

}  // namespace

int main() {
    std::vector<std::function<bool(std::ostream&)>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = criteria[i](detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        std::string text = detail.str();
        if (text.size() >= 2 && text.compare(text.size() - 2, 2, "; ") == 0) text.resize(text.size() - 2);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << text << " (" << std::fixed
                  << std::setprecision(1) << secs << " s)" << std::endl;
        failed += !ok;
    }
    return failed ? 1 : 0;
}
