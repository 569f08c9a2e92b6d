#include "hexa/modelset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "hexa/engine.hpp"

namespace hexa {

namespace {

bool in_term(Point p, int type, int n) {
    // p in 2^n (2 Gamma + c_type)
    std::int64_t s = std::int64_t{1} << n;
    if (p.a % s != 0 || p.b % s != 0) return false;
    Point q{p.a / s - kToeplitzOffset[type].a, p.b / s - kToeplitzOffset[type].b};
    return q.a % 2 == 0 && q.b % 2 == 0;
}

void check_type(int t, const char* what) {
    if (t < 0 || t > 2) throw std::invalid_argument(std::string(what) + " must be 0, 1 or 2");
}

}  // namespace

std::vector<Point> toeplitz_points(int type, int seed_type, int n_max, std::int64_t radius) {
    check_type(type, "type");
    check_type(seed_type, "seed type");
    std::vector<Point> out;
    for (Point p : hex_ball(radius)) {
        bool in = p == Point{0, 0} && type == seed_type;
        for (int n = 0; n <= n_max && !in && n < 62; ++n) in = in_term(p, type, n);
        if (in) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ToeplitzAddress two_adic_address(Point p, int seed_type, int n_cap) {
    check_type(seed_type, "seed type");
    if (p == Point{0, 0}) return {true, 0, seed_type, {}};
    for (int n = 0; n <= n_cap && n < 62; ++n)
        for (int t = 0; t < 3; ++t)
            if (in_term(p, t, n)) {
                std::int64_t s = std::int64_t{1} << n;
                Point q{p.a / s - kToeplitzOffset[t].a, p.b / s - kToeplitzOffset[t].b};
                return {false, n, t, {q.a / 2, q.b / 2}};
            }
    throw std::runtime_error("two_adic_address: no address with n <= " + std::to_string(n_cap));
}

nlohmann::json ModelSetReport::to_json() const {
    nlohmann::json d = nlohmann::json::array();
    for (const auto& x : discrepancies) d.push_back({{"at", x.at}, {"expected", x.expected}, {"found", x.found}});
    return {{"seed_type", seed_type}, {"radius", radius}, {"points", points}, {"discrepancies", d}};
}

ModelSetReport compare_with_formula(const Patch& hh, int seed_type, std::int64_t radius) {
    if (hh.system != "halfhex") throw std::invalid_argument("compare_with_formula: expects a halfhex patch");
    ModelSetReport rep;
    rep.seed_type = seed_type;
    rep.radius = radius;
    int n_max = 1;
    while ((std::int64_t{1} << n_max) <= 2 * radius) ++n_max;
    std::array<std::vector<Point>, 3> sets;
    for (int t = 0; t < 3; ++t) sets[t] = toeplitz_points(t, seed_type, n_max, radius);
    for (Point p : hex_ball(radius)) {
        ++rep.points;
        int expected = -1;
        for (int t = 0; t < 3; ++t)
            if (std::binary_search(sets[t].begin(), sets[t].end(), p)) expected = t;
        int found = hh.at(p);
        if (found != expected) rep.discrepancies.push_back({p, expected, found});
    }
    return rep;
}

ModelSetReport verify_against_inflation(int seed_type, std::int64_t radius) {
    check_type(seed_type, "seed type");
    const System& sys = load_system("halfhex");
    int k = 1;
    while ((std::int64_t{1} << k) - 1 < radius) ++k;
    return compare_with_formula(fixed_point_patch(sys, seed_type, k), seed_type, radius);
}

AddressCheck check_addresses(int seed_type, std::int64_t radius) {
    check_type(seed_type, "seed type");
    AddressCheck out;
    for (Point p : hex_ball(radius)) {
        ++out.points;
        int hits = p == Point{0, 0} ? 1 : 0;
        for (int n = 0; n < 62; ++n)
            for (int t = 0; t < 3; ++t) hits += in_term(p, t, n);
        if (hits == 0) ++out.unaddressed;
        if (hits > 1) ++out.multiple;
    }
    return out;
}

std::optional<PeriodicSubset> lattice_periodic_subset(const System& sys, int k_max) {
    std::vector<int> preferred;
    for (int l = 0; l < sys.size(); ++l)
        if (sys.alphabet[l].base == sys.preferred) preferred.push_back(l);
    for (int k = 1; k <= k_max; ++k) {
        PeriodicSubset ps;
        ps.k = k;
        for (Point w : sector_digits(k)) {
            int common = sector_descendant(sys, preferred[0], k, w);
            bool same = std::all_of(preferred.begin(), preferred.end(),
                                    [&](int l) { return sector_descendant(sys, l, k, w) == common; });
            if (same) {
                ps.offsets.push_back(w);
                ps.labels.push_back(common);
            }
        }
        if (!ps.offsets.empty()) return ps;
    }
    return std::nullopt;
}

std::int64_t preferred_sublattice_index(const System& sys, const Patch& patch) {
    std::vector<Point> pts;
    for (Point p : patch.sorted_points())
        if (sys.alphabet.at(patch.at(p)).base == sys.preferred) pts.push_back(p);
    if (pts.size() < 3) return 0;
    // Hermite basis (a, b), (0, d) of the difference lattice
    std::int64_t a = 0, b = 0, d = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Point v = pts[i] - pts[0];
        if (v.a == 0 && a == 0) {
            d = std::gcd(d, v.b);
            continue;
        }
        // extended gcd of the first coordinates
        std::int64_t r0 = a, r1 = v.a, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        std::int64_t g = r0;
        std::int64_t nb = s0 * b + t0 * v.b;
        std::int64_t w = (v.a / g) * b - (a / g) * v.b;
        if (g < 0) {
            g = -g;
            nb = -nb;
        }
        a = g;
        b = nb;
        d = std::gcd(d, w);
        if (d != 0) b = ((b % d) + d) % d;
    }
    if (a == 0 || d == 0) return 0;
    // every patch point of the coset must be preferred
    for (Point p : patch.sorted_points()) {
        Point v = p - pts[0];
        if (v.a % a != 0) continue;
        std::int64_t y = v.b - (v.a / a) * b;
        if (y % d != 0) continue;
        if (sys.alphabet[patch.at(p)].base != sys.preferred) return 0;
    }
    return a * d;
}

}  // namespace hexa
