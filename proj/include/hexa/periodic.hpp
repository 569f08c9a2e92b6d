#pragma once
// Points of the hull fixed by a power of the inflation, their counts a_m and
// the dynamical zeta function.
//
// A tiling fixed by sigma^m has its tile centres at Gamma + s/N, N = 2^m - 1,
// for some s in Gamma/N Gamma. In the frame of Gamma the fixed point condition
// reads L(x) = desc(L(g(x)), w) with x - s = 2^m g(x) + w, w a sector digit.
// g contracts towards -s/N, so a solution is fixed by its labels on the
// cycles of g, and it lies in the hull iff its ball around the cycles is legal.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/engine.hpp"
#include "hexa/system.hpp"

namespace hexa {

struct PeriodicPoint {
    int m = 0;
    Point shift;                 // s: tile centres sit at Gamma + s / (2^m - 1)
    Point centre;                // lattice point on a cycle of g, ball centre
    std::map<Point, int> cycle;  // labels on the cycle points of g
};

struct PeriodicOptions {
    int min_radius = 2;
    int max_radius = 5;  // ball radius cap; exceeding it is an error
};

struct PeriodicCount {
    int m = 0;
    std::int64_t count = 0;
    int radius = 0;  // ball radius at which the count was stable (radius and radius + 1)
    std::vector<PeriodicPoint> points;
};

PeriodicCount enumerate_periodic(const System& sys, int m, const PeriodicOptions& opt = {});
std::int64_t count_periodic(const System& sys, int m, const PeriodicOptions& opt = {});

// label of the tile at lattice coordinate y (tile centre y + s/N)
int periodic_label(const System& sys, const PeriodicPoint& p, Point y);

// the a_m predicted for the four systems
std::int64_t closed_form_count(const std::string& system, int m);

// zeta(z) = numerator / denominator, both with constant term 1
struct RationalZeta {
    std::vector<std::int64_t> numerator;
    std::vector<std::int64_t> denominator;
};
RationalZeta closed_form_zeta(const std::string& system);

// a_1..a_M from a rational zeta: z zeta'/zeta
std::vector<std::int64_t> counts_from_zeta(const RationalZeta& z, int M);
// power series coefficients of a rational function up to z^M
std::vector<std::int64_t> series(const RationalZeta& z, int M);
// coefficients of exp(sum a_m z^m / m) up to z^M; throws if not integral
std::vector<std::int64_t> exp_log_series(const std::vector<std::int64_t>& a);

struct ZetaReport {
    std::string system;
    std::vector<std::int64_t> a;  // a_1..a_M
    RationalZeta zeta;
    std::vector<std::string> factors;
    bool matches = false;
    int first_mismatch = 0;  // m of the first difference, 0 if none
    nlohmann::json to_json() const;
};

ZetaReport zeta_series(const System& sys, int M, const PeriodicOptions& opt = {});

struct OrbitEntry {
    int id = 0;
    int least_period = 0;
    int d6_orbit = 0;      // size of the D6 orbit
    std::string position;  // what sits at the inflation centre: centre, corner or interior
    int corner_type = -1;  // corners of even or odd index, -1 off corners
};
std::vector<OrbitEntry> orbit_structure(const System& sys, int m, const PeriodicOptions& opt = {});

}  // namespace hexa
