#pragma once
// Anderson-Putnam approximant of a hull and the cohomology of its inverse
// limit under inflation.
//
// Tiles are the vertices of the complex; an edge is a legal pair of labels in
// one of the directions kEdgeDir, a face a legal triangle of mutually adjacent
// tiles. Border forcing lets the uncollared labels serve as cells.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/snf.hpp"
#include "hexa/system.hpp"

namespace hexa {

inline constexpr std::array<Point, 3> kEdgeDir = {Point{1, 0}, Point{0, 1}, Point{-1, 1}};

struct ApproximantComplex {
    std::string system;
    std::vector<int> vertices;                // label per 0-cell
    std::vector<std::array<int, 3>> edges;    // (tail label, head label, direction)
    std::vector<std::array<int, 4>> faces;    // (0 up / 1 down, labels at the three corners)
    IntMatrix boundary1;                      // vertices x edges
    IntMatrix boundary2;                      // edges x faces
    std::array<IntMatrix, 3> inflation;       // chain map, column j = image of cell j
    std::array<std::size_t, 3> counts() const { return {vertices.size(), edges.size(), faces.size()}; }
};

// Throws if the system does not force its border by order 4.
ApproximantComplex build_complex(const System& sys);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// finite abelian group sum Z/orders[i] with an endomorphism (column i = image of generator i)
struct TorsionModule {
    std::vector<mpz_class> orders;
    std::vector<std::vector<mpz_class>> action;
};

struct LimitInvariants {
    int eventual_rank = 0;
    std::vector<mpq_class> charpoly;          // of the action, x^z p(x)
    std::vector<mpq_class> eventual_charpoly; // p(x)
    std::vector<mpz_class> stable_torsion;    // invariant factors
};

LimitInvariants direct_limit_invariants(const QMatrix& action, const TorsionModule& torsion);

struct DegreeReport {
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors of the approximant group
    QMatrix action;                  // on the free part, in an integral basis
    LimitInvariants limit;
};

struct CohomologyReport {
    std::string system;
    std::array<std::size_t, 3> cells{};
    std::array<DegreeReport, 3> degree;
    nlohmann::json to_json() const;
};

CohomologyReport integer_cohomology(const ApproximantComplex& c);

// zeta = det(1 - z A1) / (det(1 - z A2) det(1 - z A0)) on the limit groups
struct CohomologicalZeta {
    std::vector<std::int64_t> numerator, denominator;
    std::vector<std::int64_t> a;  // a_1..a_M
};
CohomologicalZeta zeta_from_cohomology(const CohomologyReport& r, int M);

// integer coefficients of p, constant term first; throws if p is not integral
std::vector<std::int64_t> integral(const std::vector<mpq_class>& p);
std::string poly_string(const std::vector<mpq_class>& p);

}  // namespace hexa
