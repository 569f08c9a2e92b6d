#pragma once
// Limit-periodic (Toeplitz) description of the half-hex fixed points and
// 2-adic addresses of lattice points.
//
// The type-l centres of the fixed point with seed type s are
//   H_l = A_l  u  union_n 2^n (2 Gamma + c_l),   A_l = {0} if l = s else {},
// with c_l = sqrt3 xi^(3 + 2l) in lattice coordinates.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/patch.hpp"
#include "hexa/system.hpp"

namespace hexa {

inline constexpr std::array<Point, 3> kToeplitzOffset = {Point{0, 1}, Point{-1, 1}, Point{-1, 0}};

// truncated union intersected with the radius-r ball, sorted
std::vector<Point> toeplitz_points(int type, int seed_type, int n_max, std::int64_t radius);

struct ToeplitzAddress {
    bool limit = false;  // the point 0
    int level = 0;       // n
    int type = 0;        // l
    Point gamma;         // p = 2^n (2 gamma + c_l)
    bool operator==(const ToeplitzAddress&) const = default;
};

// throws if p is not addressed with n <= n_cap
ToeplitzAddress two_adic_address(Point p, int seed_type, int n_cap = 62);

struct Discrepancy {
    Point at;
    int expected = 0;  // type from the formula
    int found = -1;    // type in the patch, -1 if missing
};

struct ModelSetReport {
    int seed_type = 0;
    std::int64_t radius = 0;
    std::size_t points = 0;
    std::vector<Discrepancy> discrepancies;
    nlohmann::json to_json() const;
};

// compares a half-hex patch with the formula on the radius-r ball
ModelSetReport compare_with_formula(const Patch& halfhex, int seed_type, std::int64_t radius);
// same, on the fixed point of the given seed
ModelSetReport verify_against_inflation(int seed_type, std::int64_t radius);

struct AddressCheck {
    std::size_t points = 0;
    std::size_t unaddressed = 0;
    std::size_t multiple = 0;  // points lying in more than one term
};
AddressCheck check_addresses(int seed_type, std::int64_t radius);

// Smallest k for which some offset w of the k-supertiles carries the same
// label in the supertiles of every preferred label.
struct PeriodicSubset {
    int k = 0;
    std::vector<Point> offsets;
    std::vector<int> labels;
};
std::optional<PeriodicSubset> lattice_periodic_subset(const System& sys, int k_max = 8);

// index in Gamma of the lattice spanned by differences of preferred centres,
// 0 if the preferred centres are not a full coset of a sublattice in the patch
std::int64_t preferred_sublattice_index(const System& sys, const Patch& patch);

}  // namespace hexa
