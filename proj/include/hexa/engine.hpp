#pragma once
// Inflation machinery: sector (stone) and pseudo inflation, fixed points,
// consistency and border forcing checks, atlases of legal ball patches.

#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "hexa/patch.hpp"
#include "hexa/system.hpp"

namespace hexa {

// digit set of the m-fold sector inflation: sum of 2^i d_i with d_i sector offsets
std::vector<Point> sector_digits(int m);
// index into kChild of the sector offset congruent to w mod 2
int sector_index_of_residue(Point w);
// label of the cell at offset w of the order-m sector supertile of `label`
int sector_descendant(const System& sys, int label, int m, Point w);

// Stone inflation with the sector rule; exactly 4^m cells per input cell.
Patch inflate(const System& sys, const Patch& patch, int m);

// Overlapping inflation with the full 7-cell rule. Throws on a conflict.
Patch pseudo_inflate(const System& sys, const Patch& patch, int m);

// sigma^k of a self-reproducing seed placed at the origin (radius 2^k - 1 ball)
Patch fixed_point_patch(const System& sys, int seed, int k);
Grid fixed_point_grid(const System& sys, int seed, int k);

struct Conflict {
    int left = 0, right = 0;  // labels of the adjacent pair
    int direction = 0;        // right sits at kNeighbour[direction] from left
    Point at;                 // shared child position relative to 2 * left
    int first = 0, second = 0;
};

struct ConsistencyReport {
    std::size_t pairs_checked = 0;
    std::vector<Conflict> conflicts;
};

// adjacent label pairs (left, right, direction) seen in sector-inflated patches
std::vector<std::array<int, 3>> legal_pairs(const System& sys, int depth = 7);
ConsistencyReport verify_pseudo_consistency(const System& sys);
ConsistencyReport verify_pseudo_consistency(const System& sys, const std::vector<std::array<int, 3>>& pairs);

struct BorderForcing {
    bool holds = false;
    int minimal_order = 0;  // smallest m that forces, 0 if none up to the bound
};
BorderForcing verify_border_forcing(const System& sys, int order, int depth = 7);

// Legal radius-r balls, as label strings in hex_ball(r) order.
struct Atlas {
    int radius = 0;
    int depth = 0;  // fixed-point depth at which the scan stabilised
    std::unordered_set<std::string> balls;
    bool contains(const std::string& key) const { return balls.count(key) != 0; }
    std::vector<Patch> patches(const std::string& system) const;
};

std::string ball_key(const Grid& g, Point centre, const std::vector<Point>& offsets);
std::string ball_key(const Patch& p, Point centre, const std::vector<Point>& offsets);

// scans fixed points of increasing depth until one more level adds nothing
Atlas legal_patches(const System& sys, int radius, int min_depth = 4, int max_depth = 9);

// sector substitution matrix (counts of children by label) and primitivity
std::vector<std::vector<int>> substitution_matrix(const System& sys);
bool is_primitive(const System& sys);

}  // namespace hexa
