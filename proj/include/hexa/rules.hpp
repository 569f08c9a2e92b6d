#pragma once
// Local rules: R1-R3 for decorated llama patches, edge matching for the
// decorated hexagon systems.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/patch.hpp"

namespace hexa {

struct Violation {
    std::string rule;  // R1, R2, R3 or edge-mismatch
    Point location;    // cell, or 3 * vertex position for R3
    bool vertex = false;
    std::string description;
};

nlohmann::json violations_to_json(const std::vector<Violation>& v);

// Position of the point marker seen from a tile along diagonal k:
// 1 or 2, the type of the first tile off the tile's own diagonal line,
// counted relative to that line's type.
int capflag(int llama_tile, int k);

// The three tiles meeting at corner 0 of the origin tile, and their corners.
inline constexpr std::array<Point, 3> kStarA = {Point{0, 0}, Point{1, -1}, Point{1, 0}};
inline constexpr std::array<int, 3> kStarACorner = {0, 2, 4};
inline constexpr std::array<Point, 3> kStarB = {Point{0, 0}, Point{1, 0}, Point{0, 1}};
inline constexpr std::array<int, 3> kStarBCorner = {1, 3, 5};

std::vector<Violation> check_taylor_rules(const Patch& llama);
std::vector<Violation> check_edge_matching(const Patch& p);

// three tiles around one vertex, related by 120 degree rotations, that
// satisfy R1 on their common edges while all markers point the same way
Patch threefold_seed();

}  // namespace hexa
