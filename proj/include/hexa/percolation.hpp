#pragma once
// Connected components of the two colours of a parity pattern.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/patch.hpp"

namespace hexa {

using Shape = std::vector<Point>;  // sorted, translated so the first cell is the origin

Shape normalise(std::vector<Point> cells);

struct Cluster {
    int colour = 0;
    std::vector<Point> cells;  // sorted
    int diameter = 0;          // graph diameter under edge adjacency
    bool island = false;       // does not touch the patch boundary
};

struct ColourReport {
    std::size_t count = 0;
    std::vector<std::size_t> sizes;  // descending
    std::size_t max_size = 0;
    int max_diameter = 0;
    std::size_t islands = 0;
};

struct ClusterReport {
    std::array<ColourReport, 2> colour;
    std::vector<Cluster> clusters;  // ordered by smallest cell
    nlohmann::json to_json() const;
};

ClusterReport clusters(const Patch& parity);
int graph_diameter(const std::vector<Point>& cells);

struct IslandCount {
    Shape shape;
    int colour = 0;
    std::size_t count = 0;
};
// islands grouped by translation class, smallest first
std::vector<IslandCount> island_census(const Patch& parity);

struct GrowthPoint {
    int k = 0;
    std::array<int, 2> max_diameter{};
};
std::vector<GrowthPoint> growth_curve(const std::string& system, int k_min, int k_max);

Patch swap_colours(const Patch& parity);
// is some translate of `small` contained in `big` (labels equal)?
bool occurs_in(const Patch& small, const Patch& big);

}  // namespace hexa
