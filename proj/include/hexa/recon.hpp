#pragma once
// Reconstruction of decorated tilings from their parity patterns through
// atlases of hexagonal coronae.

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/patch.hpp"
#include "hexa/system.hpp"

namespace hexa {

struct CoronaAtlas {
    std::string system;
    int order = 0;
    int depth = 0;
    // parity colours on hex_ball(order), as a '0'/'1' string -> centre labels
    std::map<std::string, std::set<int>> table;

    std::size_t ambiguous() const;
    bool injective() const { return ambiguous() == 0; }
    nlohmann::json to_json() const;
};

std::string corona_key(const Patch& parity, Point centre, const std::vector<Point>& ball);

CoronaAtlas corona_atlas(const System& sys, int order, int depth);
// smallest order <= max_order with an injective atlas, -1 if none
int minimal_injective_order(const System& sys, int depth, int max_order = 4);

struct Reconstruction {
    Patch patch;
    std::vector<Point> unknown;    // corona absent from the atlas
    std::vector<Point> ambiguous;  // corona with several centre labels
};
Reconstruction reconstruct(const Patch& parity, const CoronaAtlas& atlas);

}  // namespace hexa
