#pragma once
// Local derivations: factor maps to the half-hex and arrowed half-hex, the
// parity (chirality) colouring, the decorated llama image and the double
// hexagon picture.

#include <map>
#include <optional>
#include <vector>

#include "hexa/patch.hpp"
#include "hexa/system.hpp"

namespace hexa {

// radius-0 block maps; the output system's label indices
Patch derive_halfhex(const Patch& p);
Patch derive_arrowed_halfhex(const Patch& p);
// 0 = white, 1 = grey
Patch parity(const Patch& p);
// twelve-tile decorated llama image (labels 2 * orientation + chirality)
Patch decorated_llama(const Patch& p);

inline const std::string kParity = "parity";
inline const std::string kLlama = "llama";

// D6 action on the twelve decorated llama tiles
int llama_act(D6 g, int tile);

// Arrow on edge k of a hexagon whose arrow points to 60 * orientation degrees:
// +1 if the arrow runs counter-clockwise around the hexagon, -1 otherwise.
int edge_arrow(int orientation, int edge);

// Double hexagon picture: every tile becomes a large hexagon with its six
// edge arrows and an inscribed oriented hexagon; every vertex of the packing
// carries a small hexagon whose data is read off the three tiles around it.
struct DoubleHexagon {
    struct Large {
        std::array<int, 6> arrows{};  // edge_arrow for each edge
        int inner = 0;                // decorated llama tile of the inscribed hexagon
    };
    struct Small {
        bool complete = false;
        std::array<int, 3> around{};  // llama tiles of the three hexagons, counter-clockwise
    };
    std::map<Point, Large> large;
    // vertices keyed by 3 * (vertex position) in lattice coordinates
    std::map<Point, Small> small;
    bool operator==(const DoubleHexagon&) const = default;
};

DoubleHexagon double_hexagon(const Patch& penrose);
// inverse derivation through an atlas of radius-r double hexagon neighbourhoods;
// cells whose neighbourhood is incomplete or ambiguous are left out
struct Underive {
    int radius = 0;
    std::map<std::string, int> atlas;  // neighbourhood key -> penrose label
    std::size_t ambiguous = 0;
};
Underive build_underive(int radius, int depth = 6);
Patch underive(const DoubleHexagon& d, const Underive& u);

}  // namespace hexa
