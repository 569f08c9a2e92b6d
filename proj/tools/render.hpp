#pragma once
// SVG output for patches of the packing and of its derived pictures.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "hexa/patch.hpp"

namespace hexa::render {

struct MissingStyle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RenderSpec {
    double scale = 20;                // pixels per unit edge length
    std::map<int, std::string> fill;  // label -> colour
    bool arrows = true;
    bool diagonals = true;
    bool markers = true;              // chirality dot
    std::optional<std::array<double, 4>> viewport;  // x, y, w, h in edge units
};

// fill colours for every label of the patch's system
RenderSpec default_spec(const std::string& system);
// style file: {"scale", "fill": {label name or index: colour}, "arrows",
// "diagonals", "markers", "viewport": [x, y, w, h]}
RenderSpec spec_from_json(const nlohmann::json& j, const std::string& system);

// throws MissingStyle if a label of the patch has no fill
std::string render(const Patch& patch, const RenderSpec& spec);

}  // namespace hexa::render
