#pragma once
// Substitution systems: label alphabets, pseudo inflation tables, D6 action,
// factor maps to the smaller systems and per-edge decoration codes.

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/lattice.hpp"

namespace hexa {

struct TileLabel {
    int base = 0;
    int orientation = 0;  // arrow direction index, angle 60 * orientation
    int chirality = 0;
    bool operator==(const TileLabel&) const = default;
};

// the twelve decorated-llama tiles are indexed 2 * orientation + chirality
inline int llama_index(int orientation, int chirality) { return 2 * orientation + chirality; }

struct System {
    std::string name;
    bool chiral = false;                 // labels carry a chirality bit
    int orbit = 1;                       // labels per base
    int preferred = 0;                   // base of the self-reproducing tiles
    std::vector<std::string> base_names;
    std::vector<TileLabel> alphabet;
    std::vector<std::array<int, 7>> child;  // pseudo rule, indexed like kChild
    std::vector<int> rotate;                // label of the 60 degree rotated tile
    std::vector<int> reflect;               // label of the mirrored tile
    std::vector<int> halfhex;               // diagonal type 0..2
    std::vector<int> arrowed;               // arrow orientation 0..5 (-1 for halfhex)
    std::vector<int> llama;                 // decorated llama tile 0..11 (-1 if not chiral)
    std::vector<std::array<int, 6>> edge_code;  // matching code of edge k (faces kNeighbour[k])

    int size() const { return static_cast<int>(alphabet.size()); }
    int sector_child(int label, int i) const { return child[label][i]; }
    int act(D6 g, int label) const;
    int index_of(const TileLabel& t) const;
    std::string label_name(int label) const;
    int parse_label(const std::string& s) const;  // throws with the valid list
    std::vector<int> seeds() const;               // labels reproducing themselves at the centre
    std::vector<std::string> seed_names() const;
};

// JSON asset round trip
nlohmann::json to_json(const System& s);
System system_from_json(const nlohmann::json& j);

// Regenerate a system from its 2-adic coding (deterministic).
System generate_system(const std::string& name);

// Directory holding the JSON rule tables; HEXA_DATA overrides the built-in path.
std::filesystem::path data_dir();
const System& load_system(const std::string& name);
System load_system_file(const std::filesystem::path& file);

inline const std::array<std::string, 4> kSystemNames = {"halfhex", "arrowed", "penrose", "taylor"};

}  // namespace hexa
