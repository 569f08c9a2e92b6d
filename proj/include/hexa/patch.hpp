#pragma once
// Finite labelled patches of the hexagon packing.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexa/lattice.hpp"
#include "hexa/system.hpp"

namespace hexa {

struct Patch {
    std::string system;
    std::unordered_map<Point, int, PointHash> cells;

    std::size_t size() const { return cells.size(); }
    bool empty() const { return cells.empty(); }
    bool contains(Point p) const { return cells.count(p) != 0; }
    int at(Point p) const {
        auto it = cells.find(p);
        return it == cells.end() ? -1 : it->second;
    }
    std::vector<Point> sorted_points() const;
    bool operator==(const Patch& o) const { return system == o.system && cells == o.cells; }
};

// patches over one of the four systems store label names, others store integers
nlohmann::json patch_to_json(const Patch& p);
Patch patch_from_json(const nlohmann::json& j);

Patch translate(const Patch& p, Point t);
// g acts on positions and, through the system, on labels
Patch transform(const Patch& p, D6 g, const System* sys);
Patch restrict_to(const Patch& p, const std::vector<Point>& domain);
// cells whose radius-r ball lies in the patch
std::vector<Point> interior(const Patch& p, int r);

// Dense storage for large centred patches; absent cells hold -1.
class Grid {
public:
    explicit Grid(std::int64_t radius = 0);
    std::int64_t radius() const { return r_; }
    bool inside(Point p) const { return p.a >= -r_ && p.a <= r_ && p.b >= -r_ && p.b <= r_; }
    int get(Point p) const { return inside(p) ? v_[idx(p)] : -1; }
    void set(Point p, int label) { v_[idx(p)] = label; }
    Patch to_patch(const std::string& system) const;
    static Grid from_patch(const Patch& p);

private:
    std::size_t idx(Point p) const {
        return static_cast<std::size_t>((p.a + r_) * (2 * r_ + 1) + (p.b + r_));
    }
    std::int64_t r_;
    std::vector<int> v_;
};

}  // namespace hexa
