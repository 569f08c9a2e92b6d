#include "hexa/patch.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexa {

std::vector<Point> Patch::sorted_points() const {
    std::vector<Point> pts;
    pts.reserve(cells.size());
    for (const auto& [p, l] : cells) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace {
const System* known_system(const std::string& name) {
    for (const auto& n : kSystemNames)
        if (n == name) return &load_system(name);
    return nullptr;
}
}  // namespace

nlohmann::json patch_to_json(const Patch& p) {
    const System* sys = known_system(p.system);
    nlohmann::json cells = nlohmann::json::array();
    for (Point q : p.sorted_points()) {
        int l = p.at(q);
        if (sys)
            cells.push_back({q.a, q.b, sys->label_name(l)});
        else
            cells.push_back({q.a, q.b, l});
    }
    return {{"system", p.system}, {"cells", cells}};
}

Patch patch_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("system") || !j.contains("cells"))
        throw std::invalid_argument("patch: expected {system, cells}");
    Patch p;
    p.system = j.at("system").get<std::string>();
    const System* sys = known_system(p.system);
    for (const auto& c : j.at("cells")) {
        if (!c.is_array() || c.size() != 3) throw std::invalid_argument("patch: cell must be [a, b, label]");
        Point q{c[0].get<std::int64_t>(), c[1].get<std::int64_t>()};
        int l;
        if (c[2].is_string()) {
            if (!sys) throw std::invalid_argument("patch: named label in unknown system " + p.system);
            l = sys->parse_label(c[2].get<std::string>());
        } else {
            l = c[2].get<int>();
            if (sys && (l < 0 || l >= sys->size()))
                throw std::invalid_argument("patch: label index out of range at [" + std::to_string(q.a) + ", " +
                                            std::to_string(q.b) + "]");
        }
        if (!p.cells.emplace(q, l).second)
            throw std::invalid_argument("patch: duplicate cell [" + std::to_string(q.a) + ", " + std::to_string(q.b) + "]");
    }
    return p;
}

Patch translate(const Patch& p, Point t) {
    Patch out{p.system, {}};
    out.cells.reserve(p.cells.size());
    for (const auto& [q, l] : p.cells) out.cells.emplace(q + t, l);
    return out;
}

Patch transform(const Patch& p, D6 g, const System* sys) {
    Patch out{p.system, {}};
    out.cells.reserve(p.cells.size());
    for (const auto& [q, l] : p.cells) out.cells.emplace(act(g, q), sys ? sys->act(g, l) : l);
    return out;
}

Patch restrict_to(const Patch& p, const std::vector<Point>& domain) {
    Patch out{p.system, {}};
    for (Point q : domain) {
        int l = p.at(q);
        if (l >= 0) out.cells.emplace(q, l);
    }
    return out;
}

std::vector<Point> interior(const Patch& p, int r) {
    std::vector<Point> out;
    auto ball = hex_ball(r);
    for (Point q : p.sorted_points()) {
        bool ok = true;
        for (Point o : ball)
            if (!p.contains(q + o)) { ok = false; break; }
        if (ok) out.push_back(q);
    }
    return out;
}

Grid::Grid(std::int64_t radius) : r_(radius), v_(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)), -1) {}

Patch Grid::to_patch(const std::string& system) const {
    Patch p{system, {}};
    for (std::int64_t a = -r_; a <= r_; ++a)
        for (std::int64_t b = -r_; b <= r_; ++b) {
            int l = v_[idx({a, b})];
            if (l >= 0) p.cells.emplace(Point{a, b}, l);
        }
    return p;
}

Grid Grid::from_patch(const Patch& p) {
    std::int64_t r = 0;
    for (const auto& [q, l] : p.cells) r = std::max({r, q.a < 0 ? -q.a : q.a, q.b < 0 ? -q.b : q.b});
    Grid g(r);
    for (const auto& [q, l] : p.cells) g.set(q, l);
    return g;
}

}  // namespace hexa
