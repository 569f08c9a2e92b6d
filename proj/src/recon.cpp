#include "hexa/recon.hpp"

#include <stdexcept>

#include "hexa/derive.hpp"
#include "hexa/engine.hpp"

namespace hexa {

std::size_t CoronaAtlas::ambiguous() const {
    std::size_t n = 0;
    for (const auto& [k, s] : table) n += s.size() > 1;
    return n;
}

nlohmann::json CoronaAtlas::to_json() const {
    const System& sys = load_system(system);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [k, s] : table) {
        nlohmann::json labels = nlohmann::json::array();
        for (int l : s) labels.push_back(sys.label_name(l));
        rows.push_back({{"corona", k}, {"centre", labels}});
    }
    return {{"system", system}, {"order", order}, {"depth", depth}, {"ambiguous", ambiguous()}, {"coronae", rows}};
}

std::string corona_key(const Patch& parity, Point centre, const std::vector<Point>& ball) {
    std::string key(ball.size(), '0');
    for (std::size_t i = 0; i < ball.size(); ++i) {
        int c = parity.at(centre + ball[i]);
        if (c < 0) return {};
        key[i] = static_cast<char>('0' + c);
    }
    return key;
}

CoronaAtlas corona_atlas(const System& sys, int order, int depth) {
    if (!sys.chiral) throw std::invalid_argument("corona_atlas: needs a Penrose or Taylor system");
    CoronaAtlas atlas{sys.name, order, depth, {}};
    Patch p = fixed_point_patch(sys, sys.seeds().at(0), depth);
    Patch par = parity(p);
    auto ball = hex_ball(order);
    for (const auto& [c, l] : p.cells) {
        auto key = corona_key(par, c, ball);
        if (!key.empty()) atlas.table[key].insert(l);
    }
    return atlas;
}

int minimal_injective_order(const System& sys, int depth, int max_order) {
    for (int r = 0; r <= max_order; ++r)
        if (corona_atlas(sys, r, depth).injective()) return r;
    return -1;
}

Reconstruction reconstruct(const Patch& par, const CoronaAtlas& atlas) {
    Reconstruction out;
    out.patch.system = atlas.system;
    auto ball = hex_ball(atlas.order);
    for (Point c : par.sorted_points()) {
        auto key = corona_key(par, c, ball);
        if (key.empty()) continue;
        auto it = atlas.table.find(key);
        if (it == atlas.table.end())
            out.unknown.push_back(c);
        else if (it->second.size() > 1)
            out.ambiguous.push_back(c);
        else
            out.patch.cells.emplace(c, *it->second.begin());
    }
    return out;
}

}  // namespace hexa
