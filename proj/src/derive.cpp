#include "hexa/derive.hpp"

#include <set>
#include <stdexcept>

#include "hexa/engine.hpp"

namespace hexa {

namespace {

const System& cover_of(const Patch& p, bool need_chiral) {
    const System& sys = load_system(p.system);
    if (need_chiral && !sys.chiral) throw std::invalid_argument("derivation needs a Penrose or Taylor patch, got " + p.system);
    if (!need_chiral && sys.arrowed.empty()) throw std::invalid_argument("derivation undefined for " + p.system);
    return sys;
}

Patch relabel(const Patch& p, const std::string& system, const std::vector<int>& map) {
    Patch out{system, {}};
    out.cells.reserve(p.cells.size());
    for (const auto& [q, l] : p.cells) {
        if (l < 0 || l >= static_cast<int>(map.size()) || map[l] < 0)
            throw std::invalid_argument("illegal label at [" + std::to_string(q.a) + ", " + std::to_string(q.b) + "]");
        out.cells.emplace(q, map[l]);
    }
    return out;
}

}  // namespace

Patch derive_halfhex(const Patch& p) {
    const System& sys = load_system(p.system);
    if (!sys.chiral && p.system != "arrowed") throw std::invalid_argument("derive_halfhex: unsupported system " + p.system);
    return relabel(p, "halfhex", sys.halfhex);
}

Patch derive_arrowed_halfhex(const Patch& p) {
    const System& sys = cover_of(p, true);
    return relabel(p, "arrowed", sys.arrowed);
}

Patch parity(const Patch& p) {
    const System& sys = cover_of(p, true);
    std::vector<int> chi(sys.size());
    for (int i = 0; i < sys.size(); ++i) chi[i] = sys.alphabet[i].chirality;
    return relabel(p, kParity, chi);
}

Patch decorated_llama(const Patch& p) {
    const System& sys = cover_of(p, true);
    return relabel(p, kLlama, sys.llama);
}

int llama_act(D6 g, int tile) {
    int o = tile / 2, c = tile % 2;
    if (g.reflected) {
        o = ((2 - o) % 6 + 6) % 6;
        c ^= 1;
    }
    o = (o + g.rotation) % 6;
    return llama_index(o, c);
}

int edge_arrow(int orientation, int edge) {
    // offsets from the arrow orientation: the co-oriented pair is o+1, o+4
    static constexpr std::array<int, 6> pattern = {-1, -1, +1, -1, +1, +1};
    return pattern[static_cast<std::size_t>(((edge - orientation) % 6 + 6) % 6)];
}

DoubleHexagon double_hexagon(const Patch& penrose) {
    if (penrose.system != "penrose") throw std::invalid_argument("double_hexagon: expects a penrose patch");
    Patch ll = decorated_llama(penrose);
    DoubleHexagon d;
    for (const auto& [p, t] : ll.cells) {
        DoubleHexagon::Large big;
        for (int k = 0; k < 6; ++k) big.arrows[k] = edge_arrow(t / 2, k);
        big.inner = t;
        d.large.emplace(p, big);
        for (int k = 0; k < 6; ++k) {
            Point v = 3 * p + kDiagonal[k];
            auto& s = d.small[v];
            s.around[k / 2] = t;
        }
    }
    for (auto& [v, s] : d.small) {
        int present = 0;
        for (int k = 0; k < 6; ++k) {
            // the tile whose corner k sits at v
            Point t3 = v - kDiagonal[k];
            if (t3.a % 3 == 0 && t3.b % 3 == 0 && ll.contains({t3.a / 3, t3.b / 3})) ++present;
        }
        s.complete = present == 3;
        if (!s.complete) s.around = {-1, -1, -1};
    }
    return d;
}

namespace {

std::string neighbourhood_key(const std::map<Point, DoubleHexagon::Large>& large,
                              const std::map<Point, DoubleHexagon::Small>& small, Point c,
                              const std::vector<Point>& ball) {
    std::string key;
    for (Point o : ball) {
        auto it = large.find(c + o);
        if (it == large.end()) return {};
        key.push_back(static_cast<char>(it->second.inner));
        for (int k = 0; k < 6; ++k) {
            auto s = small.find(3 * (c + o) + kDiagonal[k]);
            if (s == small.end() || !s->second.complete) return {};
            for (int x : s->second.around) key.push_back(static_cast<char>(x));
        }
    }
    return key;
}

}  // namespace

Underive build_underive(int radius, int depth) {
    const System& sys = load_system("penrose");
    Underive u;
    u.radius = radius;
    auto ball = hex_ball(radius);
    std::map<std::string, int> seen;
    std::set<std::string> bad;
    for (int seed : sys.seeds()) {
        Patch p = fixed_point_patch(sys, seed, depth);
        DoubleHexagon d = double_hexagon(p);
        for (const auto& [c, l] : p.cells) {
            auto key = neighbourhood_key(d.large, d.small, c, ball);
            if (key.empty()) continue;
            auto [it, fresh] = seen.emplace(key, l);
            if (!fresh && it->second != l) bad.insert(key);
        }
    }
    for (const auto& k : bad) seen.erase(k);
    u.atlas = std::move(seen);
    u.ambiguous = bad.size();
    return u;
}

Patch underive(const DoubleHexagon& d, const Underive& u) {
    Patch out{"penrose", {}};
    auto ball = hex_ball(u.radius);
    for (const auto& [c, big] : d.large) {
        auto key = neighbourhood_key(d.large, d.small, c, ball);
        if (key.empty()) continue;
        auto it = u.atlas.find(key);
        if (it != u.atlas.end()) out.cells.emplace(c, it->second);
    }
    return out;
}

}  // namespace hexa
