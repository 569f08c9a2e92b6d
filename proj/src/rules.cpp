#include "hexa/rules.hpp"

#include <stdexcept>

#include "hexa/derive.hpp"
#include "hexa/system.hpp"

namespace hexa {

nlohmann::json violations_to_json(const std::vector<Violation>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) {
        nlohmann::json loc = x.location;
        out.push_back({{"rule", x.rule}, {"location", loc}, {"vertex", x.vertex}, {"description", x.description}});
    }
    return out;
}

int capflag(int tile, int k) {
    int o = tile / 2, chi = tile % 2;
    int l = o % 3, beta = o < 3 ? 1 : 0, rho = chi ^ beta;
    int line = k % 3;
    if (l == line) {
        int ahead = rho == 1 ? 1 : 2;
        return k < 3 ? ahead : 3 - ahead;
    }
    return 3 - (((l - line) % 3 + 3) % 3);
}

namespace {

void check_llama_labels(const Patch& p) {
    if (p.system != kLlama) throw std::invalid_argument("check_taylor_rules: expects a decorated llama patch");
    for (const auto& [q, t] : p.cells)
        if (t < 0 || t >= 12)
            throw std::invalid_argument("tile outside the 12-tile alphabet at [" + std::to_string(q.a) + ", " +
                                        std::to_string(q.b) + "]");
}

std::string where(Point p) { return "[" + std::to_string(p.a) + ", " + std::to_string(p.b) + "]"; }

}  // namespace

std::vector<Violation> check_taylor_rules(const Patch& p) {
    check_llama_labels(p);
    std::vector<Violation> out;
    for (Point x : p.sorted_points()) {
        int t = p.at(x);
        for (int k = 0; k < 3; ++k) {
            int u = p.at(x + kNeighbour[k]);
            if (u >= 0 && edge_arrow(t / 2, k) != -edge_arrow(u / 2, k + 3))
                out.push_back({"R1", x, false, "edge " + std::to_string(k) + " arrows disagree with " + where(x + kNeighbour[k])});
        }
        for (int k = 0; k < 3; ++k) {
            Point y = x + kDiagonal[k];
            int u = p.at(y);
            if (u < 0 || !p.contains(x + kNeighbour[k]) || !p.contains(x + kNeighbour[(k + 5) % 6])) continue;
            if (capflag(t, k) + capflag(u, k + 3) != 3)
                out.push_back({"R2", x, false, "markers across the edge towards " + where(y) + " disagree"});
        }
        for (int s = 0; s < 2; ++s) {
            const auto& star = s == 0 ? kStarA : kStarB;
            const auto& corner = s == 0 ? kStarACorner : kStarBCorner;
            int f[3];
            bool full = true;
            for (int i = 0; i < 3 && full; ++i) {
                int u = p.at(x + star[i]);
                if (u < 0) full = false;
                else f[i] = capflag(u, corner[i]);
            }
            if (full && f[0] == f[1] && f[1] == f[2])
                out.push_back({"R3", 3 * x + kDiagonal[corner[0]], true, "threefold symmetric markers at corner " +
                                                                            std::to_string(corner[0]) + " of " + where(x)});
        }
    }
    return out;
}

std::vector<Violation> check_edge_matching(const Patch& p) {
    const System& sys = load_system(p.system);
    std::vector<Violation> out;
    for (const auto& [q, l] : p.cells)
        if (l < 0 || l >= sys.size()) throw std::invalid_argument("label outside the alphabet at " + where(q));
    for (Point x : p.sorted_points()) {
        int l = p.at(x);
        for (int k = 0; k < 3; ++k) {
            int m = p.at(x + kNeighbour[k]);
            if (m >= 0 && sys.edge_code[l][k] != sys.edge_code[m][k + 3])
                out.push_back({"edge-mismatch", x, false, "edge " + std::to_string(k) + " lines do not continue into " +
                                                              where(x + kNeighbour[k])});
        }
    }
    return out;
}

Patch threefold_seed() {
    const D6 r120{2, false};
    for (int t = 0; t < 12; ++t) {
        Patch p{kLlama, {}};
        int u = llama_act(r120, t), w = llama_act(r120, u);
        p.cells = {{kStarA[0], t}, {kStarA[1], u}, {kStarA[2], w}};
        bool r1 = true;
        for (const auto& v : check_taylor_rules(p)) r1 = r1 && v.rule != "R1";
        if (r1) return p;
    }
    throw std::logic_error("threefold_seed: no arrow-compatible tile");
}

}  // namespace hexa
