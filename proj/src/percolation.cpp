#include "hexa/percolation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hexa/derive.hpp"
#include "hexa/engine.hpp"

namespace hexa {

Shape normalise(std::vector<Point> cells) {
    std::sort(cells.begin(), cells.end());
    if (cells.empty()) return cells;
    Point o = cells.front();
    for (auto& c : cells) c -= o;
    return cells;
}

namespace {

struct Graph {
    std::vector<std::vector<int>> adj;
    explicit Graph(const std::vector<Point>& cells) : adj(cells.size()) {
        std::unordered_map<Point, int, PointHash> id;
        for (std::size_t i = 0; i < cells.size(); ++i) id.emplace(cells[i], static_cast<int>(i));
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (Point n : kNeighbour) {
                auto it = id.find(cells[i] + n);
                if (it != id.end()) adj[i].push_back(it->second);
            }
    }
    std::vector<int> bfs(int s) const {
        std::vector<int> d(adj.size(), -1);
        std::deque<int> q{s};
        d[s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[x])
                if (d[y] < 0) {
                    d[y] = d[x] + 1;
                    q.push_back(y);
                }
        }
        return d;
    }
};

int argmax(const std::vector<int>& d) {
    return static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
}

}  // namespace

int graph_diameter(const std::vector<Point>& cells) {
    if (cells.size() <= 1) return 0;
    Graph g(cells);
    // iFUB from the midpoint of a double sweep
    auto d0 = g.bfs(0);
    int a = argmax(d0);
    auto da = g.bfs(a);
    int b = argmax(da);
    auto db = g.bfs(b);
    int u = 0;
    int best = da[b];
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (da[i] + db[i] == best && std::abs(da[i] - db[i]) <= 1) { u = static_cast<int>(i); break; }
    auto du = g.bfs(u);
    int ecc = *std::max_element(du.begin(), du.end());
    std::vector<std::vector<int>> level(ecc + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) level[du[i]].push_back(static_cast<int>(i));
    int lb = std::max(best, ecc);
    for (int i = ecc; i >= 1; --i) {
        int bi = 0;
        for (int x : level[i]) {
            auto dx = g.bfs(x);
            bi = std::max(bi, *std::max_element(dx.begin(), dx.end()));
        }
        lb = std::max(lb, bi);
        if (lb > 2 * (i - 1)) return lb;
    }
    return lb;
}

ClusterReport clusters(const Patch& par) {
    for (const auto& [p, c] : par.cells)
        if (c != 0 && c != 1) throw std::invalid_argument("clusters: parity patch must use colours 0 and 1");
    auto pts = par.sorted_points();
    std::unordered_map<Point, int, PointHash> id;
    for (std::size_t i = 0; i < pts.size(); ++i) id.emplace(pts[i], static_cast<int>(i));
    std::vector<int> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (Point n : kNeighbour) {
            auto it = id.find(pts[i] + n);
            if (it == id.end() || par.at(pts[i]) != par.at(it->first)) continue;
            int x = find(static_cast<int>(i)), y = find(it->second);
            // the smaller index becomes the root, so ids follow the sorted order
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
    std::map<int, std::size_t> slot;
    ClusterReport rep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto [it, fresh] = slot.emplace(r, rep.clusters.size());
        if (fresh) {
            rep.clusters.push_back({par.at(pts[i]), {}, 0, true});
        }
        auto& cl = rep.clusters[it->second];
        cl.cells.push_back(pts[i]);
        for (Point n : kNeighbour)
            if (!par.contains(pts[i] + n)) cl.island = false;
    }
    for (auto& cl : rep.clusters) {
        auto& cr = rep.colour[cl.colour];
        ++cr.count;
        cr.sizes.push_back(cl.cells.size());
        cr.islands += cl.island;
    }
    for (auto& cl : rep.clusters) {
        cl.diameter = graph_diameter(cl.cells);
        auto& cr = rep.colour[cl.colour];
        cr.max_diameter = std::max(cr.max_diameter, cl.diameter);
    }
    for (auto& cr : rep.colour) {
        std::sort(cr.sizes.rbegin(), cr.sizes.rend());
        cr.max_size = cr.sizes.empty() ? 0 : cr.sizes.front();
    }
    return rep;
}

nlohmann::json ClusterReport::to_json() const {
    nlohmann::json out = nlohmann::json::object();
    for (int c = 0; c < 2; ++c) {
        const auto& cr = colour[c];
        out[c == 0 ? "white" : "grey"] = {{"clusters", cr.count},
                                          {"max_size", cr.max_size},
                                          {"max_diameter", cr.max_diameter},
                                          {"islands", cr.islands},
                                          {"sizes", cr.sizes}};
    }
    return out;
}

std::vector<IslandCount> island_census(const Patch& par) {
    auto rep = clusters(par);
    std::map<std::pair<Shape, int>, std::size_t> count;
    for (const auto& cl : rep.clusters)
        if (cl.island) ++count[{normalise(cl.cells), cl.colour}];
    std::vector<IslandCount> out;
    for (const auto& [key, n] : count) out.push_back({key.first, key.second, n});
    std::stable_sort(out.begin(), out.end(),
                     [](const IslandCount& x, const IslandCount& y) { return x.shape.size() < y.shape.size(); });
    return out;
}

std::vector<GrowthPoint> growth_curve(const std::string& system, int k_min, int k_max) {
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("growth_curve: need 1 <= k_min <= k_max");
    const System& sys = load_system(system);
    std::vector<GrowthPoint> out;
    for (int k = k_min; k <= k_max; ++k) {
        auto rep = clusters(parity(fixed_point_patch(sys, sys.seeds().at(0), k)));
        out.push_back({k, {rep.colour[0].max_diameter, rep.colour[1].max_diameter}});
    }
    return out;
}

Patch swap_colours(const Patch& par) {
    Patch out{par.system, {}};
    for (const auto& [p, c] : par.cells) out.cells.emplace(p, 1 - c);
    return out;
}

bool occurs_in(const Patch& small, const Patch& big) {
    if (small.empty()) return true;
    auto pts = small.sorted_points();
    Point anchor = pts.front();
    int want = small.at(anchor);
    for (const auto& [q, l] : big.cells) {
        if (l != want) continue;
        Point t = q - anchor;
        bool ok = true;
        for (Point p : pts)
            if (big.at(p + t) != small.at(p)) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

}  // namespace hexa
