#include "hexa/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hexa {

int sector_index_of_residue(Point w) {
    int ra = static_cast<int>(((w.a % 2) + 2) % 2), rb = static_cast<int>(((w.b % 2) + 2) % 2);
    if (ra == 0) return rb == 0 ? 0 : 1;
    return rb == 0 ? 2 : 3;
}

namespace {

void check_label(const System& sys, int l, Point where) {
    if (l < 0 || l >= sys.size())
        throw std::invalid_argument("unknown label " + std::to_string(l) + " at [" + std::to_string(where.a) + ", " +
                                    std::to_string(where.b) + "]");
}

std::string conflict_message(Point p, int a, int b) {
    return "pseudo inflation conflict at [" + std::to_string(p.a) + ", " + std::to_string(p.b) + "]: " +
           std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

std::vector<Point> sector_digits(int m) {
    std::vector<Point> d{Point{0, 0}};
    for (int i = 0; i < m; ++i) {
        std::vector<Point> next;
        next.reserve(d.size() * kSectorSize);
        for (Point w : d)
            for (int j = 0; j < kSectorSize; ++j) next.push_back(2 * w + kChild[j]);
        d.swap(next);
    }
    return d;
}

int sector_descendant(const System& sys, int label, int m, Point w) {
    if (m == 0) {
        if (w != Point{0, 0}) throw std::invalid_argument("sector_descendant: offset outside supertile");
        return label;
    }
    int j = sector_index_of_residue(w);
    Point parent{(w.a - kChild[j].a) / 2, (w.b - kChild[j].b) / 2};
    return sys.child[sector_descendant(sys, label, m - 1, parent)][j];
}

Patch inflate(const System& sys, const Patch& patch, int m) {
    if (m < 0) throw std::invalid_argument("inflate: negative power");
    Patch cur = patch;
    for (const auto& [p, l] : cur.cells) check_label(sys, l, p);
    for (int step = 0; step < m; ++step) {
        Patch next{cur.system, {}};
        next.cells.reserve(cur.cells.size() * kSectorSize);
        for (const auto& [p, l] : cur.cells)
            for (int j = 0; j < kSectorSize; ++j) {
                Point q = 2 * p + kChild[j];
                if (!next.cells.emplace(q, sys.child[l][j]).second)
                    throw std::logic_error("inflate: sector images overlap");
            }
        cur.cells.swap(next.cells);
    }
    return cur;
}

Patch pseudo_inflate(const System& sys, const Patch& patch, int m) {
    Patch cur = patch;
    for (const auto& [p, l] : cur.cells) check_label(sys, l, p);
    for (int step = 0; step < m; ++step) {
        Patch next{cur.system, {}};
        next.cells.reserve(cur.cells.size() * 4 + 16);
        for (const auto& [p, l] : cur.cells)
            for (int j = 0; j < 7; ++j) {
                Point q = 2 * p + kChild[j];
                int c = sys.child[l][j];
                auto [it, fresh] = next.cells.emplace(q, c);
                if (!fresh && it->second != c) throw std::runtime_error(conflict_message(q, it->second, c));
            }
        cur.cells.swap(next.cells);
    }
    return cur;
}

Grid fixed_point_grid(const System& sys, int seed, int k) {
    check_label(sys, seed, {0, 0});
    if (sys.child[seed][0] != seed) {
        std::string msg = "seed " + sys.label_name(seed) + " does not reproduce itself; valid seeds:";
        for (const auto& s : sys.seed_names()) msg += " " + s;
        throw std::invalid_argument(msg);
    }
    Grid cur(0);
    cur.set({0, 0}, seed);
    for (int step = 0; step < k; ++step) {
        std::int64_t r = cur.radius();
        Grid next(2 * r + 1);
        for (std::int64_t a = -r; a <= r; ++a)
            for (std::int64_t b = -r; b <= r; ++b) {
                int l = cur.get({a, b});
                if (l < 0) continue;
                for (int j = 0; j < 7; ++j) {
                    Point q = 2 * Point{a, b} + kChild[j];
                    int c = sys.child[l][j];
                    int old = next.get(q);
                    if (old >= 0 && old != c) throw std::runtime_error(conflict_message(q, old, c));
                    next.set(q, c);
                }
            }
        cur = std::move(next);
    }
    return cur;
}

Patch fixed_point_patch(const System& sys, int seed, int k) {
    return fixed_point_grid(sys, seed, k).to_patch(sys.name);
}

std::vector<std::array<int, 3>> legal_pairs(const System& sys, int depth) {
    std::set<std::array<int, 3>> pairs;
    for (int l = 0; l < sys.size(); ++l) {
        Patch p{sys.name, {{Point{0, 0}, l}}};
        Patch q = inflate(sys, p, depth);
        for (const auto& [x, a] : q.cells)
            for (int k = 0; k < 3; ++k) {
                int b = q.at(x + kNeighbour[k]);
                if (b >= 0) pairs.insert({a, b, k});
            }
    }
    return {pairs.begin(), pairs.end()};
}

ConsistencyReport verify_pseudo_consistency(const System& sys, const std::vector<std::array<int, 3>>& pairs) {
    ConsistencyReport rep;
    for (const auto& [l, r, k] : pairs) {
        ++rep.pairs_checked;
        Point base = 2 * kNeighbour[k];
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                if (kChild[i] != base + kChild[j]) continue;
                int x = sys.child[l][i], y = sys.child[r][j];
                if (x != y) rep.conflicts.push_back({l, r, k, kChild[i], x, y});
            }
    }
    return rep;
}

ConsistencyReport verify_pseudo_consistency(const System& sys) {
    return verify_pseudo_consistency(sys, legal_pairs(sys, 5));
}

BorderForcing verify_border_forcing(const System& sys, int order, int depth) {
    if (order < 1) throw std::invalid_argument("verify_border_forcing: order must be >= 1");
    // Order-m supertile of a tile at x: the hexagon of radius 2^(m-1) around
    // 2^m x in the m-fold sector inflation. It forces its border if all its
    // occurrences share the labels on the next ring as well.
    Grid coarse = fixed_point_grid(sys, sys.seeds().at(0), depth);
    std::int64_t r = coarse.radius();
    for (int m = 1; m <= order; ++m) {
        std::int64_t scale = std::int64_t{1} << m;
        auto ball = hex_ball(scale / 2 + 1);
        std::vector<std::set<std::vector<int>>> seen(sys.size());
        for (std::int64_t a = -r; a <= r; ++a)
            for (std::int64_t b = -r; b <= r; ++b) {
                int l = coarse.get({a, b});
                if (l < 0) continue;
                Point origin = scale * Point{a, b};
                std::vector<int> key;
                key.reserve(ball.size());
                for (Point w : ball) {
                    Point y = origin + w;
                    // y = 2^m x + sum 2^i d_i with sector offsets d_i
                    std::vector<int> digits;
                    for (int i = 0; i < m; ++i) {
                        int j = sector_index_of_residue(y);
                        digits.push_back(j);
                        y = Point{(y.a - kChild[j].a) / 2, (y.b - kChild[j].b) / 2};
                    }
                    int x = coarse.get(y);
                    if (x < 0) break;
                    for (auto it = digits.rbegin(); it != digits.rend(); ++it) x = sys.child[x][*it];
                    key.push_back(x);
                }
                if (key.size() == ball.size()) seen[l].insert(std::move(key));
            }
        bool forced = std::all_of(seen.begin(), seen.end(), [](const auto& s) { return s.size() <= 1; });
        if (forced) return {true, m};
    }
    return {false, 0};
}

std::string ball_key(const Grid& g, Point centre, const std::vector<Point>& offsets) {
    std::string key(offsets.size(), '\0');
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        int l = g.get(centre + offsets[i]);
        if (l < 0) return {};
        key[i] = static_cast<char>(l);
    }
    return key;
}

std::string ball_key(const Patch& p, Point centre, const std::vector<Point>& offsets) {
    std::string key(offsets.size(), '\0');
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        int l = p.at(centre + offsets[i]);
        if (l < 0) return {};
        key[i] = static_cast<char>(l);
    }
    return key;
}

std::vector<Patch> Atlas::patches(const std::string& system) const {
    std::vector<std::string> keys(balls.begin(), balls.end());
    std::sort(keys.begin(), keys.end());
    auto offsets = hex_ball(radius);
    std::vector<Patch> out;
    for (const auto& k : keys) {
        Patch p{system, {}};
        for (std::size_t i = 0; i < offsets.size(); ++i) p.cells.emplace(offsets[i], static_cast<unsigned char>(k[i]));
        out.push_back(std::move(p));
    }
    return out;
}

Atlas legal_patches(const System& sys, int radius, int min_depth, int max_depth) {
    if (radius < 0) throw std::invalid_argument("legal_patches: negative radius");
    int seed = sys.seeds().at(0);
    auto offsets = hex_ball(radius);
    auto scan = [&](int depth) {
        std::unordered_set<std::string> balls;
        Grid g = fixed_point_grid(sys, seed, depth);
        std::int64_t reach = g.radius() - radius;
        for (Point c : hex_ball(std::max<std::int64_t>(reach, -1))) {
            auto key = ball_key(g, c, offsets);
            if (!key.empty()) balls.insert(std::move(key));
        }
        return balls;
    };
    auto prev = scan(min_depth);
    for (int d = min_depth + 1; d <= max_depth; ++d) {
        auto cur = scan(d);
        if (cur.size() == prev.size()) return {radius, d - 1, std::move(prev)};
        prev = std::move(cur);
    }
    throw std::runtime_error("legal_patches: radius-" + std::to_string(radius) + " atlas not stable by depth " +
                             std::to_string(max_depth));
}

std::vector<std::vector<int>> substitution_matrix(const System& sys) {
    std::vector<std::vector<int>> m(sys.size(), std::vector<int>(sys.size(), 0));
    for (int l = 0; l < sys.size(); ++l)
        for (int j = 0; j < kSectorSize; ++j) ++m[sys.child[l][j]][l];
    return m;
}

bool is_primitive(const System& sys) {
    const int n = sys.size();
    auto m = substitution_matrix(sys);
    std::vector<std::vector<char>> p(n, std::vector<char>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p[i][j] = m[i][j] > 0;
    auto cur = p;
    for (int step = 1; step <= n * n - 2 * n + 2; ++step) {
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            for (int j = 0; j < n; ++j)
                if (!cur[i][j]) { all = false; break; }
        if (all) return true;
        std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (cur[i][k])
                    for (int j = 0; j < n; ++j)
                        if (p[k][j]) next[i][j] = 1;
        if (next == cur) return false;
        cur.swap(next);
    }
    return false;
}

}  // namespace hexa
