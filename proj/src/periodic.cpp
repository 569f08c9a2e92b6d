#include "hexa/periodic.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace hexa {

namespace {

struct Split {
    Point z;
    std::vector<int> digits;  // kChild indices, lowest first
};

// x = 2^m z + sum 2^i kChild[digits[i]]
Split split(Point x, int m) {
    Split out;
    out.digits.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int j = sector_index_of_residue(x);
        out.digits.push_back(j);
        x = Point{(x.a - kChild[j].a) / 2, (x.b - kChild[j].b) / 2};
    }
    out.z = x;
    return out;
}

int descend(const System& sys, int label, const std::vector<int>& digits) {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) label = sys.child[label][*it];
    return label;
}

std::int64_t period_modulus(int m) {
    if (m < 1 || m > 20) throw std::invalid_argument("periodic points: m must lie in 1..20");
    return (std::int64_t{1} << m) - 1;
}

Point reduce(Point p, std::int64_t n) {
    return {((p.a % n) + n) % n, ((p.b % n) + n) % n};
}

const Atlas& cached_atlas(const System& sys, int radius) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, Atlas> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(sys.name, radius);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, legal_patches(sys, radius, 4, 10)).first;
    return it->second;
}

// The g-dynamics for one shift class: cycles and the order in which labels
// of a ball can be filled in.
struct ShiftClass {
    int m = 0;
    Point s;
    Point centre;
    std::vector<std::vector<Point>> cycles;  // c0 -> g(c0) -> ...
    std::unordered_map<Point, Split, PointHash> step;

    Split& at(Point x) {
        auto it = step.find(x);
        if (it == step.end()) it = step.emplace(x, split(x - s, m)).first;
        return it->second;
    }
    Point g(Point x) { return at(x).z; }

    ShiftClass(int m_, Point s_, int radius, bool find_cycles = true) : m(m_), s(s_) {
        // iterate g from 0 into a cycle and centre the ball there
        Point x{0, 0};
        for (int i = 0; i < 64; ++i) x = g(x);
        centre = x;
        if (!find_cycles) return;
        std::set<Point> on_cycle;
        for (Point y : hex_ball(radius + 2, centre)) {
            std::vector<Point> path;
            std::set<Point> seen;
            while (!seen.count(y) && !on_cycle.count(y)) {
                seen.insert(y);
                path.push_back(y);
                y = g(y);
            }
            if (on_cycle.count(y)) continue;
            std::vector<Point> cyc;
            Point c = y;
            do {
                cyc.push_back(c);
                on_cycle.insert(c);
                c = g(c);
            } while (c != y);
            cycles.push_back(std::move(cyc));
        }
        for (const auto& cyc : cycles)
            for (Point c : cyc)
                if (hex_norm(c - centre) > radius)
                    throw std::runtime_error("periodic points: cycle of g outside the radius-" + std::to_string(radius) +
                                             " ball");
    }

    // labels on each cycle that are fixed by the composite descent, as the
    // label of cycle[0]
    std::vector<int> cycle_options(const System& sys, const std::vector<Point>& cyc) {
        std::vector<int> out;
        for (int l = 0; l < sys.size(); ++l) {
            int x = l;
            for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) x = descend(sys, x, at(*it).digits);
            if (x == l) out.push_back(l);
        }
        return out;
    }

    std::map<Point, int> cycle_labels(const System& sys, const std::vector<Point>& cyc, int l0) {
        std::map<Point, int> out;
        int x = l0;
        out[cyc[0]] = l0;
        for (std::size_t i = cyc.size() - 1; i >= 1; --i) {
            x = descend(sys, x, at(cyc[i]).digits);
            out[cyc[i]] = x;
        }
        return out;
    }
};

int label_from(const System& sys, ShiftClass& sc, const std::map<Point, int>& cycle,
               std::unordered_map<Point, int, PointHash>& memo, Point y) {
    std::vector<Point> chain;
    int l = -1;
    while (true) {
        if (auto it = memo.find(y); it != memo.end()) { l = it->second; break; }
        if (auto it = cycle.find(y); it != cycle.end()) { l = it->second; break; }
        chain.push_back(y);
        y = sc.g(y);
        if (chain.size() > 4096) throw std::logic_error("periodic points: g does not reach a cycle");
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        l = descend(sys, l, sc.at(*it).digits);
        memo[*it] = l;
    }
    return l;
}

std::vector<PeriodicPoint> solve(const System& sys, int m, int radius) {
    std::int64_t n = period_modulus(m);
    const Atlas& atlas = cached_atlas(sys, radius);
    auto offsets = hex_ball(radius);
    std::vector<PeriodicPoint> out;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            ShiftClass sc(m, {a, b}, radius);
            std::vector<std::vector<int>> options;
            for (const auto& cyc : sc.cycles) options.push_back(sc.cycle_options(sys, cyc));
            std::vector<std::size_t> pick(options.size(), 0);
            bool empty = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
            while (!empty) {
                std::map<Point, int> cycle;
                for (std::size_t i = 0; i < options.size(); ++i) {
                    auto part = sc.cycle_labels(sys, sc.cycles[i], options[i][pick[i]]);
                    cycle.insert(part.begin(), part.end());
                }
                std::unordered_map<Point, int, PointHash> memo;
                std::string key(offsets.size(), '\0');
                for (std::size_t i = 0; i < offsets.size(); ++i)
                    key[i] = static_cast<char>(label_from(sys, sc, cycle, memo, sc.centre + offsets[i]));
                if (atlas.contains(key)) out.push_back({m, sc.s, sc.centre, std::move(cycle)});
                std::size_t i = 0;
                while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
                if (i == pick.size()) break;
            }
        }
    return out;
}

}  // namespace

PeriodicCount enumerate_periodic(const System& sys, int m, const PeriodicOptions& opt) {
    period_modulus(m);
    auto prev = solve(sys, m, opt.min_radius);
    for (int r = opt.min_radius + 1; r <= opt.max_radius; ++r) {
        auto cur = solve(sys, m, r);
        if (cur.size() == prev.size()) {
            std::int64_t count = static_cast<std::int64_t>(prev.size());
            return {m, count, r - 1, std::move(prev)};
        }
        prev = std::move(cur);
    }
    throw std::runtime_error("count_periodic: " + sys.name + " m=" + std::to_string(m) +
                             " not stable up to ball radius " + std::to_string(opt.max_radius));
}

std::int64_t count_periodic(const System& sys, int m, const PeriodicOptions& opt) {
    return enumerate_periodic(sys, m, opt).count;
}

int periodic_label(const System& sys, const PeriodicPoint& p, Point y) {
    ShiftClass sc(p.m, p.shift, 0, false);
    std::unordered_map<Point, int, PointHash> memo;
    return label_from(sys, sc, p.cycle, memo, y);
}

std::int64_t closed_form_count(const std::string& system, int m) {
    std::int64_t q = period_modulus(m);
    if (system == "halfhex") return q * q + 2;
    if (system == "arrowed") return q * q + 3 * q + 2;
    if (system == "penrose" || system == "taylor") return q * q + 6 * q + 5 + 2 * (1 + (m % 2 == 0 ? 1 : -1));
    throw std::invalid_argument("no closed form for system " + system);
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly mul(const Poly& x, const Poly& y) {
    Poly r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

// prod (1 - root z)^power
Poly factors(const std::vector<std::pair<std::int64_t, int>>& roots) {
    Poly p{1};
    for (auto [root, power] : roots)
        for (int i = 0; i < power; ++i) p = mul(p, {1, -root});
    return p;
}

// power series of p / q to order M, q[0] = 1
Poly divide(const Poly& p, const Poly& q, int M) {
    Poly r(static_cast<std::size_t>(M + 1), 0);
    for (int i = 0; i <= M; ++i) {
        std::int64_t v = i < static_cast<int>(p.size()) ? p[i] : 0;
        for (int j = 1; j <= i && j < static_cast<int>(q.size()); ++j) v -= q[j] * r[i - j];
        r[i] = v;
    }
    return r;
}

Poly derivative_times_z(const Poly& p) {
    Poly r(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<std::int64_t>(i) * p[i];
    return r;
}

}  // namespace

RationalZeta closed_form_zeta(const std::string& system) {
    // numerator det(1 - z A1), denominator det(1 - z A2) det(1 - z A0)
    if (system == "halfhex") return {factors({{2, 2}}), factors({{4, 1}, {1, 3}})};
    if (system == "arrowed") return {factors({{2, 2}, {1, 1}}), factors({{4, 1}, {2, 3}, {1, 1}})};
    if (system == "penrose" || system == "taylor")
        return {factors({{2, 2}, {1, 2}}), factors({{4, 1}, {2, 6}, {1, 4}, {-1, 2}})};
    throw std::invalid_argument("no closed form for system " + system);
}

std::vector<std::int64_t> series(const RationalZeta& z, int M) { return divide(z.numerator, z.denominator, M); }

std::vector<std::int64_t> counts_from_zeta(const RationalZeta& z, int M) {
    auto ln = divide(derivative_times_z(z.numerator), z.numerator, M);
    auto ld = divide(derivative_times_z(z.denominator), z.denominator, M);
    std::vector<std::int64_t> a;
    for (int m = 1; m <= M; ++m) a.push_back(ln[m] - ld[m]);
    return a;
}

std::vector<std::int64_t> exp_log_series(const std::vector<std::int64_t>& a) {
    // n c_n = sum_{k=1}^n a_k c_{n-k}
    std::vector<std::int64_t> c{1};
    for (std::size_t n = 1; n <= a.size(); ++n) {
        std::int64_t s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += a[k - 1] * c[n - k];
        if (s % static_cast<std::int64_t>(n) != 0) throw std::runtime_error("exp_log_series: non-integral coefficient");
        c.push_back(s / static_cast<std::int64_t>(n));
    }
    return c;
}

nlohmann::json ZetaReport::to_json() const {
    return {{"system", system},
            {"a", a},
            {"zeta", {{"numerator", zeta.numerator}, {"denominator", zeta.denominator}}},
            {"factors", factors},
            {"matches", matches},
            {"first_mismatch", first_mismatch}};
}

ZetaReport zeta_series(const System& sys, int M, const PeriodicOptions& opt) {
    if (M < 1) throw std::invalid_argument("zeta_series: M must be >= 1");
    ZetaReport rep;
    rep.system = sys.name;
    rep.zeta = closed_form_zeta(sys.name);
    rep.factors.push_back("solenoid (1-2z)^2/((1-z)(1-4z))");
    if (sys.name == "halfhex") {
        rep.factors.push_back("fixed points 1/(1-z)^2");
    } else if (sys.name == "arrowed") {
        rep.factors.push_back("shifted solenoid (1-z)^3/(1-2z)^3");
        rep.factors.push_back("fixed points 1/(1-z)^2");
    } else {
        rep.factors.push_back("shifted solenoid (1-z)^6/(1-2z)^6");
        rep.factors.push_back("fixed points 1/(1-z)^5");
        rep.factors.push_back("2-cycles 1/(1-z^2)^2");
    }
    for (int m = 1; m <= M; ++m) rep.a.push_back(count_periodic(sys, m, opt));
    auto expect = counts_from_zeta(rep.zeta, M);
    auto lhs = exp_log_series(rep.a);
    auto rhs = series(rep.zeta, M);
    rep.matches = true;
    for (int m = 1; m <= M; ++m)
        if (rep.a[m - 1] != expect[m - 1] || lhs[m] != rhs[m]) {
            rep.matches = false;
            rep.first_mismatch = m;
            break;
        }
    return rep;
}

namespace {

// labels on the ball of radius rho (in tile spacings) around the inflation
// centre, keyed by N times the absolute position
using Fingerprint = std::map<Point, int>;

Fingerprint fingerprint(const System& sys, const PeriodicPoint& p, std::int64_t n, int rho) {
    ShiftClass sc(p.m, p.shift, 0, false);
    std::unordered_map<Point, int, PointHash> memo;
    Fingerprint f;
    for (Point y : hex_ball(rho + 2, p.centre)) {
        Point q = n * y + p.shift;
        if (hex_norm(q) <= n * rho) f[q] = label_from(sys, sc, p.cycle, memo, y);
    }
    return f;
}

// fingerprint of sigma^d applied to p
Fingerprint inflated(const System& sys, const PeriodicPoint& p, std::int64_t n, int rho, int d) {
    ShiftClass sc(p.m, p.shift, 0, false);
    std::unordered_map<Point, int, PointHash> memo;
    Fingerprint f;
    Point s = (std::int64_t{1} << d) * p.shift;
    for (Point q : hex_ball(n * rho)) {
        Point r = q - s;
        if (((r.a % n) + n) % n != 0 || ((r.b % n) + n) % n != 0) continue;
        Split sp = split(Point{r.a / n, r.b / n}, d);
        f[q] = descend(sys, label_from(sys, sc, p.cycle, memo, sp.z), sp.digits);
    }
    return f;
}

Fingerprint transformed(const System& sys, const Fingerprint& f, D6 g) {
    Fingerprint out;
    for (const auto& [q, l] : f) out[act(g, q)] = sys.act(g, l);
    return out;
}

}  // namespace

std::vector<OrbitEntry> orbit_structure(const System& sys, int m, const PeriodicOptions& opt) {
    std::int64_t n = period_modulus(m);
    auto pc = enumerate_periodic(sys, m, opt);
    constexpr int rho = 4;
    std::vector<Fingerprint> prints;
    for (const auto& p : pc.points) prints.push_back(fingerprint(sys, p, n, rho));
    std::vector<OrbitEntry> out;
    for (std::size_t i = 0; i < pc.points.size(); ++i) {
        const auto& p = pc.points[i];
        OrbitEntry e;
        e.id = static_cast<int>(i);
        e.least_period = m;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && inflated(sys, p, n, rho, d) == prints[i]) {
                e.least_period = d;
                break;
            }
        std::set<Fingerprint> orbit;
        for (D6 g : D6::all()) orbit.insert(transformed(sys, prints[i], g));
        e.d6_orbit = static_cast<int>(orbit.size());
        Point s = reduce(p.shift, n);
        e.position = "interior";
        if (s == Point{0, 0}) e.position = "centre";
        else if (n % 3 == 0)
            for (int k = 0; k < 6; ++k)
                if (reduce(s + (n / 3) * kDiagonal[k], n) == Point{0, 0}) {
                    e.position = "corner";
                    e.corner_type = k % 2;
                }
        out.push_back(e);
    }
    return out;
}

}  // namespace hexa
