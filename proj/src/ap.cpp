#include "hexa/ap.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hexa/engine.hpp"
#include "hexa/periodic.hpp"

namespace hexa {

namespace {

constexpr Point kU{1, 0}, kV{0, 1}, kW{-1, 1};

// corners of the up and down triangles with first corner at the origin
constexpr std::array<std::array<Point, 3>, 2> kFaceCorners = {{{Point{0, 0}, kU, kV}, {Point{0, 0}, kV, kW}}};

struct Indexer {
    std::map<std::array<int, 3>, int> edge;
    std::map<std::array<int, 4>, int> face;
};

int edge_of(const Indexer& ix, int tail, int head, int dir) {
    auto it = ix.edge.find({tail, head, dir});
    if (it == ix.edge.end()) throw std::logic_error("approximant: inflated edge is not a cell");
    return it->second;
}

int face_of(const Indexer& ix, int kind, int a, int b, int c) {
    auto it = ix.face.find({kind, a, b, c});
    if (it == ix.face.end()) throw std::logic_error("approximant: inflated face is not a cell");
    return it->second;
}

// labels of the pseudo inflation of a few labelled points
std::map<Point, int> inflate_points(const System& sys, const std::vector<std::pair<Point, int>>& cells) {
    std::map<Point, int> out;
    for (auto [p, l] : cells)
        for (int j = 0; j < 7; ++j) {
            auto [it, fresh] = out.emplace(2 * p + kChild[j], sys.child[l][j]);
            if (!fresh && it->second != sys.child[l][j]) throw std::logic_error("approximant: inconsistent pseudo rule");
        }
    return out;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    IntMatrix c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

ApproximantComplex build_complex(const System& sys) {
    auto bf = verify_border_forcing(sys, 4);
    if (!bf.holds) throw std::runtime_error("build_complex: " + sys.name + " does not force its border; collared cells are not supported");
    ApproximantComplex c;
    c.system = sys.name;
    Atlas atlas = legal_patches(sys, 1);
    std::set<int> verts;
    std::set<std::array<int, 3>> edges;
    std::set<std::array<int, 4>> faces;
    for (const Patch& p : atlas.patches(sys.name)) {
        int o = p.at({0, 0});
        verts.insert(o);
        for (int d = 0; d < 3; ++d) edges.insert({o, p.at(kEdgeDir[d]), d});
        for (int k = 0; k < 2; ++k)
            faces.insert({k, o, p.at(kFaceCorners[k][1]), p.at(kFaceCorners[k][2])});
    }
    c.vertices.assign(verts.begin(), verts.end());
    c.edges.assign(edges.begin(), edges.end());
    c.faces.assign(faces.begin(), faces.end());
    std::vector<int> vid(sys.size(), -1);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) vid[c.vertices[i]] = static_cast<int>(i);
    Indexer ix;
    for (std::size_t i = 0; i < c.edges.size(); ++i) ix.edge[c.edges[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < c.faces.size(); ++i) ix.face[c.faces[i]] = static_cast<int>(i);

    std::size_t n0 = c.vertices.size(), n1 = c.edges.size(), n2 = c.faces.size();
    c.boundary1.assign(n0, std::vector<std::int64_t>(n1, 0));
    for (std::size_t j = 0; j < n1; ++j) {
        auto [t, h, d] = c.edges[j];
        c.boundary1[vid[h]][j] += 1;
        c.boundary1[vid[t]][j] -= 1;
    }
    c.boundary2.assign(n1, std::vector<std::int64_t>(n2, 0));
    for (std::size_t j = 0; j < n2; ++j) {
        auto [k, a, b, cc] = c.faces[j];
        if (k == 0) {
            // 0 -> u -> v
            c.boundary2[edge_of(ix, a, b, 0)][j] += 1;
            c.boundary2[edge_of(ix, b, cc, 2)][j] += 1;
            c.boundary2[edge_of(ix, a, cc, 1)][j] -= 1;
        } else {
            // 0 -> v -> w
            c.boundary2[edge_of(ix, a, b, 1)][j] += 1;
            c.boundary2[edge_of(ix, cc, b, 0)][j] -= 1;
            c.boundary2[edge_of(ix, a, cc, 2)][j] -= 1;
        }
    }

    auto& f0 = c.inflation[0];
    f0.assign(n0, std::vector<std::int64_t>(n0, 0));
    for (std::size_t j = 0; j < n0; ++j) {
        int img = vid[sys.child[c.vertices[j]][0]];
        if (img < 0) throw std::logic_error("approximant: inflated vertex is not a cell");
        f0[img][j] += 1;
    }
    auto& f1 = c.inflation[1];
    f1.assign(n1, std::vector<std::int64_t>(n1, 0));
    for (std::size_t j = 0; j < n1; ++j) {
        auto [t, h, d] = c.edges[j];
        Point e = kEdgeDir[d];
        auto img = inflate_points(sys, {{{0, 0}, t}, {e, h}});
        f1[edge_of(ix, img.at({0, 0}), img.at(e), d)][j] += 1;
        f1[edge_of(ix, img.at(e), img.at(2 * e), d)][j] += 1;
    }
    auto& f2 = c.inflation[2];
    f2.assign(n2, std::vector<std::int64_t>(n2, 0));
    for (std::size_t j = 0; j < n2; ++j) {
        auto [k, a, b, cc] = c.faces[j];
        const auto& q = kFaceCorners[k];
        auto img = inflate_points(sys, {{q[0], a}, {q[1], b}, {q[2], cc}});
        auto add = [&](int kind, Point at) {
            const auto& r = kFaceCorners[kind];
            f2[face_of(ix, kind, img.at(at + r[0]), img.at(at + r[1]), img.at(at + r[2]))][j] += 1;
        };
        // the doubled triangle splits into three of its own kind and one turned over
        if (k == 0) {
            add(0, {0, 0});
            add(0, kU);
            add(0, kV);
            add(1, kU);
        } else {
            add(1, {0, 0});
            add(1, kV);
            add(1, kW);
            add(0, kW);
        }
    }
    return c;
}

namespace {

std::vector<mpz_class> group_order_exponents(const std::set<std::vector<mpz_class>>& group,
                                             const std::vector<mpz_class>& orders) {
    // invariant factors of a finite abelian group from the counts of p^k-torsion
    mpz_class size = static_cast<unsigned long>(group.size());
    std::vector<mpz_class> primes;
    mpz_class s = size;
    for (mpz_class p = 2; p * p <= s; ++p)
        if (s % p == 0) {
            primes.push_back(p);
            while (s % p == 0) s /= p;
        }
    if (s > 1) primes.push_back(s);
    std::vector<mpz_class> prime_powers;
    for (const mpz_class& p : primes) {
        std::vector<std::size_t> killed{1};
        mpz_class pk = p;
        while (true) {
            std::size_t n = 0;
            for (const auto& x : group) {
                bool zero = true;
                for (std::size_t i = 0; i < x.size() && zero; ++i)
                    if ((pk * x[i]) % orders[i] != 0) zero = false;
                n += zero;
            }
            if (n == killed.back()) break;
            killed.push_back(n);
            pk *= p;
        }
        // #{e_i >= k} = log_p(killed[k] / killed[k-1])
        std::vector<int> at_least;
        for (std::size_t k = 1; k < killed.size(); ++k) {
            std::size_t ratio = killed[k] / killed[k - 1];
            int c = 0;
            while (ratio > 1) {
                ratio /= mpz_class(p).get_ui();
                ++c;
            }
            at_least.push_back(c);
        }
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            mpz_class q;
            mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k + 1);
            for (int i = 0; i < exact; ++i) prime_powers.push_back(q);
        }
    }
    return invariant_factors(prime_powers);
}

std::vector<mpz_class> apply_torsion(const TorsionModule& t, const std::vector<mpz_class>& x) {
    std::vector<mpz_class> y(x.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0) continue;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += t.action[i][j] * x[j];
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] %= t.orders[i];
        if (y[i] < 0) y[i] += t.orders[i];
    }
    return y;
}

std::set<std::vector<mpz_class>> generated(const TorsionModule& t, const std::vector<std::vector<mpz_class>>& gens) {
    constexpr std::size_t kCap = 1u << 22;
    std::vector<mpz_class> zero(t.orders.size(), 0);
    std::set<std::vector<mpz_class>> group{zero};
    std::vector<std::vector<mpz_class>> todo{zero};
    while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            auto y = x;
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + g[i]) % t.orders[i];
            if (group.insert(y).second) {
                if (group.size() > kCap) throw std::runtime_error("stable torsion: group too large to enumerate");
                todo.push_back(std::move(y));
            }
        }
    }
    return group;
}

}  // namespace

LimitInvariants direct_limit_invariants(const QMatrix& action, const TorsionModule& torsion) {
    LimitInvariants out;
    out.charpoly = action.empty() ? std::vector<mpq_class>{1} : charpoly(action);
    std::size_t z = 0;
    while (z + 1 < out.charpoly.size() && out.charpoly[z] == 0) ++z;
    out.eventual_charpoly.assign(out.charpoly.begin() + static_cast<long>(z), out.charpoly.end());
    out.eventual_rank = static_cast<int>(out.eventual_charpoly.size()) - 1;
    if (!torsion.orders.empty()) {
        std::vector<std::vector<mpz_class>> gens;
        for (std::size_t i = 0; i < torsion.orders.size(); ++i) {
            std::vector<mpz_class> e(torsion.orders.size(), 0);
            e[i] = 1;
            gens.push_back(apply_torsion(torsion, e));
        }
        auto cur = generated(torsion, gens);
        while (true) {
            for (auto& g : gens) g = apply_torsion(torsion, g);
            auto next = generated(torsion, gens);
            if (next.size() == cur.size()) break;
            cur = std::move(next);
        }
        out.stable_torsion = group_order_exponents(cur, torsion.orders);
    }
    return out;
}

namespace {

IntMatrix to_int(const ZMatrix& z) {
    IntMatrix out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (const auto& x : z[i]) {
            if (!x.fits_slong_p()) throw std::runtime_error("cohomology: transform entries exceed 64 bits");
            out[i].push_back(x.get_si());
        }
    return out;
}

DegreeReport degree_report(const IntMatrix* prev, const IntMatrix* next, const IntMatrix& f, std::size_t n) {
    // prev: coboundary into C^k, next: coboundary out of C^k, f: cochain action on C^k
    DegreeReport rep;
    ZMatrix u, u_inv;
    int r = 0;
    std::vector<mpz_class> diag;
    if (prev && !prev->empty() && !(*prev)[0].empty()) {
        Snf s = smith(*prev, true, false);
        u = std::move(s.u);
        u_inv = std::move(s.u_inv);
        r = s.rank;
        diag = std::move(s.diag);
    } else {
        u.assign(n, std::vector<mpz_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
        u_inv = u;
    }
    std::size_t g = n - static_cast<std::size_t>(r);
    // columns of u_inv beyond r span the free part of C^k / B^k
    ZMatrix ginv(n, std::vector<mpz_class>(g));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < g; ++j) ginv[i][j] = u_inv[i][r + j];
    // f * ginv, then rows r.. of u
    auto times = [&](const ZMatrix& x) {
        std::size_t cols = x.empty() ? 0 : x[0].size();
        ZMatrix y(n, std::vector<mpz_class>(cols, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (f[i][k] == 0) continue;
                for (std::size_t j = 0; j < cols; ++j) y[i][j] += f[i][k] * x[k][j];
            }
        return y;
    };
    ZMatrix fg = times(ginv);
    ZMatrix ag(g, std::vector<mpz_class>(g, 0));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const mpz_class& x = u[r + i][k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < g; ++j) ag[i][j] += x * fg[k][j];
        }
    // kernel of the next coboundary on the free part
    ZMatrix kernel;
    std::size_t h = g;
    if (next && !next->empty() && g > 0) {
        IntMatrix m(next->size(), std::vector<std::int64_t>(g, 0));
        IntMatrix gi = to_int(ginv);
        for (std::size_t i = 0; i < next->size(); ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if ((*next)[i][k] == 0) continue;
                for (std::size_t j = 0; j < g; ++j) m[i][j] += (*next)[i][k] * gi[k][j];
            }
        Snf sm = smith(m, false, true);
        h = g - static_cast<std::size_t>(sm.rank);
        kernel.assign(g, std::vector<mpz_class>(h));
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < h; ++j) kernel[i][j] = sm.v[i][sm.rank + j];
    } else {
        kernel.assign(g, std::vector<mpz_class>(g, 0));
        for (std::size_t i = 0; i < g; ++i) kernel[i][i] = 1;
    }
    rep.free_rank = static_cast<int>(h);
    // solve kernel * c = ag * kernel
    QMatrix aug(g, std::vector<mpq_class>(2 * h, 0));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            aug[i][j] = kernel[i][j];
            mpz_class s = 0;
            for (std::size_t k = 0; k < g; ++k)
                if (ag[i][k] != 0) s += ag[i][k] * kernel[k][j];
            aug[i][h + j] = s;
        }
    auto piv = rref(aug);
    for (std::size_t j = 0; j < piv.size(); ++j)
        if (piv[j] != static_cast<int>(j)) throw std::logic_error("cohomology: cocycle basis is not invariant");
    rep.action.assign(h, std::vector<mpq_class>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) rep.action[i][j] = aug[i][h + j];
    // torsion: coordinates i < r of u with diagonal entry > 1
    TorsionModule tm;
    std::vector<int> tidx;
    for (int i = 0; i < r; ++i)
        if (diag[i] > 1) {
            tidx.push_back(i);
            tm.orders.push_back(diag[i]);
        }
    rep.torsion = invariant_factors(tm.orders);
    tm.action.assign(tidx.size(), std::vector<mpz_class>(tidx.size(), 0));
    for (std::size_t c = 0; c < tidx.size(); ++c) {
        ZMatrix col(n, std::vector<mpz_class>(1));
        for (std::size_t i = 0; i < n; ++i) col[i][0] = u_inv[i][tidx[c]];
        ZMatrix fc = times(col);
        std::vector<mpz_class> y(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (u[i][k] != 0 && fc[k][0] != 0) y[i] += u[i][k] * fc[k][0];
        for (std::size_t i = static_cast<std::size_t>(r); i < n; ++i)
            if (y[i] != 0) throw std::logic_error("cohomology: torsion class maps off the torsion");
        for (std::size_t t = 0; t < tidx.size(); ++t) tm.action[t][c] = y[tidx[t]];
    }
    rep.limit = direct_limit_invariants(rep.action, tm);
    return rep;
}

}  // namespace

CohomologyReport integer_cohomology(const ApproximantComplex& c) {
    CohomologyReport rep;
    rep.system = c.system;
    rep.cells = c.counts();
    IntMatrix d0 = transpose(c.boundary1);  // C^0 -> C^1
    IntMatrix d1 = transpose(c.boundary2);  // C^1 -> C^2
    rep.degree[0] = degree_report(nullptr, &d0, transpose(c.inflation[0]), rep.cells[0]);
    rep.degree[1] = degree_report(&d0, &d1, transpose(c.inflation[1]), rep.cells[1]);
    rep.degree[2] = degree_report(&d1, nullptr, transpose(c.inflation[2]), rep.cells[2]);
    return rep;
}

std::vector<std::int64_t> integral(const std::vector<mpq_class>& p) {
    std::vector<std::int64_t> out;
    for (const auto& x : p) {
        if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw std::runtime_error("polynomial is not integral");
        out.push_back(x.get_num().get_si());
    }
    return out;
}

std::string poly_string(const std::vector<mpq_class>& p0) {
    std::vector<mpz_class> p;
    for (const auto& x : p0) {
        if (x.get_den() != 1) throw std::runtime_error("polynomial is not integral");
        p.push_back(x.get_num());
    }
    std::ostringstream os;
    // synthetic division by (x - r); false if r is not a root
    auto divide = [](std::vector<mpz_class>& q, long r) {
        std::vector<mpz_class> out(q.size() - 1);
        mpz_class carry = 0;
        for (std::size_t i = q.size(); i-- > 1;) {
            carry = q[i] + carry * r;
            out[i - 1] = carry;
        }
        if (q[0] + carry * r != 0) return false;
        q = std::move(out);
        return true;
    };
    bool any = false;
    for (long r : {0L, 4L, 2L, 1L, -1L, -2L, -4L, 3L, -3L}) {
        int e = 0;
        while (p.size() > 1 && divide(p, r)) ++e;
        if (e == 0) continue;
        any = true;
        if (r == 0) os << "x";
        else os << "(x" << (r > 0 ? "-" : "+") << (r > 0 ? r : -r) << ")";
        if (e > 1) os << "^" << e;
    }
    if (p.size() > 1) {
        os << "[";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i].get_str();
        os << "]";
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

nlohmann::json CohomologyReport::to_json() const {
    auto zs = [](const std::vector<mpz_class>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) a.push_back(x.get_str());
        return a;
    };
    nlohmann::json deg = nlohmann::json::array();
    for (int k = 0; k < 3; ++k) {
        const auto& d = degree[k];
        nlohmann::json action = nlohmann::json::array();
        for (const auto& row : d.action) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& x : row) r.push_back(x.get_str());
            action.push_back(r);
        }
        deg.push_back({{"k", k},
                       {"approximant", {{"rank", d.free_rank}, {"torsion", zs(d.torsion)}}},
                       {"action", action},
                       {"charpoly", poly_string(d.limit.charpoly)},
                       {"eventual_rank", d.limit.eventual_rank},
                       {"eventual_charpoly", poly_string(d.limit.eventual_charpoly)},
                       {"stable_torsion", zs(d.limit.stable_torsion)}});
    }
    return {{"system", system}, {"cells", cells}, {"degrees", deg}};
}

CohomologicalZeta zeta_from_cohomology(const CohomologyReport& r, int M) {
    auto det_form = [&](int k) {
        // det(1 - z A) is the reversed eventual characteristic polynomial
        auto p = integral(r.degree[k].limit.eventual_charpoly);
        std::reverse(p.begin(), p.end());
        return p;
    };
    auto mul = [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        std::vector<std::int64_t> out(x.size() + y.size() - 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
        return out;
    };
    CohomologicalZeta z;
    z.numerator = det_form(1);
    z.denominator = mul(det_form(2), det_form(0));
    z.a = counts_from_zeta({z.numerator, z.denominator}, M);
    return z;
}

}  // namespace hexa
