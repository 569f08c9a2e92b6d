#include "hexa/snf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hexa {

namespace {

struct Overflow {};

struct Checked {
    std::int64_t v = 0;
    Checked() = default;
    Checked(std::int64_t x) : v(x) {}
    friend Checked operator+(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b) { return a.v / b.v; }
    friend Checked operator%(Checked a, Checked b) { return a.v % b.v; }
    Checked operator-() const {
        if (v == INT64_MIN) throw Overflow{};
        return -v;
    }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
    friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

mpz_class widen(Checked x) { return mpz_class(static_cast<long>(x.v)); }
mpz_class widen(const mpz_class& x) { return x; }

template <class T>
T abs_of(const T& x) {
    return x < T(0) ? -x : x;
}

template <class T>
struct Engine {
    std::vector<std::vector<T>> a, u, u_inv, v;
    int m = 0, n = 0;
    bool track_u, track_v;

    Engine(const IntMatrix& in, bool tu, bool tv) : track_u(tu), track_v(tv) {
        m = static_cast<int>(in.size());
        n = m ? static_cast<int>(in[0].size()) : 0;
        a.assign(m, std::vector<T>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = T(static_cast<long>(in[i][j]));
        if (track_u) {
            u.assign(m, std::vector<T>(m, T(0)));
            u_inv = u;
            for (int i = 0; i < m; ++i) u[i][i] = u_inv[i][i] = T(1);
        }
        if (track_v) {
            v.assign(n, std::vector<T>(n, T(0)));
            for (int i = 0; i < n; ++i) v[i][i] = T(1);
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (track_u) {
            std::swap(u[i], u[j]);
            for (int r = 0; r < m; ++r) std::swap(u_inv[r][i], u_inv[r][j]);
        }
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        if (track_v)
            for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    }
    // row i -= q row t
    void row_op(int i, int t, const T& q) {
        for (int c = 0; c < n; ++c)
            if (!(a[t][c] == T(0))) a[i][c] = a[i][c] - q * a[t][c];
        if (track_u) {
            for (int c = 0; c < m; ++c)
                if (!(u[t][c] == T(0))) u[i][c] = u[i][c] - q * u[t][c];
            for (int r = 0; r < m; ++r)
                if (!(u_inv[r][i] == T(0))) u_inv[r][t] = u_inv[r][t] + q * u_inv[r][i];
        }
    }
    // col j -= q col t
    void col_op(int j, int t, const T& q) {
        for (int r = 0; r < m; ++r)
            if (!(a[r][t] == T(0))) a[r][j] = a[r][j] - q * a[r][t];
        if (track_v)
            for (int r = 0; r < n; ++r)
                if (!(v[r][t] == T(0))) v[r][j] = v[r][j] - q * v[r][t];
    }
    void negate_row(int i) {
        for (auto& x : a[i]) x = -x;
        if (track_u) {
            for (auto& x : u[i]) x = -x;
            for (int r = 0; r < m; ++r) u_inv[r][i] = -u_inv[r][i];
        }
    }

    int run() {
        int t = 0;
        for (; t < std::min(m, n); ++t) {
            // smallest nonzero entry of the remaining block, preferring units
            int pi = -1, pj = -1;
            T best(0);
            for (int i = t; i < m && !(pi >= 0 && best == T(1)); ++i)
                for (int j = t; j < n; ++j) {
                    if (a[i][j] == T(0)) continue;
                    T x = abs_of(a[i][j]);
                    if (pi < 0 || x < best) {
                        best = x;
                        pi = i;
                        pj = j;
                        if (best == T(1)) break;
                    }
                }
            if (pi < 0) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                bool clean = true;
                for (int i = t + 1; i < m; ++i) {
                    if (a[i][t] == T(0)) continue;
                    row_op(i, t, a[i][t] / a[t][t]);
                    if (!(a[i][t] == T(0))) {
                        clean = false;
                        if (abs_of(a[i][t]) < abs_of(a[t][t])) swap_rows(t, i);
                    }
                }
                for (int j = t + 1; j < n; ++j) {
                    if (a[t][j] == T(0)) continue;
                    col_op(j, t, a[t][j] / a[t][t]);
                    if (!(a[t][j] == T(0))) {
                        clean = false;
                        if (abs_of(a[t][j]) < abs_of(a[t][t])) swap_cols(t, j);
                    }
                }
                if (clean) break;
            }
            if (a[t][t] < T(0)) negate_row(t);
        }
        return t;
    }
};

template <class T>
Snf finish(Engine<T>& e, int rank) {
    Snf s;
    s.rows = e.m;
    s.cols = e.n;
    s.rank = rank;
    for (int i = 0; i < rank; ++i) s.diag.push_back(widen(e.a[i][i]));
    auto conv = [](const std::vector<std::vector<T>>& x) {
        ZMatrix out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            out[i].reserve(x[i].size());
            for (const auto& y : x[i]) out[i].push_back(widen(y));
        }
        return out;
    };
    s.u = conv(e.u);
    s.u_inv = conv(e.u_inv);
    s.v = conv(e.v);
    return s;
}

}  // namespace

Snf smith(const IntMatrix& a, bool with_u, bool with_v) {
    try {
        Engine<Checked> e(a, with_u, with_v);
        int r = e.run();
        return finish(e, r);
    } catch (const Overflow&) {
        Engine<mpz_class> e(a, with_u, with_v);
        int r = e.run();
        return finish(e, r);
    }
}

std::vector<mpz_class> invariant_factors(const std::vector<mpz_class>& orders) {
    // split into prime powers, then recombine largest with largest
    std::map<mpz_class, std::vector<mpz_class>> by_prime;
    for (mpz_class d : orders) {
        d = abs(d);
        if (d <= 1) continue;
        for (mpz_class p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            mpz_class q = 1;
            while (d % p == 0) {
                d /= p;
                q *= p;
            }
            by_prime[p].push_back(q);
        }
        if (d > 1) by_prime[d].push_back(d);
    }
    std::size_t len = 0;
    for (auto& [p, qs] : by_prime) {
        std::sort(qs.begin(), qs.end());
        len = std::max(len, qs.size());
    }
    std::vector<mpz_class> out(len, 1);
    for (auto& [p, qs] : by_prime)
        for (std::size_t i = 0; i < qs.size(); ++i) out[len - qs.size() + i] *= qs[i];
    return out;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        mpq_class inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j)
            if (m[r][j] != 0) m[r][j] *= inv;
        std::vector<int> nz;
        for (int j = c; j < cols; ++j)
            if (m[r][j] != 0) nz.push_back(j);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (int j : nz) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<mpq_class> charpoly(const QMatrix& a0) {
    // Hessenberg reduction followed by the standard recurrence
    QMatrix h = a0;
    int n = static_cast<int>(h.size());
    for (int k = 1; k + 1 < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (h[i][k - 1] != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != k) {
            std::swap(h[p], h[k]);
            for (int i = 0; i < n; ++i) std::swap(h[i][p], h[i][k]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (h[i][k - 1] == 0) continue;
            mpq_class f = h[i][k - 1] / h[k][k - 1];
            for (int j = 0; j < n; ++j) h[i][j] -= f * h[k][j];
            for (int j = 0; j < n; ++j) h[j][k] += f * h[j][i];
        }
    }
    // p_0 = 1; p_k from the leading k x k block
    std::vector<std::vector<mpq_class>> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k-1} h[i][k-1] prod(h sub) p_i
        std::vector<mpq_class> cur(k + 1, 0);
        for (int j = 0; j < k; ++j) {
            cur[j + 1] += p[k - 1][j];
            cur[j] -= h[k - 1][k - 1] * p[k - 1][j];
        }
        mpq_class prod = 1;
        for (int i = k - 2; i >= 0; --i) {
            prod *= h[i + 1][i];
            if (prod == 0) break;
            mpq_class f = prod * h[i][k - 1];
            for (std::size_t j = 0; j < p[i].size(); ++j) cur[j] -= f * p[i][j];
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace hexa
