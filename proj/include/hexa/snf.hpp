#pragma once
// Exact integer linear algebra: Smith normal form with transforms, rational
// row reduction and characteristic polynomials.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace hexa {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

struct Snf {
    int rows = 0, cols = 0;
    int rank = 0;
    std::vector<mpz_class> diag;  // the rank nonzero diagonal entries, positive
    ZMatrix u, u_inv;             // u * a * v = diag, rows x rows
    ZMatrix v;                    // cols x cols
};

// Works in checked int64 and restarts with GMP integers on overflow.
Snf smith(const IntMatrix& a, bool with_u = true, bool with_v = true);

// canonical invariant factors d1 | d2 | ... of the finite group sum Z/d_i (d_i > 1 kept)
std::vector<mpz_class> invariant_factors(const std::vector<mpz_class>& orders);

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMatrix& m);

// coefficients c_0..c_n of det(x I - a), c_n = 1
std::vector<mpq_class> charpoly(const QMatrix& a);

IntMatrix transpose(const IntMatrix& a);

}  // namespace hexa
