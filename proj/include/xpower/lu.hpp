#pragma once

#include "xpower/matrix.hpp"
#include "xpower/vec.hpp"

namespace xpower {

// Partial-pivoted LU factorization of a square dense matrix, stored combined:
// strict lower triangle holds the unit-lower factor's multipliers, upper
// triangle (with diagonal) holds U. perm[k] is the original row index that
// was pivoted into position k.
struct LuFactors {
    int n = 0;
    std::vector<double> lu; // row-major, n*n
    std::vector<int> perm;  // size n
};

// Throws std::invalid_argument on non-square input and SingularMatrixError
// when a pivot's magnitude falls below 1e-14 times the largest magnitude the
// pivot column had in the original matrix.
LuFactors lu_factor(const DenseMatrix& a);

// Solves A x = b for the factored A. Throws std::invalid_argument on length
// mismatch.
Vector lu_solve(const LuFactors& f, const Vector& b);

} // namespace xpower
