#pragma once

#include <utility>

#include "xpower/matrix.hpp"
#include "xpower/vec.hpp"

namespace xpower {

// Full spectrum of a small symmetric matrix, sorted by descending eigenvalue
// magnitude. Column i of eigenvectors pairs with eigenvalues[i]; columns are
// orthonormal.
struct SpectrumResult {
    Vector eigenvalues;
    DenseMatrix eigenvectors;
};

// Cyclic-by-row Jacobi rotations until the off-diagonal Frobenius mass drops
// below sweep_tol times the Frobenius norm of the input. Input must be
// symmetric to 1e-12 relative and of order at most 2000, else
// std::invalid_argument.
SpectrumResult jacobi_symmetric_eigen(const DenseMatrix& a,
                                      double sweep_tol = 1e-14);

// For an upper-triangular matrix: the largest-magnitude diagonal entry
// (returned with its sign) and the unit eigenvector obtained by
// back-substitution of (A - lambda I) v = 0. A repeated maximal diagonal
// magnitude raises DegenerateSpectrumError; a nonzero below-diagonal entry
// raises std::invalid_argument.
std::pair<double, Vector> triangular_dominant_pair(const MatrixHandle& a);

// |lambda_2| / |lambda_1| from a spectrum sorted by descending magnitude.
// Fewer than two eigenvalues raises std::invalid_argument; lambda_1 == 0
// raises DegenerateSpectrumError.
double spectral_ratio(const SpectrumResult& spec);

} // namespace xpower
