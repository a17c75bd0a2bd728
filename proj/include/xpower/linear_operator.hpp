#pragma once

#include <functional>
#include <string>

#include "xpower/matrix.hpp"
#include "xpower/vec.hpp"

namespace xpower {

// A square linear map exposed only through application to a vector. apply
// must be deterministic and safe to call concurrently from several threads
// (implementations keep no mutable state).
struct LinearOperator {
    int n = 0;
    std::string label;
    std::function<void(const Vector& x, Vector& y)> apply_into;

    // Convenience wrapper; validates the input length.
    Vector apply(const Vector& x) const;
};

// Operator that multiplies by the stored matrix.
LinearOperator make_operator(const MatrixHandle& m);

// Operator whose apply(x) returns y solving (K - shift*M) y = M x. The
// shifted matrix is factored once at construction; a singular shift raises
// SingularMatrixError there. K and M must be square with equal dimension.
LinearOperator shift_invert_operator(const MatrixHandle& k_matrix,
                                     const MatrixHandle& m_matrix,
                                     double shift);

} // namespace xpower
