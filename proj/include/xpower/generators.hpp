#pragma once

#include <cstdint>

#include "xpower/matrix.hpp"
#include "xpower/vec.hpp"

namespace xpower {

// 21x21 symmetric tridiagonal: diagonal (10, 9, ..., 1, 0, 1, ..., 9, 10),
// every off-diagonal entry 1. Dense storage. Its two largest eigenvalues are
// nearly equal (~10.746); exactly one eigenvalue is negative (~-1.125).
MatrixHandle wilkinson_w21();

// 50x50 diagonal (1, 0.9, 0.5, 0.5, ..., 0.5): one close subdominant
// eigenvalue over a tight cluster. CSR storage.
MatrixHandle clustered_diag();

// 1001x1001 diagonal: leading entry 1 followed by 1000 equally spaced values
// from 0.75 to 0.999 inclusive (endpoint exact). CSR storage.
MatrixHandle linspace_diag();

// 100x100 upper bidiagonal: diagonal j for row j = 1..100, superdiagonal
// entry (j, j+1) equal to t for j = 1..50 and absent afterwards. Column 100
// is untouched by t, so (100, e_100) is an exact eigenpair for every t.
MatrixHandle nonnormal_t(double t);

// n entries i.i.d. uniform on [-0.5, 0.5), generated by the splitmix64
// recurrence seeded with `seed` (top 53 bits of each 64-bit output mapped to
// [0,1), then shifted). Deterministic: same (n, seed) gives identical bits.
Vector random_init(int n, std::uint64_t seed);

// n entries, all 1.
Vector ones_init(int n);

} // namespace xpower
