#pragma once

#include <string>
#include <variant>
#include <vector>

#include "xpower/vec.hpp"

namespace xpower {

// Row-major dense storage.
struct DenseMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<double> entries; // size n_rows * n_cols

    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n_cols + j]; }
    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n_cols + j]; }
};

// Zero-initialized dense matrix; throws std::invalid_argument on nonpositive sizes.
DenseMatrix make_dense(int n_rows, int n_cols);

// Compressed sparse row storage, 0-based column indices, strictly increasing
// within each row.
struct CsrMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> row_offsets;  // size n_rows + 1, row_offsets[0] == 0
    std::vector<int> col_indices;  // size row_offsets[n_rows]
    std::vector<double> values;    // same size as col_indices
};

// Throws std::invalid_argument if the structural invariants above are violated.
void validate_csr(const CsrMatrix& a);

// y = A x. Row sums accumulate in stored (ascending column) order.
Vector apply_dense(const DenseMatrix& a, const Vector& x);
Vector apply_csr(const CsrMatrix& a, const Vector& x);
void apply_dense_into(const DenseMatrix& a, const Vector& x, Vector& y);
void apply_csr_into(const CsrMatrix& a, const Vector& x, Vector& y);

// Structural conversions.
CsrMatrix csr_from_dense(const DenseMatrix& a); // stores only nonzero entries
DenseMatrix dense_from_csr(const CsrMatrix& a);

// A square matrix in either storage form, as produced by the generators and
// the matrix file reader.
struct MatrixHandle {
    std::variant<DenseMatrix, CsrMatrix> storage;
    int n = 0;
    std::string label;
};

// Wrap storage in a handle; throws std::invalid_argument unless square.
MatrixHandle make_handle(DenseMatrix a, std::string label);
MatrixHandle make_handle(CsrMatrix a, std::string label);

Vector apply_handle(const MatrixHandle& m, const Vector& x);
DenseMatrix to_dense(const MatrixHandle& m);

} // namespace xpower
