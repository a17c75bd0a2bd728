#include "xpower/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace xpower {

DenseMatrix make_dense(int n_rows, int n_cols) {
    if (n_rows <= 0 || n_cols <= 0) {
        throw std::invalid_argument("make_dense: dimensions must be positive");
    }
    DenseMatrix a;
    a.n_rows = n_rows;
    a.n_cols = n_cols;
    a.entries.assign(static_cast<std::size_t>(n_rows) * n_cols, 0.0);
    return a;
}

void validate_csr(const CsrMatrix& a) {
    if (a.n_rows <= 0 || a.n_cols <= 0) {
        throw std::invalid_argument("csr: dimensions must be positive");
    }
    if (a.row_offsets.size() != static_cast<std::size_t>(a.n_rows) + 1) {
        throw std::invalid_argument("csr: row_offsets must have n_rows + 1 entries");
    }
    if (a.row_offsets.front() != 0) {
        throw std::invalid_argument("csr: row_offsets must start at 0");
    }
    if (a.row_offsets.back() != static_cast<int>(a.col_indices.size()) ||
        a.col_indices.size() != a.values.size()) {
        throw std::invalid_argument("csr: offsets do not match stored entry count");
    }
    for (int i = 0; i < a.n_rows; ++i) {
        if (a.row_offsets[i] > a.row_offsets[i + 1]) {
            throw std::invalid_argument("csr: row_offsets must be nondecreasing");
        }
        for (int idx = a.row_offsets[i]; idx < a.row_offsets[i + 1]; ++idx) {
            int col = a.col_indices[idx];
            if (col < 0 || col >= a.n_cols) {
                throw std::invalid_argument("csr: column index out of range");
            }
            if (idx > a.row_offsets[i] && a.col_indices[idx - 1] >= col) {
                throw std::invalid_argument("csr: column indices must strictly increase within a row");
            }
        }
    }
}

void apply_dense_into(const DenseMatrix& a, const Vector& x, Vector& y) {
    if (static_cast<int>(x.size()) != a.n_cols) {
        throw std::invalid_argument("apply_dense: vector length does not match n_cols");
    }
    y.resize(a.n_rows);
    for (int i = 0; i < a.n_rows; ++i) {
        const double* row = a.entries.data() + static_cast<std::size_t>(i) * a.n_cols;
        double s = 0.0;
        for (int j = 0; j < a.n_cols; ++j) {
            s += row[j] * x[j];
        }
        y[i] = s;
    }
}

void apply_csr_into(const CsrMatrix& a, const Vector& x, Vector& y) {
    if (static_cast<int>(x.size()) != a.n_cols) {
        throw std::invalid_argument("apply_csr: vector length does not match n_cols");
    }
    y.resize(a.n_rows);
    for (int i = 0; i < a.n_rows; ++i) {
        double s = 0.0;
        for (int idx = a.row_offsets[i]; idx < a.row_offsets[i + 1]; ++idx) {
            s += a.values[idx] * x[a.col_indices[idx]];
        }
        y[i] = s;
    }
}

Vector apply_dense(const DenseMatrix& a, const Vector& x) {
    Vector y;
    apply_dense_into(a, x, y);
    return y;
}

Vector apply_csr(const CsrMatrix& a, const Vector& x) {
    Vector y;
    apply_csr_into(a, x, y);
    return y;
}

CsrMatrix csr_from_dense(const DenseMatrix& a) {
    CsrMatrix c;
    c.n_rows = a.n_rows;
    c.n_cols = a.n_cols;
    c.row_offsets.reserve(a.n_rows + 1);
    c.row_offsets.push_back(0);
    for (int i = 0; i < a.n_rows; ++i) {
        for (int j = 0; j < a.n_cols; ++j) {
            double v = a.at(i, j);
            if (v != 0.0) {
                c.col_indices.push_back(j);
                c.values.push_back(v);
            }
        }
        c.row_offsets.push_back(static_cast<int>(c.col_indices.size()));
    }
    return c;
}

DenseMatrix dense_from_csr(const CsrMatrix& a) {
    validate_csr(a);
    DenseMatrix d = make_dense(a.n_rows, a.n_cols);
    for (int i = 0; i < a.n_rows; ++i) {
        for (int idx = a.row_offsets[i]; idx < a.row_offsets[i + 1]; ++idx) {
            d.at(i, a.col_indices[idx]) = a.values[idx];
        }
    }
    return d;
}

MatrixHandle make_handle(DenseMatrix a, std::string label) {
    if (a.n_rows != a.n_cols) {
        throw std::invalid_argument("matrix handle requires a square matrix");
    }
    if (a.entries.size() != static_cast<std::size_t>(a.n_rows) * a.n_cols) {
        throw std::invalid_argument("dense matrix entry count does not match its dimensions");
    }
    MatrixHandle h;
    h.n = a.n_rows;
    h.storage = std::move(a);
    h.label = std::move(label);
    return h;
}

MatrixHandle make_handle(CsrMatrix a, std::string label) {
    validate_csr(a);
    if (a.n_rows != a.n_cols) {
        throw std::invalid_argument("matrix handle requires a square matrix");
    }
    MatrixHandle h;
    h.n = a.n_rows;
    h.storage = std::move(a);
    h.label = std::move(label);
    return h;
}

Vector apply_handle(const MatrixHandle& m, const Vector& x) {
    if (const auto* d = std::get_if<DenseMatrix>(&m.storage)) {
        return apply_dense(*d, x);
    }
    return apply_csr(std::get<CsrMatrix>(m.storage), x);
}

DenseMatrix to_dense(const MatrixHandle& m) {
    if (const auto* d = std::get_if<DenseMatrix>(&m.storage)) {
        return *d;
    }
    return dense_from_csr(std::get<CsrMatrix>(m.storage));
}

} // namespace xpower
