#include "xpower/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace xpower {

MatrixHandle wilkinson_w21() {
    const int n = 21;
    DenseMatrix a = make_dense(n, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = std::fabs(10.0 - i);
        if (i + 1 < n) {
            a.at(i, i + 1) = 1.0;
            a.at(i + 1, i) = 1.0;
        }
    }
    return make_handle(std::move(a), "wilkinson_w21");
}

namespace {

MatrixHandle diagonal_csr(const Vector& diag, std::string label) {
    CsrMatrix c;
    c.n_rows = c.n_cols = static_cast<int>(diag.size());
    c.row_offsets.reserve(diag.size() + 1);
    c.row_offsets.push_back(0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        c.col_indices.push_back(static_cast<int>(i));
        c.values.push_back(diag[i]);
        c.row_offsets.push_back(static_cast<int>(i) + 1);
    }
    return make_handle(std::move(c), std::move(label));
}

} // namespace

MatrixHandle clustered_diag() {
    Vector diag(50, 0.5);
    diag[0] = 1.0;
    diag[1] = 0.9;
    return diagonal_csr(diag, "clustered_diag");
}

MatrixHandle linspace_diag() {
    Vector diag(1001);
    diag[0] = 1.0;
    const double lo = 0.75;
    const double hi = 0.999;
    const double step = (hi - lo) / 999.0;
    for (int j = 0; j < 1000; ++j) {
        diag[1 + j] = lo + j * step;
    }
    diag[1000] = hi; // endpoint exact regardless of rounding in the steps
    return diagonal_csr(diag, "linspace_diag");
}

MatrixHandle nonnormal_t(double t) {
    const int n = 100;
    CsrMatrix c;
    c.n_rows = c.n_cols = n;
    c.row_offsets.reserve(n + 1);
    c.row_offsets.push_back(0);
    for (int i = 0; i < n; ++i) {
        c.col_indices.push_back(i);
        c.values.push_back(static_cast<double>(i + 1));
        if (i < 50) { // rows 1..50 carry the coupling entry
            c.col_indices.push_back(i + 1);
            c.values.push_back(t);
        }
        c.row_offsets.push_back(static_cast<int>(c.col_indices.size()));
    }
    return make_handle(std::move(c), "nonnormal_t");
}

Vector random_init(int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random_init: n must be positive");
    }
    Vector v(n);
    std::uint64_t state = seed;
    for (int i = 0; i < n; ++i) {
        // splitmix64: the increment is the 64-bit golden ratio; the two
        // multiplies are the standard finalizer constants.
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        v[i] = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    }
    return v;
}

Vector ones_init(int n) {
    if (n < 1) {
        throw std::invalid_argument("ones_init: n must be positive");
    }
    return Vector(n, 1.0);
}

} // namespace xpower
