#include "xpower/lu.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "xpower/errors.hpp"

namespace xpower {

LuFactors lu_factor(const DenseMatrix& a) {
    if (a.n_rows != a.n_cols) {
        throw std::invalid_argument("lu_factor: matrix must be square");
    }
    const int n = a.n_rows;
    LuFactors f;
    f.n = n;
    f.lu = a.entries;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);

    // Singularity is judged against the magnitude each column had before
    // elimination, not against the shrinking working values.
    std::vector<double> col_scale(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = std::fabs(a.at(i, j));
            if (v > col_scale[j]) col_scale[j] = v;
        }
    }

    auto at = [&](int i, int j) -> double& {
        return f.lu[static_cast<std::size_t>(i) * n + j];
    };

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::fabs(at(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::fabs(at(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0 || best < 1e-14 * col_scale[k]) {
            throw SingularMatrixError("lu_factor: pivot in column " + std::to_string(k) +
                                      " is numerically zero");
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        const double pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            double m = at(i, k) / pivot;
            at(i, k) = m;
            if (m != 0.0) {
                for (int j = k + 1; j < n; ++j) {
                    at(i, j) -= m * at(k, j);
                }
            }
        }
    }
    return f;
}

Vector lu_solve(const LuFactors& f, const Vector& b) {
    if (static_cast<int>(b.size()) != f.n) {
        throw std::invalid_argument("lu_solve: right-hand side length does not match");
    }
    const int n = f.n;
    auto at = [&](int i, int j) -> double {
        return f.lu[static_cast<std::size_t>(i) * n + j];
    };

    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    // Forward substitution with the unit lower factor.
    for (int i = 1; i < n; ++i) {
        double s = x[i];
        for (int j = 0; j < i; ++j) s -= at(i, j) * x[j];
        x[i] = s;
    }
    // Back substitution with U.
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= at(i, j) * x[j];
        x[i] = s / at(i, i);
    }
    return x;
}

} // namespace xpower
