#include "xpower/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "xpower/errors.hpp"

namespace xpower {

namespace {

double frobenius(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.entries) s += v * v;
    return std::sqrt(s);
}

double offdiag_frobenius(const DenseMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.n_rows; ++i) {
        for (int j = 0; j < a.n_cols; ++j) {
            if (i != j) s += a.at(i, j) * a.at(i, j);
        }
    }
    return std::sqrt(s);
}

} // namespace

SpectrumResult jacobi_symmetric_eigen(const DenseMatrix& a, double sweep_tol) {
    if (a.n_rows != a.n_cols) {
        throw std::invalid_argument("jacobi_symmetric_eigen: matrix must be square");
    }
    const int n = a.n_rows;
    if (n < 1 || n > 2000) {
        throw std::invalid_argument("jacobi_symmetric_eigen: order must be between 1 and 2000");
    }
    if (sweep_tol <= 0.0) {
        throw std::invalid_argument("jacobi_symmetric_eigen: sweep_tol must be positive");
    }

    double max_abs = 0.0;
    double max_asym = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::fabs(a.at(i, j)));
            max_asym = std::max(max_asym, std::fabs(a.at(i, j) - a.at(j, i)));
        }
    }
    if (max_asym > 1e-12 * max_abs) {
        throw std::invalid_argument("jacobi_symmetric_eigen: matrix is not symmetric");
    }

    // Work on the symmetrized copy; rotations preserve exact symmetry.
    DenseMatrix b = make_dense(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            b.at(i, j) = 0.5 * (a.at(i, j) + a.at(j, i));
        }
    }
    DenseMatrix vects = make_dense(n, n);
    for (int i = 0; i < n; ++i) vects.at(i, i) = 1.0;

    const double fro = frobenius(b);
    if (fro > 0.0) {
        const double stop = sweep_tol * fro;
        const int max_sweeps = 200;
        int sweep = 0;
        while (offdiag_frobenius(b) >= stop) {
            if (++sweep > max_sweeps) {
                throw std::runtime_error("jacobi_symmetric_eigen: rotation sweeps did not converge");
            }
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = b.at(p, q);
                    if (apq == 0.0) continue;
                    const double tau = (b.at(q, q) - b.at(p, p)) / (2.0 * apq);
                    const double t = (tau >= 0.0)
                                         ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                         : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    const double app = b.at(p, p);
                    const double aqq = b.at(q, q);
                    b.at(p, p) = app - t * apq;
                    b.at(q, q) = aqq + t * apq;
                    b.at(p, q) = 0.0;
                    b.at(q, p) = 0.0;
                    for (int i = 0; i < n; ++i) {
                        if (i == p || i == q) continue;
                        const double aip = b.at(i, p);
                        const double aiq = b.at(i, q);
                        b.at(i, p) = c * aip - s * aiq;
                        b.at(p, i) = b.at(i, p);
                        b.at(i, q) = s * aip + c * aiq;
                        b.at(q, i) = b.at(i, q);
                    }
                    for (int i = 0; i < n; ++i) {
                        const double vip = vects.at(i, p);
                        const double viq = vects.at(i, q);
                        vects.at(i, p) = c * vip - s * viq;
                        vects.at(i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        double mi = std::fabs(b.at(i, i));
        double mj = std::fabs(b.at(j, j));
        if (mi != mj) return mi > mj;
        return b.at(i, i) > b.at(j, j); // positive value first on magnitude ties
    });

    SpectrumResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = make_dense(n, n);
    for (int c = 0; c < n; ++c) {
        res.eigenvalues[c] = b.at(order[c], order[c]);
        for (int i = 0; i < n; ++i) {
            res.eigenvectors.at(i, c) = vects.at(i, order[c]);
        }
    }
    return res;
}

std::pair<double, Vector> triangular_dominant_pair(const MatrixHandle& a) {
    const int n = a.n;
    DenseMatrix d = to_dense(a);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (d.at(i, j) != 0.0) {
                throw std::invalid_argument(
                    "triangular_dominant_pair: matrix must be upper triangular");
            }
        }
    }

    int imax = 0;
    for (int i = 1; i < n; ++i) {
        if (std::fabs(d.at(i, i)) > std::fabs(d.at(imax, imax))) imax = i;
    }
    const double lambda = d.at(imax, imax);
    for (int i = 0; i < n; ++i) {
        if (i != imax && std::fabs(d.at(i, i)) == std::fabs(lambda)) {
            throw DegenerateSpectrumError(
                "triangular_dominant_pair: maximal diagonal magnitude is repeated");
        }
    }

    // (A - lambda I) v = 0: entries below imax vanish, v[imax] is free,
    // entries above follow by back-substitution.
    Vector v(n, 0.0);
    v[imax] = 1.0;
    for (int i = imax - 1; i >= 0; --i) {
        double s = 0.0;
        for (int j = i + 1; j <= imax; ++j) s += d.at(i, j) * v[j];
        v[i] = -s / (d.at(i, i) - lambda);
    }
    double nv = norm(v);
    for (double& e : v) e /= nv;
    return {lambda, v};
}

double spectral_ratio(const SpectrumResult& spec) {
    if (spec.eigenvalues.size() < 2) {
        throw std::invalid_argument("spectral_ratio: need at least two eigenvalues");
    }
    const double lead = std::fabs(spec.eigenvalues[0]);
    if (lead == 0.0) {
        throw DegenerateSpectrumError("spectral_ratio: dominant eigenvalue is zero");
    }
    return std::fabs(spec.eigenvalues[1]) / lead;
}

} // namespace xpower
