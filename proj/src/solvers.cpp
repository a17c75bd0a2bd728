#include "xpower/solvers.hpp"

#include <cmath>
#include <stdexcept>

#include "xpower/errors.hpp"

namespace xpower {

namespace detail {

double simple_gamma(double d_cur, double d_prev) {
    if (d_prev < 1e-300) return 0.0;
    return -d_cur / d_prev;
}

double augmented_gamma(double d_cur, double p_cur, double d_prev, double p_prev,
                       double eta) {
    double den = std::sqrt(d_prev * d_prev + (eta * p_prev) * (eta * p_prev));
    if (den < 1e-300) return 0.0;
    return -std::sqrt(d_cur * d_cur + p_cur * p_cur) / den;
}

} // namespace detail

namespace {

void validate_inputs(const LinearOperator& op, const Vector& u0,
                     const SolverConfig& cfg) {
    if (op.n <= 0 || !op.apply_into) {
        throw std::invalid_argument("solver: operator is empty");
    }
    if (static_cast<int>(u0.size()) != op.n) {
        throw std::invalid_argument("solver: initial vector length does not match operator dimension");
    }
    if (cfg.tol < 0.0) {
        throw std::invalid_argument("solver: tol must be nonnegative");
    }
    if (cfg.max_iter < 1) {
        throw std::invalid_argument("solver: max_iter must be positive");
    }
    if (norm(u0) == 0.0) {
        throw std::invalid_argument("solver: initial vector must be nonzero");
    }
}

Vector unit_vector(const Vector& u, double h) {
    Vector x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) x[i] = u[i] / h;
    return x;
}

// Shared driver for all three methods. `total_power_steps` is the number of
// leading applications performed as plain power steps; `use_projection`
// selects the augmented blending parameter (computed from fresh projections)
// over the plain residual ratio.
EigenResult iterate(const LinearOperator& op, const Vector& u0,
                    const SolverConfig& cfg, const StepObserver& observer,
                    long long total_power_steps, bool use_projection) {
    const int n = op.n;
    Vector u = u0;
    double h = norm(u);

    Vector x(n), v(n), d(n), xg(n);
    Vector xprev, vprev;
    double d_prev = 0.0;  // residual norm two applications back
    double d_cur = 0.0;   // residual norm one application back
    double p_last = 0.0;  // projection computed at the previous application

    EigenResult res;
    if (cfg.record_trace) res.trace.reserve(64);

    double lambda = 0.0;
    double nd = 0.0;
    bool converged = false;
    int applications = 0;

    for (int k = 1; k <= cfg.max_iter; ++k) {
        applications = k;
        for (int i = 0; i < n; ++i) x[i] = u[i] / h;
        op.apply_into(x, v);

        double p = 0.0;
        if (use_projection && k >= 2) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += (v[i] - u[i]) * x[i];
            p = s;
        }

        double gamma = 0.0;
        if (k > total_power_steps) {
            gamma = use_projection
                        ? detail::augmented_gamma(d_cur, p, d_prev, p_last, cfg.eta)
                        : detail::simple_gamma(d_cur, d_prev);
        }

        const Vector* direction = &x;
        if (gamma == 0.0) {
            // Plain power application (leading steps and the degenerate-
            // denominator fallback).
            u = v;
            lambda = dot(u, x);
            for (int i = 0; i < n; ++i) d[i] = u[i] - lambda * x[i];
            nd = norm(d);
        } else {
            for (int i = 0; i < n; ++i) u[i] = (1.0 - gamma) * v[i] + gamma * vprev[i];
            for (int i = 0; i < n; ++i) xg[i] = (1.0 - gamma) * x[i] + gamma * xprev[i];
            double xg2 = dot(xg, xg);
            if (xg2 == 0.0) {
                throw BreakdownError("solver: blended direction vanished");
            }
            lambda = dot(u, xg) / xg2;
            for (int i = 0; i < n; ++i) d[i] = u[i] - lambda * xg[i];
            nd = norm(d);
            direction = &xg;
        }

        h = norm(u);
        if (h == 0.0) {
            throw BreakdownError("solver: operator annihilated the iterate");
        }

        if (cfg.record_trace) {
            res.trace.push_back(TraceStep{k, lambda, nd, gamma, p, h});
        }
        if (observer) {
            observer(StepView{k, lambda, nd, gamma, p, h, x, u, *direction});
        }
        if (nd < cfg.tol) {
            converged = true;
            break;
        }

        xprev = x;
        vprev = v;
        d_prev = d_cur;
        d_cur = nd;
        p_last = p;
    }

    res.converged = converged;
    res.eigenvalue = lambda;
    res.eigenvector = unit_vector(u, h);
    res.iterations = applications;
    res.final_residual = nd;
    return res;
}

} // namespace

EigenResult power_iterate(const LinearOperator& op, const Vector& u0,
                          const SolverConfig& cfg, const StepObserver& observer) {
    validate_inputs(op, u0, cfg);
    // Every application is a power step.
    return iterate(op, u0, cfg, observer, cfg.max_iter, false);
}

EigenResult simple_extrapolation(const LinearOperator& op, const Vector& u0,
                                 const SolverConfig& cfg,
                                 const StepObserver& observer) {
    validate_inputs(op, u0, cfg);
    if (cfg.warmup_m < 2) {
        throw std::invalid_argument("simple_extrapolation: warmup_m must be at least 2");
    }
    // warmup_m extra power applications plus the two the blended loop builds on.
    return iterate(op, u0, cfg, observer,
                   static_cast<long long>(cfg.warmup_m) + 2, false);
}

EigenResult augmented_extrapolation(const LinearOperator& op, const Vector& u0,
                                    const SolverConfig& cfg,
                                    const StepObserver& observer) {
    validate_inputs(op, u0, cfg);
    if (!(cfg.eta >= 1.0)) {
        throw std::invalid_argument("augmented_extrapolation: eta must be at least 1");
    }
    return iterate(op, u0, cfg, observer, 2, true);
}

double rayleigh_quotient(const LinearOperator& op, const Vector& x) {
    if (static_cast<int>(x.size()) != op.n) {
        throw std::invalid_argument("rayleigh_quotient: vector length does not match operator dimension");
    }
    double xx = dot(x, x);
    if (xx == 0.0) {
        throw std::invalid_argument("rayleigh_quotient: vector must be nonzero");
    }
    Vector y = op.apply(x);
    return dot(y, x) / xx;
}

std::vector<double> ideal_extrapolation(double r, double c, int m, int steps) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("ideal_extrapolation: r must lie in (0, 1)");
    }
    if (m < 0) {
        throw std::invalid_argument("ideal_extrapolation: m must be nonnegative");
    }
    if (steps < 1) {
        throw std::invalid_argument("ideal_extrapolation: steps must be positive");
    }
    std::vector<double> coeffs(steps);
    for (int k = 1; k <= steps; ++k) {
        // Sum of the blending exponents 1..k+1 on top of the m power steps.
        long long exponent = m + static_cast<long long>(k + 1) * (k + 2) / 2;
        coeffs[k - 1] = c * std::pow(r, static_cast<double>(exponent));
    }
    return coeffs;
}

} // namespace xpower
