#pragma once

#include <functional>
#include <vector>

#include "xpower/linear_operator.hpp"
#include "xpower/vec.hpp"

namespace xpower {

struct SolverConfig {
    double tol = 1e-7;    // stop when the residual norm drops below this
    int max_iter = 6000;  // cap on operator applications
    int warmup_m = 40;    // extra plain power applications before the simple
                          // method starts blending (it always performs two of
                          // its own on top of these)
    double eta = 40.0;    // damping parameter of the augmented method, >= 1
    bool record_trace = true;
};

// One row per operator application k (1-based): the eigenvalue estimate and
// residual norm computed during that application, the blending parameter and
// projection actually used/computed there (0 whenever the active method does
// not define them), and the norm of the iterate the application produced.
struct TraceStep {
    int k = 0;
    double lambda = 0.0;
    double residual_norm = 0.0;
    double gamma = 0.0;
    double p = 0.0;
    double h = 0.0;
};
using IterationTrace = std::vector<TraceStep>;

struct EigenResult {
    bool converged = false;
    double eigenvalue = 0.0;   // last Rayleigh-quotient estimate
    Vector eigenvector;        // final iterate, normalized to unit length
    int iterations = 0;        // operator applications performed after u0
    double final_residual = 0.0;
    IterationTrace trace;      // empty unless record_trace
};

// Live view of one application, for callers that need the vectors themselves
// (the trace keeps only scalars). `direction` is the reference direction the
// residual was measured against: the unit iterate x for plain power steps,
// the blended direction for extrapolated steps. References are only valid
// inside the callback.
struct StepView {
    int k;
    double lambda;
    double residual_norm;
    double gamma;
    double p;
    double h;
    const Vector& x;         // unit input direction of this application
    const Vector& u;         // iterate produced by this application
    const Vector& direction; // residual reference direction
};
using StepObserver = std::function<void(const StepView&)>;

// Plain power iteration: x_k = u_k/h_k, u_{k+1} = A x_k, with Rayleigh
// estimate (u_{k+1}, x_k) and residual u_{k+1} - lambda x_k. Stops at the
// first residual norm below cfg.tol, or at max_iter.
EigenResult power_iterate(const LinearOperator& op, const Vector& u0,
                          const SolverConfig& cfg,
                          const StepObserver& observer = {});

// One-step residual-ratio extrapolation. Runs warmup_m + 2 plain power
// applications, then each application blends the two most recent operator
// images with gamma = -|d_cur|/|d_prev| and measures the residual against the
// correspondingly blended direction. Stop test applies at every application.
EigenResult simple_extrapolation(const LinearOperator& op, const Vector& u0,
                                 const SolverConfig& cfg,
                                 const StepObserver& observer = {});

// Extrapolation with the projection-augmented blending parameter
// gamma = -sqrt(|d_cur|^2 + p_cur^2) / sqrt(|d_prev|^2 + (eta*p_prev)^2),
// where p = (A x - u, x) is computed fresh at every application from the
// second onward. Always runs exactly two plain power applications first.
EigenResult augmented_extrapolation(const LinearOperator& op, const Vector& u0,
                                    const SolverConfig& cfg,
                                    const StepObserver& observer = {});

// (A x, x) / (x, x). Throws std::invalid_argument on a zero vector.
double rayleigh_quotient(const LinearOperator& op, const Vector& x);

// Closed form of the idealized two-component recurrence: the subdominant
// coefficient after k blended steps that follow m power applications, when
// the blending parameter at step k is exactly -r^k and each application is
// normalized by the dominant eigenvalue. Entry k-1 of the result holds
// c * r^(m + sum_{l=1..k+1} l) for k = 1..steps. Requires 0 < r < 1.
std::vector<double> ideal_extrapolation(double r, double c, int m, int steps);

namespace detail {
// Blending parameters as pure functions, exposed for direct verification.
double simple_gamma(double d_cur, double d_prev);
double augmented_gamma(double d_cur, double p_cur, double d_prev, double p_prev,
                       double eta);
} // namespace detail

} // namespace xpower
