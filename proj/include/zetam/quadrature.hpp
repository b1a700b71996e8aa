#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zetam/report.hpp"

namespace zetam {

/// An integrand on an open interval. Endpoint singularities must be
/// integrable (the tanh-sinh nodes never land exactly on an endpoint).
/// Removable 0/0 points carry their analytic limit, which is substituted
/// whenever an abscissa lands within 1e-12 of the location; nudging nodes
/// instead would put 0/0 evaluations right where the nodes cluster.
struct Integrand {
    std::function<double(double)> evaluator;
    bool singular_lower = false;
    bool singular_upper = false;
    std::vector<std::pair<double, double>> removable;  // (location, limit)

    double eval(double x) const {
        for (const auto& [loc, lim] : removable)
            if (std::abs(x - loc) < 1e-12) return lim;
        return evaluator(x);
    }
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long nodes_used = 0;
    bool converged = false;
    std::vector<double> level_estimates;  // per-level trapezoid values
};

/// Thrown when level doubling hits the cap without meeting the tolerance;
/// carries the best estimate so far.
class quadrature_nonconvergence : public std::runtime_error {
public:
    quadrature_nonconvergence(const std::string& what, QuadResult best_so_far)
        : std::runtime_error(what), best(std::move(best_so_far)) {}
    QuadResult best;
};

/// Tanh-sinh rule on (a, b) with level doubling until two successive levels
/// agree within tol. Handles integrable logarithmic endpoint singularities.
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol,
                            int max_level = 12);

struct SemiInfiniteOptions {
    double cutoff = 45.0;      // split point X
    double tail_bound = -1.0;  // <0: use the e^-X (ln X + gamma + 1 + 1/X) envelope
};

/// Integral over (0, inf) for integrands decaying at least like
/// e^-x * polylog: tanh-sinh over (0, X) plus an analytic bound on the
/// remainder, which is added to the error estimate.
QuadResult integrate_semi_infinite(const Integrand& f, double tol,
                                   const SemiInfiniteOptions& opts = {});

/// M = int_0^1 (psi(1+t)+gamma)/t dt; removable at 0 with limit zeta(2).
QuadResult m_integral(double tol);

/// M1 = int_1^2 (psi(1+t)+gamma)/t dt; smooth.
QuadResult m1_integral(double tol);

/// int_0^inf Ein(x)/(e^x - 1) dx = M; removable at 0 with limit 1.
QuadResult ein_integral_h(double tol);

/// int_0^1 (1-u) ln(1-u) / (u ln u) du = M; removable at 0, logarithmic
/// blow-up at 1.
QuadResult log_integral_i(double tol);

/// int_0^1 (1 - gamma - psi(2-t))/t dt; removable at 0 with limit zeta(2)-1.
QuadResult remark1_integral(double tol);

/// Checks int_0^1 (psi(1+2t)-psi(1+t))/t dt == int_1^2 (psi(1+t)+gamma)/t dt.
IdentityReport eq21_check(double tol);

} // namespace zetam
