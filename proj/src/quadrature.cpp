#include "zetam/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zetam/constants.hpp"
#include "zetam/special.hpp"
#include "zetam/summation.hpp"

namespace zetam {

namespace {

constexpr double kPiHalf = std::numbers::pi / 2.0;

// One-sided tanh-sinh node ladder at u = start, start+step, ... (start and
// step share their sign). Nodes are generated until the transformed point
// sits closer to the endpoint than doubles can resolve or the weight has
// decayed past use.
struct NodeSum {
    double sum = 0.0;
    long count = 0;
};

NodeSum sum_ladder(const Integrand& f, double a, double b, double start, double step) {
    const double half = 0.5 * (b - a);
    const bool upper = start > 0.0;
    const double endpoint = upper ? b : a;
    // below this distance the node x = endpoint -/+ d rounds onto the
    // endpoint itself, which a singular evaluator must never see
    const double dmin =
        std::max(1e-300, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(endpoint));
    NodeSum out;
    KahanSum acc;
    for (double u = start;; u += step) {
        const double sh = kPiHalf * std::sinh(std::abs(u));
        const double ch = std::cosh(sh);
        const double w = kPiHalf * std::cosh(u) / (ch * ch);
        // distance of the node from its endpoint, computed without cancellation
        const double d = half * 2.0 / (std::exp(2.0 * sh) + 1.0);
        if (!(d > dmin) || !(w > 1e-300)) break;
        acc.add(w * f.eval(upper ? b - d : a + d));
        out.count += 1;
        if (w * half < 1e-22 && std::abs(u) > 2.5) break;
    }
    out.sum = acc.value();
    return out;
}

} // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol, int max_level) {
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");
    if (!(tol >= 1e-12)) throw std::invalid_argument("integrate_finite: tol must be >= 1e-12");
    const double half = 0.5 * (b - a);

    QuadResult res;
    double h = 1.0;
    // level 0: center node plus all integer offsets
    double s = kPiHalf * f.eval(a + half);
    {
        auto neg = sum_ladder(f, a, b, -1.0, -1.0);
        auto pos = sum_ladder(f, a, b, 1.0, 1.0);
        s += neg.sum + pos.sum;
        res.nodes_used += 1 + neg.count + pos.count;
    }
    double prev = half * h * s;
    res.level_estimates.push_back(prev);

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // refinement adds the odd multiples of the new step
        auto neg = sum_ladder(f, a, b, -h, -2.0 * h);
        auto pos = sum_ladder(f, a, b, h, 2.0 * h);
        s += neg.sum + pos.sum;
        res.nodes_used += neg.count + pos.count;
        const double cur = half * h * s;
        res.level_estimates.push_back(cur);
        const double diff = std::abs(cur - prev);
        if (level >= 2 && diff <= tol) {
            res.value = cur;
            res.err_estimate = diff;
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.value = prev;
    res.err_estimate = std::abs(res.level_estimates[res.level_estimates.size() - 1] -
                                res.level_estimates[res.level_estimates.size() - 2]);
    res.converged = false;
    throw quadrature_nonconvergence("integrate_finite: level cap reached", res);
}

QuadResult integrate_semi_infinite(const Integrand& f, double tol,
                                   const SemiInfiniteOptions& opts) {
    const double X = opts.cutoff;
    double tail = opts.tail_bound;
    if (tail < 0.0) {
        // envelope int_X^inf e^-x (ln x + gamma + 1) dx <= e^-X (ln X + gamma + 1 + 1/X)
        tail = std::exp(-X) * (std::log(X) + registry().gamma + 1.0 + 1.0 / X);
    }
    QuadResult r = integrate_finite(f, 0.0, X, tol, 12);
    r.err_estimate += tail;
    return r;
}

QuadResult m_integral(double tol) {
    const double g = registry().gamma;
    Integrand f;
    f.evaluator = [g](double t) { return (digamma(1.0 + t) + g) / t; };
    f.removable = {{0.0, registry().zeta2}};
    return integrate_finite(f, 0.0, 1.0, tol);
}

QuadResult m1_integral(double tol) {
    const double g = registry().gamma;
    Integrand f;
    f.evaluator = [g](double t) { return (digamma(1.0 + t) + g) / t; };
    return integrate_finite(f, 1.0, 2.0, tol);
}

QuadResult ein_integral_h(double tol) {
    Integrand f;
    f.evaluator = [](double x) { return ein(x) / std::expm1(x); };
    f.removable = {{0.0, 1.0}};
    return integrate_semi_infinite(f, tol);
}

QuadResult log_integral_i(double tol) {
    Integrand f;
    // (1-u) ln(1-u) / (u ln u); log1p keeps both logs fully accurate at the ends
    f.evaluator = [](double u) {
        return ((1.0 - u) * std::log1p(-u)) / (u * std::log(u));
    };
    f.removable = {{0.0, 0.0}};
    f.singular_upper = true;  // ~ -ln(1-u) near 1, integrable
    return integrate_finite(f, 0.0, 1.0, tol);
}

QuadResult remark1_integral(double tol) {
    const double g = registry().gamma;
    Integrand f;
    f.evaluator = [g](double t) { return (1.0 - g - digamma(2.0 - t)) / t; };
    f.removable = {{0.0, registry().zeta2 - 1.0}};
    return integrate_finite(f, 0.0, 1.0, tol);
}

IdentityReport eq21_check(double tol) {
    Integrand lhs_f;
    lhs_f.evaluator = [](double t) { return (digamma(1.0 + 2.0 * t) - digamma(1.0 + t)) / t; };
    lhs_f.removable = {{0.0, registry().zeta2}};
    QuadResult lq = integrate_finite(lhs_f, 0.0, 1.0, tol);
    QuadResult rq = m1_integral(tol);

    EvalResult l{lq.value, lq.err_estimate, lq.nodes_used, "eq21.lhs"};
    EvalResult r{rq.value, rq.err_estimate, rq.nodes_used, "eq21.rhs"};
    return IdentityReport::make("eq21", l, r, tol);
}

} // namespace zetam
