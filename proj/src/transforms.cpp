#include "zetam/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zetam/errors.hpp"
#include "zetam/quadrature.hpp"
#include "zetam/special.hpp"
#include "zetam/summation.hpp"

namespace zetam {

IdentityReport abel_transform_check(const FiniteSequence& a, const FiniteSequence& b) {
    if (a.values.empty() || b.values.empty())
        throw std::invalid_argument("abel_transform_check: sequences must be non-empty");
    if (a.start != b.start || a.values.size() != b.values.size())
        throw std::invalid_argument("abel_transform_check: index ranges must match");
    const std::size_t len = a.values.size();
    if (len < 2) throw std::invalid_argument("abel_transform_check: requires n > p");

    KahanSum lhs;
    for (std::size_t i = 0; i < len; ++i) lhs.add(a.values[i] * b.values[i]);

    KahanSum partial;  // A_k
    KahanSum rhs;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        partial.add(a.values[i]);
        rhs.add(partial.value() * (b.values[i] - b.values[i + 1]));
    }
    partial.add(a.values[len - 1]);
    rhs.add(b.values[len - 1] * partial.value());

    EvalResult l{lhs.value(), 0.0, static_cast<long>(len), "direct"};
    EvalResult r{rhs.value(), 0.0, static_cast<long>(len), "summation-by-parts"};
    const double scale = std::max({std::abs(l.value), std::abs(r.value), 1e-30});
    return IdentityReport::make("lemma2", l, r, 1e-12 * scale);
}

double euler_transform_coeffs(const std::function<double(long)>& a, long n) {
    if (n < 1) throw std::invalid_argument("euler_transform_coeffs: requires n >= 1");
    if (n > 1000) throw std::invalid_argument("euler_transform_coeffs: n beyond cap 1000");
    std::vector<double> row{1.0};
    row.reserve(n + 1);
    for (long m = 1; m <= n; ++m) {
        std::vector<double> next(m + 1);
        next[0] = 1.0;
        next[m] = 1.0;
        for (long k = 1; k < m; ++k) next[k] = row[k - 1] + row[k];
        row.swap(next);
    }
    KahanSum acc;
    for (long k = 0; k <= n; ++k) acc.add(row[k] * a(k));
    return acc.value();
}

IdentityReport laguerre_binomial_check(int n, double tol) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("laguerre_binomial_check: requires 1 <= n <= 12");
    const double lhs_v = euler_transform_coeffs(
        [](long k) {
            if (k == 0) return 0.0;
            const double z = 1.0 + zeta_minus_one(static_cast<int>(k) + 1);
            return (k & 1) ? z : -z;
        },
        n);

    Integrand f;
    f.evaluator = [n](double x) { return (1.0 - laguerre(n, x)) / std::expm1(x); };
    f.removable = {{0.0, static_cast<double>(n)}};  // 1 - L_n(x) ~ n x at 0
    SemiInfiniteOptions opts;
    opts.cutoff = 70.0;
    // |L_n(x)| <= P_n(x) = sum_k C(n,k) x^k / k!, and for X >= 2n each
    // incomplete-gamma piece obeys int_X^inf x^k e^-x dx <= 2 X^k e^-X, so
    // the remainder past X is below e^-X (1 + 2 P_n(X)), up to the harmless
    // 1/(1-e^-X) factor absorbed into the leading 2.
    double pn = 0.0;
    double coef = 1.0;  // C(n,k) X^k / k!
    for (int k = 0; k <= n; ++k) {
        pn += coef;
        coef *= 70.0 * (n - k) / ((k + 1.0) * (k + 1.0));
    }
    opts.tail_bound = std::exp(-70.0) * (1.0 + 2.0 * pn);
    QuadResult q = integrate_semi_infinite(f, tol, opts);

    EvalResult l{lhs_v, 0.0, n, "binomial-sum"};
    EvalResult r{q.value, q.err_estimate, q.nodes_used, "quadrature"};
    return IdentityReport::make("laguerre.identity@n=" + std::to_string(n), l, r, tol);
}

IdentityReport harmonic_rep_check(int n) {
    if (n < 1 || n > 50) throw std::invalid_argument("harmonic_rep_check: requires 1 <= n <= 50");
    Integrand f;
    f.evaluator = [n](double t) { return (std::pow(t, n) - 1.0) / (t - 1.0); };
    f.removable = {{1.0, static_cast<double>(n)}};
    QuadResult q = integrate_finite(f, 0.0, 1.0, 1e-11);
    EvalResult l{q.value, q.err_estimate, q.nodes_used, "quadrature"};
    EvalResult r{harmonic(n), 0.0, n, "direct"};
    return IdentityReport::make("harmonic.rep@n=" + std::to_string(n), l, r, 1e-10);
}

IdentityReport skew_rep_check(int n) {
    if (n < 1 || n > 50) throw std::invalid_argument("skew_rep_check: requires 1 <= n <= 50");
    const double sign = (n & 1) ? -1.0 : 1.0;
    Integrand f;
    f.evaluator = [n, sign](double t) { return (1.0 - sign * std::pow(t, n)) / (1.0 + t); };
    QuadResult q = integrate_finite(f, 0.0, 1.0, 1e-11);
    EvalResult l{q.value, q.err_estimate, q.nodes_used, "quadrature"};
    EvalResult r{skew_harmonic(n), 0.0, n, "direct"};
    return IdentityReport::make("skew.rep@n=" + std::to_string(n), l, r, 1e-10);
}

namespace {

IdentityReport lemma3_impl(const DerivativeOracle& f, double lhs_value, double x, int K,
                           double tail_bound, double tol, bool skew, const std::string& id) {
    if (K < 1 || K > f.max_order)
        throw std::invalid_argument("lemma3 check: K out of the oracle's declared range");
    if (!(tail_bound <= tol))
        throw tolerance_unreachable(id + ": k-series tail bound exceeds tolerance", lhs_value,
                                    tail_bound);
    KahanSum acc;
    double xk = 1.0;
    double twok = 1.0;
    for (int k = 1; k <= K; ++k) {
        xk *= x;
        twok *= 2.0;
        const double weight = skew ? (twok - 1.0) : 1.0;
        const double t = ((k & 1) ? 1.0 : -1.0) * weight / k * xk * f.scaled(k, x);
        acc.add(t);
    }
    EvalResult l{lhs_value, 0.0, 0, "series"};
    EvalResult r{acc.value(), tail_bound, K, "derivative-expansion"};
    return IdentityReport::make(id, l, r, tol);
}

} // namespace

IdentityReport lemma3_harmonic_check(const DerivativeOracle& f, double lhs_value, double x,
                                     int K, double tail_bound, double tol,
                                     const std::string& id) {
    return lemma3_impl(f, lhs_value, x, K, tail_bound, tol, false, id);
}

IdentityReport lemma3_skew_check(const DerivativeOracle& f, double lhs_value, double x, int K,
                                 double tail_bound, double tol, const std::string& id) {
    return lemma3_impl(f, lhs_value, x, K, tail_bound, tol, true, id);
}

} // namespace zetam
