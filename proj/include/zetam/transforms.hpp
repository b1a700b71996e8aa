#pragma once

#include <functional>

#include "zetam/report.hpp"

namespace zetam {

/// A finite real sequence a_p, a_{p+1}, ..., a_n.
struct FiniteSequence {
    long start = 1;
    std::vector<double> values;
};

/// Checks the summation-by-parts identity
///   sum_{k=p}^n a_k b_k == b_n A_n + sum_{k=p}^{n-1} A_k (b_k - b_{k+1}),
/// A_k = a_p + ... + a_k, as a finite floating-point identity at relative
/// tolerance 1e-12 (stored scaled to the sides' magnitude).
IdentityReport abel_transform_check(const FiniteSequence& a, const FiniteSequence& b);

/// Binomial transform b_n = sum_{k=0}^n C(n,k) a(k). Coefficients come from
/// the addition-only Pascal recurrence, which is exact in doubles through
/// n = 56; beyond that the compensated inner sum absorbs the rounding.
/// n is capped at 1000 (the last row before C(n, n/2) overflows has n ~ 1028).
double euler_transform_coeffs(const std::function<double(long)>& a, long n);

/// sum_{k=1}^n C(n,k)(-1)^(k-1) zeta(k+1)  vs  int_0^inf (1-L_n(x))/(e^x-1) dx
/// for 1 <= n <= 12.
IdentityReport laguerre_binomial_check(int n, double tol);

/// Quadrature of int_0^1 (t^n - 1)/(t - 1) dt against harmonic(n).
IdentityReport harmonic_rep_check(int n);

/// Quadrature of int_0^1 (1 - (-t)^n)/(1 + t) dt against skew_harmonic(n).
/// The representation comes from expanding the integrand as the geometric
/// polynomial sum_{k=0}^{n-1} (-t)^k and integrating termwise.
IdentityReport skew_rep_check(int n);

/// Scaled derivative oracle: (k, x) -> f^(k)(x) / k!.
struct DerivativeOracle {
    std::function<double(int, double)> scaled;
    int max_order = 64;
};

/// Checks sum Hn a_n x^n == sum_{k>=1} ((-1)^(k-1)/k) x^k f^(k)(x)/k!
/// against a caller-supplied left-hand value. K and the tail bound of the
/// k-series are the caller's responsibility; a bound above tol throws.
IdentityReport lemma3_harmonic_check(const DerivativeOracle& f, double lhs_value, double x,
                                     int K, double tail_bound, double tol,
                                     const std::string& id = "lemma3.16");

/// Skew variant with weight (2^k - 1).
IdentityReport lemma3_skew_check(const DerivativeOracle& f, double lhs_value, double x,
                                 int K, double tail_bound, double tol,
                                 const std::string& id = "lemma3.17");

} // namespace zetam
