#pragma once

namespace zetam {

/// Digamma psi(x) for x > 0. Argument is shifted above 10 by the recurrence
/// psi(x+1) = psi(x) + 1/x, then the Stirling-type asymptotic series with
/// Bernoulli coefficients is applied. Absolute error is a few ulps of the
/// result over [1e-3, 1e6].
double digamma(double x);

/// ln Gamma(x) for x > 0, same shift-then-asymptotic scheme as digamma.
double log_gamma(double x);

/// Hurwitz zeta sum_{k>=0} (k+a)^(-s) for s > 1, a > 0. Direct summation of
/// the head plus an Euler-Maclaurin tail; the truncation point adapts to s
/// so the correction series stays strongly convergent.
double hurwitz_zeta(double s, double a);

/// Riemann zeta, s > 1.
double riemann_zeta(double s);

/// zeta(n) - 1 computed as the direct sum over k >= 2 (never by subtracting
/// near-equal quantities); relative error stays near machine epsilon even
/// when the value is of size 2^-n.
double zeta_minus_one(int n);

/// a^s * zeta(s, a): the Hurwitz zeta with its leading a^(-s) scale removed.
/// Safe where a^(-s) itself would underflow or x^n factors would overflow;
/// used by the power-series evaluators.
double zeta_ratio(double s, double a);

/// zeta'(p) = -sum ln(n) n^(-p) for p > 1, via direct summation with an
/// Euler-Maclaurin tail correction. Absolute error well below 1e-10.
double zeta_prime(double p);

/// Ein(x) = sum_{n>=1} (-1)^(n-1) x^n / (n! n), entire. Power series for
/// x <= 10; for larger x the series cancellation exceeds double precision,
/// so the integral form ln x + gamma + E1(x) is used with E1 evaluated by
/// continued fraction. Restricted to |x| <= 1e4, and to x > -708 where the
/// value still fits in a double.
double ein(double x);

/// Laguerre polynomial L_n(x) by the stable three-term recurrence.
double laguerre(int n, double x);

/// H_n = 1 + 1/2 + ... + 1/n by direct accumulation, H_0 = 0.
double harmonic(long n);

/// H_n^- = 1 - 1/2 + ... + (-1)^(n-1)/n, H_0^- = 0.
double skew_harmonic(long n);

} // namespace zetam
