#pragma once

#include <string>

#include "zetam/report.hpp"

namespace zetam {

/// The series routes to M. Each value names one convergent representation;
/// the README carries the id -> formula table.
enum class MMethod { A, B, C, D, E, F, G, J };

/// The series routes to M1.
enum class M1Method { K, L, M_ };

/// Closed-form identities with a registry-constant right-hand side (except
/// Remark1, which compares two series representations of the same number).
enum class FixedIdentityId { Goldbach, Euler3, Euler4, Prop1, Furdui7, Eq12, Remark1 };

std::string to_id(MMethod m);        // "thm1.a" .. "thm1.j"
std::string to_id(M1Method m);       // "prop3.k" .. "prop3.m"
std::string to_id(FixedIdentityId);  // "goldbach", "eq3", ...

/// Evaluates the chosen series route to M with err_bound <= tol. Routes E
/// and G converge to shifted targets (M + 1 - gamma and M - ln 2); the
/// returned value always has the closed offset removed so that every route
/// is directly comparable to M.
EvalResult m_series(MMethod method, double tol, long max_terms = 100000);

/// Same for the M1 routes of prop3.
EvalResult m1_series(M1Method method, double tol, long max_terms = 100000);

/// S_n = sum_{k>=2} 1/(k^n (k-1)), by direct summation plus a telescoped
/// zeta-tail correction; never by the cancellation-prone n - zeta(2) - ...
/// - zeta(n). S_1 = 1 (the k-sum telescopes exactly, matching the series
/// convention that the first term of routes F and M_ is 1).
double s_n(int n);

/// Checks one fixed identity at the given tolerance.
IdentityReport fixed_identity(FixedIdentityId id, double tol, long max_terms = 100000);

/// Finite telescoping identity for the partial sums of prop1:
///   sum_{n=2}^m Hn^- (zeta(n)-zeta(n+1))
///     == zeta(2)/2 - H^-_{m+1}(zeta(m+1)-1) - H^-_{m+1}
///        + sum_{n=2}^m (-1)^n zeta(n+1)/(n+1),
/// checked in floating point at tolerance 1e-10.
IdentityReport prop1_partial_sum_check(int m);

/// sum ln(n+1)/n^p  vs  -zeta'(p) + sum_k (-1)^(k-1) zeta(p+k)/k, p > 1.
IdentityReport prop2_check(double p, double tol, long max_terms = 100000);

} // namespace zetam
