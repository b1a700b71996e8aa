#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

#include "zetam/errors.hpp"
#include "zetam/report.hpp"

namespace zetam {

/// Kahan compensated accumulator. Keeps the rounding error of a long sum
/// near one ulp of the result instead of growing with the term count.
class KahanSum {
public:
    void add(double v) {
        const double y = v - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    // comp_ holds the running rounding excess, so the refined sum removes it
    double value() const { return sum_ - comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

enum class TailKind { GeometricBound, AlternatingBound, EulerMaclaurin, FixedN };

/// Truncation policy attached to a series evaluation. GeometricBound needs a
/// pointwise majorant that eventually decays by a fixed ratio; the other
/// kinds are handled by the dedicated drivers below.
struct TailPolicy {
    TailKind kind = TailKind::GeometricBound;
    double ratio = 0.5;   // certified bound ratio for GeometricBound
    long from_n = 2;      // index from which the ratio holds
};

/// Sums sum_{n>=n_start} term(n) where |term(n)| <= bound(n) and
/// bound(n+1) <= ratio * bound(n) for n >= policy.from_n. Stops once the
/// geometric closure of the bound certifies tail <= tol_tail.
inline EvalResult sum_geometric(const std::function<double(long)>& term,
                                const std::function<double(long)>& bound,
                                long n_start, const TailPolicy& policy,
                                double tol_tail, long max_terms,
                                const std::string& method) {
    KahanSum acc;
    double abs_acc = 0.0;
    long n = n_start;
    for (; n - n_start < max_terms; ++n) {
        const double t = term(n);
        if (!std::isfinite(t))
            throw tolerance_unreachable(method + ": non-finite term", acc.value(),
                                        std::numeric_limits<double>::infinity());
        acc.add(t);
        abs_acc += std::abs(t);
        if (n >= policy.from_n) {
            const double tail = bound(n + 1) / (1.0 - policy.ratio);
            if (tail <= tol_tail) {
                EvalResult r;
                r.value = acc.value();
                r.err_bound = tail + 4.0 * std::numeric_limits<double>::epsilon() * abs_acc;
                r.terms_used = n - n_start + 1;
                r.method = method;
                return r;
            }
        }
    }
    throw tolerance_unreachable(method + ": tail bound not certified within max term count",
                                acc.value(), bound(n) / (1.0 - policy.ratio));
}

/// Smooth positive decreasing summand f with analytic derivatives, used by
/// the Euler-Maclaurin driver: tail from a is
///   integral_tail(a) + f(a)/2 - f'(a)/12 + f'''(a)/720.
struct EmSummand {
    std::function<double(double)> f;
    std::function<double(double)> fp;     // f'
    std::function<double(double)> fppp;   // f'''
    std::function<double(double)> integral_tail;  // int_a^inf f(t) dt, closed form
};

/// Sums sum_{n>=n_start} f(n) as a direct pass over n <= N plus the
/// Euler-Maclaurin correction at a = N+1. The remainder after the f'''
/// term is bounded by that term's magnitude for completely monotone f,
/// which covers every summand used here.
inline EvalResult sum_euler_maclaurin(const EmSummand& s, long n_start, long N,
                                      double tol, const std::string& method) {
    KahanSum acc;
    double abs_acc = 0.0;
    for (long n = n_start; n <= N; ++n) {
        const double t = s.f(static_cast<double>(n));
        acc.add(t);
        abs_acc += std::abs(t);
    }
    const double a = static_cast<double>(N + 1);
    acc.add(s.integral_tail(a));
    acc.add(0.5 * s.f(a));
    acc.add(-s.fp(a) / 12.0);
    const double last = s.fppp(a) / 720.0;
    acc.add(last);
    EvalResult r;
    r.value = acc.value();
    r.err_bound = std::abs(last) + 4.0 * std::numeric_limits<double>::epsilon() * abs_acc;
    r.terms_used = N - n_start + 1;
    r.method = method;
    if (r.err_bound > tol)
        throw tolerance_unreachable(method + ": Euler-Maclaurin remainder exceeds tolerance",
                                    r.value, r.err_bound);
    return r;
}

} // namespace zetam
