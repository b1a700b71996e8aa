#include "zetam/series.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "zetam/constants.hpp"
#include "zetam/special.hpp"
#include "zetam/summation.hpp"
#include "zetam/transforms.hpp"

namespace zetam {

namespace {

// Shared majorant: zeta(m) - 1 < 2^-m (m+1)/(m-1) for m >= 2. The same
// window bounds S_m, and |H^-| <= 1 keeps it valid for skew-weighted terms.
double ub_zmo(double m) { return std::pow(2.0, -m) * (m + 1.0) / (m - 1.0); }

// H_n <= 1 + ln n for n >= 1.
double ub_harmonic(double n) { return 1.0 + std::log(n); }

void require_tol(double tol) {
    if (!(tol >= 1e-12)) throw std::invalid_argument("tolerance must be >= 1e-12");
}

EvalResult closed_form(double v, const std::string& method) {
    EvalResult r;
    r.value = v;
    r.err_bound = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
    r.terms_used = 0;
    r.method = method;
    return r;
}

// sum_{k>=1} (-1)^(k-1) c^(-k) / k^2 == -Li2(-1/c), the closed tail integral
// of ln(1+1/t)/t. Converges geometrically for c > 1.
double neg_li2_inv(double c) {
    KahanSum acc;
    double p = 1.0;
    for (int k = 1; k <= 80; ++k) {
        p /= c;
        const double t = ((k & 1) ? p : -p) / (static_cast<double>(k) * k);
        acc.add(t);
        if (std::abs(t) < 1e-20 * std::abs(acc.value())) break;
    }
    return acc.value();
}

// Route B summand f(t) = ln(1+1/t)/t and its derivatives.
struct RouteB {
    static double u(double t) { return std::log1p(1.0 / t); }
    static double f(double t) { return u(t) / t; }
    static double fp(double t) { return -u(t) / (t * t) - 1.0 / (t * t * (t + 1.0)); }
    static double fppp(double t) {
        const double P = t * (t + 1.0);
        const double up = -1.0 / P;
        const double upp = (2.0 * t + 1.0) / (P * P);
        const double uppp = -(6.0 * t * t + 6.0 * t + 2.0) / (P * P * P);
        const double t2 = t * t;
        return uppp / t - 3.0 * upp / t2 + 6.0 * up / (t2 * t) - 6.0 * u(t) / (t2 * t2);
    }
    static double integral_tail(double a) { return neg_li2_inv(a); }
};

// Route C summand f(t) = ln(t+1)/(t(t+1)).
struct RouteC {
    static double f(double t) { return std::log1p(t) * (1.0 / t - 1.0 / (1.0 + t)); }
    static double fp(double t) {
        const double v = std::log1p(t);
        const double w = 1.0 / t - 1.0 / (1.0 + t);
        const double wp = -1.0 / (t * t) + 1.0 / ((1.0 + t) * (1.0 + t));
        return w / (1.0 + t) + v * wp;
    }
    static double fppp(double t) {
        const double v = std::log1p(t);
        const double s = 1.0 + t;
        const double w = 1.0 / t - 1.0 / s;
        const double wp = -1.0 / (t * t) + 1.0 / (s * s);
        const double wpp = 2.0 / (t * t * t) - 2.0 / (s * s * s);
        const double wppp = -6.0 / (t * t * t * t) + 6.0 / (s * s * s * s);
        return 2.0 / (s * s * s) * w - 3.0 / (s * s) * wp + 3.0 / s * wpp + v * wppp;
    }
    static double integral_tail(double a) {
        // int_a^inf = (ln^2(1+a) - ln^2 a)/2 - Li2(-1/a)
        const double la = std::log(a);
        const double la1 = std::log1p(a);
        return 0.5 * (la1 - la) * (la1 + la) + neg_li2_inv(a);
    }
};

// Route K summand f(t) = ln(1+1/(t+1))/t.
struct RouteK {
    static double u(double t) { return std::log1p(1.0 / (t + 1.0)); }
    static double f(double t) { return u(t) / t; }
    static double fp(double t) {
        const double up = -1.0 / ((t + 1.0) * (t + 2.0));
        return up / t - u(t) / (t * t);
    }
    static double fppp(double t) {
        const double P = (t + 1.0) * (t + 2.0);
        const double up = -1.0 / P;
        const double upp = (2.0 * t + 3.0) / (P * P);
        const double uppp = -(6.0 * t * t + 18.0 * t + 14.0) / (P * P * P);
        const double t2 = t * t;
        return uppp / t - 3.0 * upp / t2 + 6.0 * up / (t2 * t) - 6.0 * u(t) / (t2 * t2);
    }
    static double integral_tail(double a) {
        // int_a^inf [ln(1+2/t) - ln(1+1/t)]/t dt, via -Li2(-c/a) pieces
        KahanSum acc;
        double p2 = 1.0, p1 = 1.0;
        for (int k = 1; k <= 100; ++k) {
            p2 *= 2.0 / a;
            p1 *= 1.0 / a;
            const double t = ((k & 1) ? 1.0 : -1.0) * (p2 - p1) / (static_cast<double>(k) * k);
            acc.add(t);
            if (std::abs(t) < 1e-20 * std::abs(acc.value())) break;
        }
        return acc.value();
    }
};

EvalResult em_route(const EmSummand& s, long n_start, double tol, long max_terms,
                    const std::string& id) {
    require_tol(tol);
    return sum_euler_maclaurin(s, n_start, max_terms, tol, id);
}

} // namespace

std::string to_id(MMethod m) {
    switch (m) {
        case MMethod::A: return "thm1.a";
        case MMethod::B: return "thm1.b";
        case MMethod::C: return "thm1.c";
        case MMethod::D: return "thm1.d";
        case MMethod::E: return "thm1.e";
        case MMethod::F: return "thm1.f";
        case MMethod::G: return "thm1.g";
        case MMethod::J: return "thm1.j";
    }
    throw std::logic_error("unreachable");
}

std::string to_id(M1Method m) {
    switch (m) {
        case M1Method::K: return "prop3.k";
        case M1Method::L: return "prop3.l";
        case M1Method::M_: return "prop3.m";
    }
    throw std::logic_error("unreachable");
}

std::string to_id(FixedIdentityId id) {
    switch (id) {
        case FixedIdentityId::Goldbach: return "goldbach";
        case FixedIdentityId::Euler3: return "eq3";
        case FixedIdentityId::Euler4: return "eq4";
        case FixedIdentityId::Prop1: return "eq6";
        case FixedIdentityId::Furdui7: return "eq7";
        case FixedIdentityId::Eq12: return "eq12";
        case FixedIdentityId::Remark1: return "remark1";
    }
    throw std::logic_error("unreachable");
}

double s_n(int n) {
    if (n < 1) throw std::domain_error("s_n: requires n >= 1");
    if (n == 1) return 1.0;  // telescoping sum_{k>=2} 1/(k(k-1))
    const long K = 32;
    KahanSum acc;
    for (long k = 2; k <= K; ++k)
        acc.add(std::pow(static_cast<double>(k), -static_cast<double>(n)) / (k - 1.0));
    // Tail over k > K: peel 1/(k-1) = 1/k + 1/(k(k-1)) repeatedly, so
    //   tail(n) = sum_{i=1..I} zeta(n+i, K+1) + tail(n+I),
    // with tail(n+I) <= zeta(n+I, K+1)/K, far below double resolution.
    for (int i = 1; i <= 12; ++i)
        acc.add(hurwitz_zeta(static_cast<double>(n) + i, static_cast<double>(K) + 1.0));
    return acc.value();
}

EvalResult m_series(MMethod method, double tol, long max_terms) {
    require_tol(tol);
    const auto& reg = registry();
    const std::string id = to_id(method);
    const TailPolicy geom{TailKind::GeometricBound, 0.56, 8};
    switch (method) {
        case MMethod::A: {
            // ln 2 + sum (-1)^(n-1) (zeta(n+1)-1)/n: the exactly summable
            // alternating-harmonic part extracted, remainder geometric.
            auto r = sum_geometric(
                [](long n) {
                    const double t = zeta_minus_one(static_cast<int>(n) + 1) / n;
                    return (n & 1) ? t : -t;
                },
                [](long n) { return ub_zmo(n + 1.0) / n; }, 1, geom, tol / 2.0, max_terms, id);
            r.value += reg.ln2;
            return r;
        }
        case MMethod::B: {
            EmSummand s{RouteB::f, RouteB::fp, RouteB::fppp, RouteB::integral_tail};
            return em_route(s, 1, tol, max_terms, id);
        }
        case MMethod::C: {
            EmSummand s{RouteC::f, RouteC::fp, RouteC::fppp, RouteC::integral_tail};
            return em_route(s, 1, tol, max_terms, id);
        }
        case MMethod::D: {
            auto hn = std::make_shared<double>(0.0);
            return sum_geometric(
                [hn](long n) {
                    *hn += 1.0 / n;
                    return *hn * zeta_minus_one(static_cast<int>(n) + 1);
                },
                [](long n) { return ub_harmonic(n) * ub_zmo(n + 1.0); }, 1, geom, tol / 2.0,
                max_terms, id);
        }
        case MMethod::E: {
            // sum_{n>=2} Hn (zeta(n)-1) = M + 1 - gamma; the closed offset is
            // removed so the route reports M directly.
            auto hn = std::make_shared<double>(1.0);
            auto r = sum_geometric(
                [hn](long n) {
                    *hn += 1.0 / n;
                    return *hn * zeta_minus_one(static_cast<int>(n));
                },
                [](long n) { return ub_harmonic(n) * ub_zmo(n); }, 2, geom, tol / 2.0, max_terms,
                id);
            r.value -= 1.0 - reg.gamma;
            return r;
        }
        case MMethod::F:
            return sum_geometric([](long n) { return s_n(static_cast<int>(n)) / n; },
                                 [](long n) { return ub_zmo(n) / n; }, 1, geom, tol / 2.0,
                                 max_terms, id);
        case MMethod::G: {
            // sum Hn^- (zeta(n+1)-zeta(n+2)) = M - ln 2.
            auto hm = std::make_shared<double>(0.0);
            auto r = sum_geometric(
                [hm](long n) {
                    *hm += ((n & 1) ? 1.0 : -1.0) / n;
                    return *hm * (zeta_minus_one(static_cast<int>(n) + 1) -
                                  zeta_minus_one(static_cast<int>(n) + 2));
                },
                [](long n) { return ub_zmo(n + 1.0); }, 1, geom, tol / 2.0, max_terms, id);
            r.value += reg.ln2;
            return r;
        }
        case MMethod::J:
            // Outer terms b_n/(n 2^n) with b_n = sum C(n,k)(-1)^(k-1) zeta(k+1).
            // Writing zeta = 1 + (zeta-1) gives b_n = 1 + sum_{j>=2} (1/j)(1-(1-1/j)^n),
            // hence |b_n| <= 2 + ln n, which certifies the geometric tail. The
            // inner sums are compensated; their ~2^n eps rounding is damped to
            // ~eps/n by the outer factor, so doubles suffice.
            return sum_geometric(
                [](long n) {
                    const double bn = euler_transform_coeffs(
                        [](long k) {
                            if (k == 0) return 0.0;
                            const double z = 1.0 + zeta_minus_one(static_cast<int>(k) + 1);
                            return (k & 1) ? z : -z;
                        },
                        n);
                    return bn / (n * std::pow(2.0, static_cast<double>(n)));
                },
                [](long n) {
                    return (2.0 + std::log(static_cast<double>(n))) /
                           (n * std::pow(2.0, static_cast<double>(n)));
                },
                1, TailPolicy{TailKind::GeometricBound, 0.56, 4}, tol / 2.0, max_terms, id);
    }
    throw std::logic_error("unreachable");
}

EvalResult m1_series(M1Method method, double tol, long max_terms) {
    require_tol(tol);
    const std::string id = to_id(method);
    const TailPolicy geom{TailKind::GeometricBound, 0.56, 8};
    switch (method) {
        case M1Method::K: {
            EmSummand s{RouteK::f, RouteK::fp, RouteK::fppp, RouteK::integral_tail};
            return em_route(s, 1, tol, max_terms, id);
        }
        case M1Method::L: {
            auto hm = std::make_shared<double>(0.0);
            return sum_geometric(
                [hm](long n) {
                    *hm += ((n & 1) ? 1.0 : -1.0) / n;
                    return *hm * zeta_minus_one(static_cast<int>(n) + 1);
                },
                [](long n) { return ub_zmo(n + 1.0); }, 1, geom, tol / 2.0, max_terms, id);
        }
        case M1Method::M_:
            // Alternating with the same Remark-2 majorant; first term is 1.
            return sum_geometric(
                [](long n) {
                    const double t = s_n(static_cast<int>(n)) / n;
                    return (n & 1) ? t : -t;
                },
                [](long n) { return ub_zmo(n) / n; }, 1, geom, tol / 2.0, max_terms, id);
    }
    throw std::logic_error("unreachable");
}

IdentityReport fixed_identity(FixedIdentityId id, double tol, long max_terms) {
    require_tol(tol);
    const auto& reg = registry();
    const std::string name = to_id(id);
    const TailPolicy geom{TailKind::GeometricBound, 0.56, 8};
    const double half = tol / 2.0;
    switch (id) {
        case FixedIdentityId::Goldbach: {
            auto lhs = sum_geometric([](long n) { return zeta_minus_one(static_cast<int>(n)); },
                                     [](long n) { return ub_zmo(static_cast<double>(n)); }, 2,
                                     geom, half, max_terms, name + ".lhs");
            return IdentityReport::make(name, lhs, closed_form(1.0, "1"), tol);
        }
        case FixedIdentityId::Euler3: {
            auto lhs =
                sum_geometric([](long n) { return zeta_minus_one(static_cast<int>(n)) / n; },
                              [](long n) { return ub_zmo(static_cast<double>(n)) / n; }, 2, geom,
                              half, max_terms, name + ".lhs");
            return IdentityReport::make(name, lhs, closed_form(1.0 - reg.gamma, "1-gamma"), tol);
        }
        case FixedIdentityId::Euler4: {
            // sum (-1)^n zeta(n)/n = (1 - ln 2) + sum (-1)^n (zeta(n)-1)/n.
            auto lhs = sum_geometric(
                [](long n) {
                    const double t = zeta_minus_one(static_cast<int>(n)) / n;
                    return (n & 1) ? -t : t;
                },
                [](long n) { return ub_zmo(static_cast<double>(n)) / n; }, 2, geom, half,
                max_terms, name + ".lhs");
            lhs.value += 1.0 - reg.ln2;
            return IdentityReport::make(name, lhs, closed_form(reg.gamma, "gamma"), tol);
        }
        case FixedIdentityId::Prop1: {
            auto hm = std::make_shared<double>(1.0);  // H_1^-, updated before use
            auto lhs = sum_geometric(
                [hm](long n) {
                    *hm += ((n & 1) ? 1.0 : -1.0) / n;
                    return *hm * (zeta_minus_one(static_cast<int>(n)) -
                                  zeta_minus_one(static_cast<int>(n) + 1));
                },
                [](long n) { return ub_zmo(static_cast<double>(n)); }, 2, geom, half, max_terms,
                name + ".lhs");
            return IdentityReport::make(
                name, lhs, closed_form(reg.zeta2 - reg.gamma - reg.ln2, "zeta2-gamma-ln2"), tol);
        }
        case FixedIdentityId::Furdui7: {
            auto hn = std::make_shared<double>(1.0);
            auto lhs = sum_geometric(
                [hn](long n) {
                    *hn += 1.0 / n;
                    return *hn * (zeta_minus_one(static_cast<int>(n)) -
                                  zeta_minus_one(static_cast<int>(n) + 1));
                },
                [](long n) { return ub_harmonic(static_cast<double>(n)) * ub_zmo(static_cast<double>(n)); },
                2, geom, half, max_terms, name + ".lhs");
            return IdentityReport::make(name, lhs,
                                        closed_form(reg.zeta2 - reg.gamma, "zeta2-gamma"), tol);
        }
        case FixedIdentityId::Eq12: {
            auto hn = std::make_shared<double>(1.0);
            auto lhs = sum_geometric(
                [hn](long n) {
                    *hn += 1.0 / n;
                    const double t = *hn * (zeta_minus_one(static_cast<int>(n)) +
                                            zeta_minus_one(static_cast<int>(n) + 1));
                    return (n & 1) ? -t : t;
                },
                [](long n) {
                    return ub_harmonic(static_cast<double>(n)) *
                           (ub_zmo(static_cast<double>(n)) + ub_zmo(n + 1.0));
                },
                2, geom, half, max_terms, name + ".lhs");
            return IdentityReport::make(
                name, lhs,
                closed_form(reg.zeta2 + reg.gamma - 2.0 + reg.ln2, "zeta2+gamma-2+ln2"), tol);
        }
        case FixedIdentityId::Remark1: {
            auto lhs =
                sum_geometric([](long k) { return zeta_minus_one(static_cast<int>(k) + 1) / k; },
                              [](long k) { return ub_zmo(k + 1.0) / k; }, 1, geom, half,
                              max_terms, name + ".lhs");
            auto hn = std::make_shared<double>(0.0);
            auto rhs = sum_geometric(
                [hn](long n) {
                    *hn += 1.0 / n;
                    return *hn * (zeta_minus_one(static_cast<int>(n) + 1) -
                                  zeta_minus_one(static_cast<int>(n) + 2));
                },
                [](long n) { return ub_harmonic(static_cast<double>(n)) * ub_zmo(n + 1.0); }, 1,
                geom, half, max_terms, name + ".rhs");
            return IdentityReport::make(name, lhs, rhs, tol);
        }
    }
    throw std::logic_error("unreachable");
}

IdentityReport prop1_partial_sum_check(int m) {
    if (m < 2) throw std::domain_error("prop1_partial_sum_check: requires m >= 2");
    KahanSum lhs;
    for (int n = 2; n <= m; ++n)
        lhs.add(skew_harmonic(n) * (zeta_minus_one(n) - zeta_minus_one(n + 1)));
    KahanSum alt;
    for (int n = 2; n <= m; ++n) {
        const double z = 1.0 + zeta_minus_one(n + 1);
        alt.add(((n & 1) ? -z : z) / (n + 1.0));
    }
    const double hm1 = skew_harmonic(m + 1);
    const double rhs = registry().zeta2 / 2.0 - hm1 * zeta_minus_one(m + 1) - hm1 + alt.value();

    EvalResult l;
    l.value = lhs.value();
    l.err_bound = 0.0;
    l.terms_used = m - 1;
    l.method = "partial-sum";
    EvalResult r = closed_form(rhs, "telescoped");
    return IdentityReport::make("prop1.partial@m=" + std::to_string(m), l, r, 1e-10);
}

IdentityReport prop2_check(double p, double tol, long max_terms) {
    if (!(p > 1.0)) throw std::domain_error("prop2_check: requires p > 1");
    require_tol(tol);
    const std::string name = "prop2@p=" + std::to_string(p).substr(0, 8);

    // LHS: sum ln(n+1)/n^p with Euler-Maclaurin tail.
    EmSummand s;
    s.f = [p](double t) { return std::log1p(t) * std::pow(t, -p); };
    s.fp = [p](double t) {
        return std::pow(t, -p) / (1.0 + t) - p * std::log1p(t) * std::pow(t, -p - 1.0);
    };
    s.fppp = [p](double t) {
        const double v = std::log1p(t);
        const double s1 = 1.0 + t;
        const double w = std::pow(t, -p);
        const double wp = -p * std::pow(t, -p - 1.0);
        const double wpp = p * (p + 1.0) * std::pow(t, -p - 2.0);
        const double wppp = -p * (p + 1.0) * (p + 2.0) * std::pow(t, -p - 3.0);
        return 2.0 / (s1 * s1 * s1) * w - 3.0 / (s1 * s1) * wp + 3.0 / s1 * wpp + v * wppp;
    };
    s.integral_tail = [p](double a) {
        // int_a^inf ln(t) t^-p + int_a^inf ln(1+1/t) t^-p
        KahanSum acc;
        acc.add(std::pow(a, 1.0 - p) * (std::log(a) / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0))));
        double cpow = std::pow(a, 1.0 - p);
        for (int j = 1; j <= 80; ++j) {
            cpow /= a;
            const double t = ((j & 1) ? 1.0 : -1.0) / j * cpow / (p + j - 1.0);
            acc.add(t);
            if (std::abs(t) < 1e-20 * std::abs(acc.value())) break;
        }
        return acc.value();
    };
    auto lhs = sum_euler_maclaurin(s, 1, max_terms, tol, name + ".lhs");

    // RHS: -zeta'(p) + ln 2 + sum (-1)^(k-1) (zeta(p+k)-1)/k, the same
    // alternating-harmonic decomposition as route A.
    auto rhs = sum_geometric(
        [p](long k) {
            const double t = hurwitz_zeta(p + k, 2.0) / k;
            return (k & 1) ? t : -t;
        },
        [p](long k) { return ub_zmo(p + k) / k; }, 1, TailPolicy{TailKind::GeometricBound, 0.56, 4},
        tol / 2.0, max_terms, name + ".rhs");
    rhs.value += -zeta_prime(p) + registry().ln2;
    return IdentityReport::make(name, lhs, rhs, tol);
}

} // namespace zetam
