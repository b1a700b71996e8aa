#include "zetam/genfun.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "zetam/constants.hpp"
#include "zetam/quadrature.hpp"
#include "zetam/special.hpp"
#include "zetam/summation.hpp"

namespace zetam {

namespace {

// Uniform bound on a^s zeta(s,a) for s >= 2, from the integral-test tail
// estimate zeta(s,a) - a^-s <= (a+1)^-s (s+a)/(s-1).
double zr_bound(double a) {
    const double r = a / (a + 1.0);
    return 1.0 + r * r * (2.0 + a);
}

// Sums sum_{n>=n0} term(n) where |term(n)| <= C (1+ln n) q^n. The log
// factor is absorbed into an n-dependent ratio, so certification works for
// any q < 1, including q close to 1.
EvalResult sum_log_geometric(const std::function<double(long)>& term, double C, double q,
                             long n0, double tol_tail, long max_terms, const std::string& id) {
    KahanSum acc;
    double abs_acc = 0.0;
    double qn = std::pow(q, static_cast<double>(n0));
    for (long n = n0; n - n0 < max_terms; ++n) {
        const double t = term(n);
        if (!std::isfinite(t))
            throw tolerance_unreachable(id + ": non-finite term", acc.value(),
                                        std::numeric_limits<double>::infinity());
        acc.add(t);
        abs_acc += std::abs(t);
        qn *= q;  // now q^(n+1)
        const double lg = 1.0 + std::log(static_cast<double>(n + 1));
        const double ratio = q * (1.0 + 1.0 / ((n + 1) * lg));
        if (ratio < 1.0) {
            const double tail = C * lg * qn / (1.0 - ratio);
            if (tail <= tol_tail) {
                EvalResult r;
                r.value = acc.value();
                r.err_bound = tail + 4.0 * std::numeric_limits<double>::epsilon() * abs_acc;
                r.terms_used = n - n0 + 1;
                r.method = id;
                return r;
            }
        }
    }
    throw tolerance_unreachable(id + ": tail not certified within max term count", acc.value(),
                                C * qn / std::max(1e-30, 1.0 - q));
}

EvalResult closed(double v, const std::string& method) {
    EvalResult r;
    r.value = v;
    r.err_bound = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
    r.method = method;
    return r;
}

void require_disk(bool ok, const std::string& id) {
    if (!ok) throw std::domain_error(id + ": point outside the identity's disk");
}

// Rolling-power helper state shared by the series lambdas below.
struct Pow {
    double p;
    double q;
    double next() {
        const double v = p;
        p *= q;
        return v;
    }
};

} // namespace

GridSpec default_grid() {
    return GridSpec{{0.5, 1.0, 2.0, 3.7, 10.0}, {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9}};
}

IdentityReport eq5_check(double x, double tol, long max_terms) {
    require_disk(std::abs(x) < 1.0, "eq5");
    const auto& reg = registry();
    EvalResult lhs;
    if (x == 0.0) {
        lhs = closed(0.0, "series");
    } else {
        // zeta(n+1) split as 1 + (zeta(n+1)-1): the pure-geometric part has
        // the closed value x/(1+x); the remainder decays like (x/2)^n.
        auto pw = std::make_shared<Pow>(Pow{x / 2.0, x / 2.0});
        lhs = sum_log_geometric(
            [pw](long n) {
                const double s = pw->next() * zeta_ratio(n + 1.0, 2.0) / 2.0;
                return (n & 1) ? s : -s;
            },
            zr_bound(2.0) / 2.0, std::abs(x) / 2.0, 1, tol / 2.0, max_terms, "eq5.series");
        lhs.value += x / (1.0 + x);
    }
    return IdentityReport::make("eq5", lhs, closed(digamma(1.0 + x) + reg.gamma, "psi(1+x)+gamma"),
                                tol);
}

IdentityReport eq18_check(double a, double t, double tol, long max_terms) {
    require_disk(a > 0.0 && std::abs(t) < a, "eq18");
    EvalResult lhs;
    if (t == 0.0) {
        lhs = closed(0.0, "series");
    } else {
        const double q = t / (a + 1.0);
        auto pw = std::make_shared<Pow>(Pow{q, q});
        lhs = sum_log_geometric(
            [pw, a](long n) { return pw->next() * zeta_ratio(n + 1.0, a + 1.0) / (a + 1.0); },
            zr_bound(a + 1.0) / (a + 1.0), std::abs(q), 1, tol / 2.0, max_terms, "eq18.series");
        lhs.value += t / (a * (a - t));
    }
    return IdentityReport::make("eq18", lhs, closed(digamma(a) - digamma(a - t), "psi(a)-psi(a-t)"),
                                tol);
}

IdentityReport eq1_check(double x, double tol, long max_terms) {
    require_disk(std::abs(x) < 2.0, "eq1");
    const auto& reg = registry();
    EvalResult lhs;
    if (x == 0.0) {
        lhs = closed(0.0, "series");
    } else {
        auto pw = std::make_shared<Pow>(Pow{x / 4.0, x / 2.0});  // x^(n-1)/2^n at n=2
        lhs = sum_log_geometric(
            [pw](long n) { return pw->next() * zeta_ratio(static_cast<double>(n), 2.0); },
            zr_bound(2.0), std::abs(x) / 2.0, 2, tol / 2.0, max_terms, "eq1.series");
    }
    return IdentityReport::make(
        "eq1", lhs, closed(1.0 - reg.gamma - digamma(2.0 - x), "1-gamma-psi(2-x)"), tol);
}

IdentityReport eq2_check(double x, double tol, long max_terms) {
    require_disk(std::abs(x) < 2.0, "eq2");
    const auto& reg = registry();
    EvalResult lhs;
    if (x == 0.0) {
        lhs = closed(0.0, "series");
    } else {
        auto pw = std::make_shared<Pow>(Pow{x * x / 4.0, x / 2.0});
        lhs = sum_log_geometric(
            [pw](long n) { return pw->next() * zeta_ratio(static_cast<double>(n), 2.0) / n; },
            zr_bound(2.0) / 2.0, std::abs(x) / 2.0, 2, tol / 2.0, max_terms, "eq2.series");
    }
    return IdentityReport::make(
        "eq2", lhs, closed((1.0 - reg.gamma) * x + log_gamma(2.0 - x), "(1-gamma)x+lnGamma(2-x)"),
        tol);
}

IdentityReport eq9_check(double a, double x, double tol, long max_terms) {
    require_disk(a > 0.0 && std::abs(x) < a, "eq9");
    EvalResult lhs;
    if (x == 0.0) {
        lhs = closed(0.0, "series");
    } else {
        const double q = x / (a + 1.0);
        auto pw = std::make_shared<Pow>(Pow{q * q, q});
        lhs = sum_log_geometric(
            [pw, a](long n) {
                return pw->next() * zeta_ratio(static_cast<double>(n), a + 1.0) / n;
            },
            zr_bound(a + 1.0) / 2.0, std::abs(q), 2, tol / 2.0, max_terms, "eq9.series");
        lhs.value += -std::log1p(-x / a) - x / a;
    }
    const double rhs = log_gamma(a - x) - log_gamma(a) + digamma(a) * x;
    return IdentityReport::make("eq9", lhs, closed(rhs, "lnGamma(a-x)-lnGamma(a)+psi(a)x"), tol);
}

namespace {

// Shared series of thm2/eq10/eq11/eq13: sum_{n>=2} Hn p^n (zr(n,b) - p zr(n+1,b))
// where p = x/b and b is the Hurwitz offset (a for thm2, a+1 for eq13).
EvalResult hz_pair_series(double b, double p, double tol_tail, long max_terms,
                          const std::string& id) {
    struct State {
        double hn = 1.0;     // H_n, starting before n = 2
        double pn;           // p^n
        double p;
        double zr_next;      // zr(n, b) cache
        double b;
        long n = 2;
    };
    auto st = std::make_shared<State>();
    st->p = p;
    st->pn = p * p;
    st->b = b;
    st->zr_next = zeta_ratio(2.0, b);
    const double C = (1.0 + std::abs(p)) * zr_bound(b);
    return sum_log_geometric(
        [st](long n) {
            st->hn += 1.0 / n;
            const double zr_n = st->zr_next;
            st->zr_next = zeta_ratio(n + 1.0, st->b);
            const double t = st->hn * st->pn * (zr_n - st->p * st->zr_next);
            st->pn *= st->p;
            return t;
        },
        C, std::abs(p), 2, tol_tail, max_terms, id);
}

} // namespace

IdentityReport thm2_check(double a, double x, double tol, long max_terms) {
    require_disk(a > 0.0 && x != 0.0 && std::abs(x) < a, "eq8");
    EvalResult lhs = hz_pair_series(a, x / a, tol / 2.0, max_terms, "eq8.series");
    const double rhs = hurwitz_zeta(2.0, a) * x * x + digamma(a) * x + log_gamma(a - x) -
                       log_gamma(a);
    return IdentityReport::make("eq8", lhs, closed(rhs, "zeta(2,a)x^2+psi(a)x+lnGamma(a-x)-lnGamma(a)"),
                                tol);
}

IdentityReport eq10_check(double x, double tol, long max_terms) {
    require_disk(std::abs(x) < 1.0, "eq10");
    const auto& reg = registry();
    EvalResult lhs =
        (x == 0.0) ? closed(0.0, "series") : hz_pair_series(1.0, x, tol / 2.0, max_terms, "eq10.series");
    const double rhs = reg.zeta2 * x * x - reg.gamma * x + log_gamma(1.0 - x);
    return IdentityReport::make("eq10", lhs, closed(rhs, "zeta(2)x^2-gamma*x+lnGamma(1-x)"), tol);
}

IdentityReport eq11_check(double x, double tol, long max_terms) {
    require_disk(std::abs(x) < 2.0, "eq11");
    const auto& reg = registry();
    EvalResult lhs = (x == 0.0) ? closed(0.0, "series")
                                : hz_pair_series(2.0, x / 2.0, tol / 2.0, max_terms, "eq11.series");
    const double rhs =
        (reg.zeta2 - 1.0) * x * x + (1.0 - reg.gamma) * x + log_gamma(2.0 - x);
    return IdentityReport::make("eq11", lhs,
                                closed(rhs, "(zeta(2)-1)x^2+(1-gamma)x+lnGamma(2-x)"), tol);
}

IdentityReport eq12_point_check(double tol, long max_terms) {
    const auto& reg = registry();
    EvalResult lhs = hz_pair_series(2.0, -0.5, tol / 2.0, max_terms, "eq12.series");
    const double rhs = reg.zeta2 + reg.gamma - 2.0 + reg.ln2;
    IdentityReport r = IdentityReport::make("eq12", lhs, closed(rhs, "zeta2+gamma-2+ln2"), tol);
    return r;
}

IdentityReport eq13_check(double a, double x, double tol, long max_terms) {
    require_disk(a > 0.0 && std::abs(x) < a + 1.0, "eq13");
    EvalResult lhs = (x == 0.0)
                         ? closed(0.0, "series")
                         : hz_pair_series(a + 1.0, x / (a + 1.0), tol / 2.0, max_terms,
                                          "eq13.series");
    const double rhs = hurwitz_zeta(2.0, a) * x * x + digamma(a) * x + (a - x) * x / (a * a) +
                       log_gamma(a + 1.0 - x) - log_gamma(a + 1.0);
    return IdentityReport::make("eq13", lhs, closed(rhs, "regularized closed form"), tol);
}

Thm3Report thm3_triple_check(double a, double x, bool skew, double tol, long max_terms) {
    require_disk(a > 0.0 && x > 0.0 && x < a, skew ? "thm3.15" : "thm3.14");
    const double c = a - x;
    const std::string id = skew ? "thm3.15" : "thm3.14";
    Thm3Report out;

    // route (i): the generating-function series
    {
        struct State {
            double h = 0.0;
            double pn;
            double q;
            bool skew;
            double a;
        };
        auto st = std::make_shared<State>();
        st->q = x / a;
        st->pn = st->q;
        st->skew = skew;
        st->a = a;
        EvalResult r = sum_log_geometric(
            [st](long n) {
                st->h += (st->skew && !(n & 1)) ? -1.0 / n : 1.0 / n;
                const double t = st->h * st->pn * zeta_ratio(n + 1.0, st->a) / st->a;
                st->pn *= st->q;
                return t;
            },
            zr_bound(a) / a, x / a, 1, tol / 2.0, max_terms, id + ".i");
        out.routes.push_back(r);
    }

    // route (ii): the k-series at shifted argument a-x, peeled once
    {
        const double peel_limit = skew ? 2.0 * x / c : x / c;
        const double q2 = (skew ? 2.0 * x : x) / (c + 1.0);
        if (peel_limit <= 1.0 && q2 <= 0.9) {
            struct State {
                double px, p2x;   // running (x/(c+1))^k and (2x/(c+1))^k
                double qx, q2x;
                double c;
                bool skew;
            };
            auto st = std::make_shared<State>();
            st->qx = x / (c + 1.0);
            st->q2x = 2.0 * x / (c + 1.0);
            st->px = st->qx;
            st->p2x = st->q2x;
            st->c = c;
            st->skew = skew;
            EvalResult r = sum_log_geometric(
                [st](long k) {
                    const double zr = zeta_ratio(k + 1.0, st->c + 1.0) / (st->c + 1.0);
                    const double amp = st->skew ? (st->p2x - st->px) : st->px;
                    const double t = ((k & 1) ? 1.0 : -1.0) * amp * zr / k;
                    st->px *= st->qx;
                    st->p2x *= st->q2x;
                    return t;
                },
                2.0 * zr_bound(c + 1.0) / (c + 1.0), q2, 1, tol / 2.0, max_terms, id + ".ii");
            r.value += skew ? (std::log1p(2.0 * x / c) - std::log1p(x / c)) / c
                            : std::log1p(x / c) / c;
            out.routes.push_back(r);
        } else {
            std::ostringstream os;
            os << "route (ii) skipped: k-series ratio " << (skew ? 2.0 * x : x) / c
               << " past the certified range at a=" << a << ", x=" << x;
            out.skipped_note = os.str();
        }
    }

    // route (iii): the integral form
    {
        Integrand f;
        if (skew) {
            f.evaluator = [c](double t) { return (digamma(c + 2.0 * t) - digamma(c + t)) / t; };
        } else {
            const double psic = digamma(c);
            f.evaluator = [c, psic](double t) { return (digamma(c + t) - psic) / t; };
        }
        f.removable = {{0.0, hurwitz_zeta(2.0, c)}};
        QuadResult q = integrate_finite(f, 0.0, x, tol);
        out.routes.push_back({q.value, q.err_estimate, q.nodes_used, id + ".iii"});
    }

    double worst = 0.0;
    std::size_t wi = 0, wj = out.routes.size() > 1 ? 1 : 0;
    for (std::size_t i = 0; i < out.routes.size(); ++i)
        for (std::size_t j = i + 1; j < out.routes.size(); ++j) {
            const double d = std::abs(out.routes[i].value - out.routes[j].value);
            if (d >= worst) {
                worst = d;
                wi = i;
                wj = j;
            }
        }
    out.worst = IdentityReport::make(id, out.routes[wi], out.routes[wj], tol);
    return out;
}

std::vector<std::string> genfun_identity_ids() {
    return {"eq1",  "eq2",  "eq5",  "eq8",  "eq9",  "eq10",
            "eq11", "eq12", "eq13", "eq18", "thm3.14", "thm3.15"};
}

namespace {

double radius_for(const std::string& id, double a) {
    if (id == "eq5" || id == "eq10") return 1.0;
    if (id == "eq1" || id == "eq2" || id == "eq11") return 2.0;
    if (id == "eq13") return a + 1.0;
    return a;  // eq8, eq9, eq18, thm3.*
}

bool uses_a(const std::string& id) {
    return id == "eq8" || id == "eq9" || id == "eq13" || id == "eq18" || id == "thm3.14" ||
           id == "thm3.15";
}

} // namespace

GenfunReport run_grid(const std::string& id, const GridSpec& grid, double tol, long max_terms) {
    GenfunReport rep;
    rep.id = id;
    rep.tolerance = tol;
    rep.passed = true;

    if (id == "eq12") {
        IdentityReport r = eq12_point_check(tol, max_terms);
        GenfunPoint pt{2.0, -1.0, r.abs_diff, true, ""};
        rep.points.push_back(pt);
        rep.max_abs_diff = r.abs_diff;
        rep.worst_a = 2.0;
        rep.worst_x = -1.0;
        rep.passed = r.passed;
        return rep;
    }

    const std::vector<double> as = uses_a(id) ? grid.a_values : std::vector<double>{0.0};
    for (double a : as) {
        for (double frac : grid.x_fractions) {
            const double x = frac * radius_for(id, a);
            GenfunPoint pt;
            pt.a = a;
            pt.x = x;
            if (std::abs(frac) >= 1.0) {
                pt.note = "outside disk";
                rep.points.push_back(pt);
                continue;
            }
            if ((id == "thm3.14" || id == "thm3.15") && x <= 0.0) {
                pt.note = "requires x > 0";
                rep.points.push_back(pt);
                continue;
            }
            if (id == "eq8" && x == 0.0) {
                pt.note = "requires x != 0";
                rep.points.push_back(pt);
                continue;
            }
            IdentityReport r;
            if (id == "eq1") r = eq1_check(x, tol, max_terms);
            else if (id == "eq2") r = eq2_check(x, tol, max_terms);
            else if (id == "eq5") r = eq5_check(x, tol, max_terms);
            else if (id == "eq8") r = thm2_check(a, x, tol, max_terms);
            else if (id == "eq9") r = eq9_check(a, x, tol, max_terms);
            else if (id == "eq10") r = eq10_check(x, tol, max_terms);
            else if (id == "eq11") r = eq11_check(x, tol, max_terms);
            else if (id == "eq13") r = eq13_check(a, x, tol, max_terms);
            else if (id == "eq18") r = eq18_check(a, x, tol, max_terms);
            else if (id == "thm3.14" || id == "thm3.15") {
                Thm3Report t = thm3_triple_check(a, x, id == "thm3.15", tol, max_terms);
                r = t.worst;
                if (!t.skipped_note.empty()) pt.note = t.skipped_note;
            } else {
                throw std::invalid_argument("run_grid: unknown identity id '" + id + "'");
            }
            pt.evaluated = true;
            pt.abs_diff = r.abs_diff;
            rep.points.push_back(pt);
            if (r.abs_diff >= rep.max_abs_diff) {
                rep.max_abs_diff = r.abs_diff;
                rep.worst_a = a;
                rep.worst_x = x;
            }
            if (!r.passed) rep.passed = false;
        }
    }
    return rep;
}

} // namespace zetam
