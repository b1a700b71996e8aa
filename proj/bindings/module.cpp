#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetam/constants.hpp"
#include "zetam/errors.hpp"
#include "zetam/genfun.hpp"
#include "zetam/quadrature.hpp"
#include "zetam/report.hpp"
#include "zetam/series.hpp"
#include "zetam/special.hpp"
#include "zetam/suites.hpp"
#include "zetam/transforms.hpp"

namespace py = pybind11;

namespace {

zetam::MMethod m_method_from_id(const std::string& id) {
    using zetam::MMethod;
    for (MMethod m : {MMethod::A, MMethod::B, MMethod::C, MMethod::D, MMethod::E, MMethod::F,
                      MMethod::G, MMethod::J})
        if (zetam::to_id(m) == id) return m;
    throw std::invalid_argument("unknown M series method '" + id + "'");
}

zetam::M1Method m1_method_from_id(const std::string& id) {
    using zetam::M1Method;
    for (M1Method m : {M1Method::K, M1Method::L, M1Method::M_})
        if (zetam::to_id(m) == id) return m;
    throw std::invalid_argument("unknown M1 series method '" + id + "'");
}

zetam::FixedIdentityId fixed_from_id(const std::string& id) {
    using zetam::FixedIdentityId;
    for (FixedIdentityId f :
         {FixedIdentityId::Goldbach, FixedIdentityId::Euler3, FixedIdentityId::Euler4,
          FixedIdentityId::Prop1, FixedIdentityId::Furdui7, FixedIdentityId::Eq12,
          FixedIdentityId::Remark1})
        if (zetam::to_id(f) == id) return f;
    throw std::invalid_argument("unknown fixed identity '" + id + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "series and integral routes to the digamma-integral constants M and M1, "
              "with machine-checked identities";

    py::register_exception<zetam::tolerance_unreachable>(m, "ToleranceUnreachable");

    py::class_<zetam::EvalResult>(m, "EvalResult")
        .def_readonly("value", &zetam::EvalResult::value)
        .def_readonly("err_bound", &zetam::EvalResult::err_bound)
        .def_readonly("terms_used", &zetam::EvalResult::terms_used)
        .def_readonly("method", &zetam::EvalResult::method)
        .def("__repr__", [](const zetam::EvalResult& r) {
            return "<EvalResult " + r.method + " value=" + std::to_string(r.value) + ">";
        });

    py::class_<zetam::IdentityReport>(m, "IdentityReport")
        .def_readonly("id", &zetam::IdentityReport::id)
        .def_readonly("lhs", &zetam::IdentityReport::lhs)
        .def_readonly("rhs", &zetam::IdentityReport::rhs)
        .def_readonly("abs_diff", &zetam::IdentityReport::abs_diff)
        .def_readonly("tolerance", &zetam::IdentityReport::tolerance)
        .def_readonly("passed", &zetam::IdentityReport::passed);

    py::class_<zetam::QuadResult>(m, "QuadResult")
        .def_readonly("value", &zetam::QuadResult::value)
        .def_readonly("err_estimate", &zetam::QuadResult::err_estimate)
        .def_readonly("nodes_used", &zetam::QuadResult::nodes_used)
        .def_readonly("converged", &zetam::QuadResult::converged);

    m.def("digamma", &zetam::digamma, py::arg("x"));
    m.def("log_gamma", &zetam::log_gamma, py::arg("x"));
    m.def("hurwitz_zeta", &zetam::hurwitz_zeta, py::arg("s"), py::arg("a"));
    m.def("riemann_zeta", &zetam::riemann_zeta, py::arg("s"));
    m.def("zeta_minus_one", &zetam::zeta_minus_one, py::arg("n"));
    m.def("zeta_prime", &zetam::zeta_prime, py::arg("p"));
    m.def("ein", &zetam::ein, py::arg("x"));
    m.def("laguerre", &zetam::laguerre, py::arg("n"), py::arg("x"));
    m.def("harmonic", &zetam::harmonic, py::arg("n"));
    m.def("skew_harmonic", &zetam::skew_harmonic, py::arg("n"));
    m.def("s_n", &zetam::s_n, py::arg("n"));

    m.def("registry", [] {
        const auto& r = zetam::registry();
        py::dict d;
        d["gamma"] = r.gamma;
        d["ln2"] = r.ln2;
        d["zeta2"] = r.zeta2;
        d["m_reference"] = r.m_reference;
        d["m1_reference"] = r.m1_reference;
        return d;
    });

    m.def(
        "m_series",
        [](const std::string& method, double tol, long max_terms) {
            return zetam::m_series(m_method_from_id(method), tol, max_terms);
        },
        py::arg("method"), py::arg("tol") = 1e-9, py::arg("max_terms") = 100000);
    m.def(
        "m1_series",
        [](const std::string& method, double tol, long max_terms) {
            return zetam::m1_series(m1_method_from_id(method), tol, max_terms);
        },
        py::arg("method"), py::arg("tol") = 1e-9, py::arg("max_terms") = 100000);
    m.def(
        "fixed_identity",
        [](const std::string& id, double tol) { return zetam::fixed_identity(fixed_from_id(id), tol); },
        py::arg("id"), py::arg("tol") = 1e-9);
    m.def("prop2_check", &zetam::prop2_check, py::arg("p"), py::arg("tol") = 1e-8,
          py::arg("max_terms") = 100000);
    m.def("prop1_partial_sum_check", &zetam::prop1_partial_sum_check, py::arg("m"));

    m.def("m_integral", &zetam::m_integral, py::arg("tol") = 1e-9);
    m.def("m1_integral", &zetam::m1_integral, py::arg("tol") = 1e-9);
    m.def("ein_integral_h", &zetam::ein_integral_h, py::arg("tol") = 1e-9);
    m.def("log_integral_i", &zetam::log_integral_i, py::arg("tol") = 1e-9);
    m.def("remark1_integral", &zetam::remark1_integral, py::arg("tol") = 1e-9);
    m.def("eq21_check", &zetam::eq21_check, py::arg("tol") = 1e-9);

    m.def("laguerre_binomial_check", &zetam::laguerre_binomial_check, py::arg("n"),
          py::arg("tol") = 1e-8);

    m.def("genfun_identity_ids", &zetam::genfun_identity_ids);
    m.def(
        "run_grid",
        [](const std::string& id, std::vector<double> a_values, std::vector<double> x_fractions,
           double tol) {
            zetam::GridSpec g;
            g.a_values = a_values.empty() ? zetam::default_grid().a_values : std::move(a_values);
            g.x_fractions =
                x_fractions.empty() ? zetam::default_grid().x_fractions : std::move(x_fractions);
            const auto rep = zetam::run_grid(id, g, tol);
            py::dict d;
            d["id"] = rep.id;
            d["max_abs_diff"] = rep.max_abs_diff;
            d["tolerance"] = rep.tolerance;
            d["passed"] = rep.passed;
            py::list pts;
            for (const auto& p : rep.points) {
                py::dict pd;
                pd["a"] = p.a;
                pd["x"] = p.x;
                pd["abs_diff"] = p.abs_diff;
                pd["evaluated"] = p.evaluated;
                pd["note"] = p.note;
                pts.append(pd);
            }
            d["points"] = pts;
            return d;
        },
        py::arg("id"), py::arg("a_values") = std::vector<double>{},
        py::arg("x_fractions") = std::vector<double>{}, py::arg("tol") = 1e-9);

    m.def(
        "run_suite",
        [](const std::string& name, double tol, long max_terms, std::uint64_t seed) {
            zetam::RunConfig cfg;
            cfg.tolerance = tol;
            cfg.max_terms = max_terms;
            cfg.seed = seed;
            const auto rep = zetam::run_suite(name, cfg);
            py::dict d;
            d["suite"] = rep.suite;
            d["pass_count"] = rep.pass_count;
            d["fail_count"] = rep.fail_count;
            d["wall_ms"] = rep.wall_ms;
            py::list rows;
            for (const auto& r : rep.results) {
                py::dict rd;
                rd["id"] = r.id;
                rd["lhs"] = r.lhs.value;
                rd["rhs"] = r.rhs.value;
                rd["abs_diff"] = r.abs_diff;
                rd["tol"] = r.tolerance;
                rd["status"] = r.passed ? "pass" : "fail";
                rows.append(rd);
            }
            d["results"] = rows;
            return d;
        },
        py::arg("name"), py::arg("tol") = 1e-9, py::arg("max_terms") = 100000,
        py::arg("seed") = 12345);

#ifdef ZETAM_VERSION
#define ZETAM_STR2(x) #x
#define ZETAM_STR(x) ZETAM_STR2(x)
    m.attr("__version__") = ZETAM_STR(ZETAM_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}
