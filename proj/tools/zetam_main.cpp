#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetam/constants.hpp"
#include "zetam/errors.hpp"
#include "zetam/genfun.hpp"
#include "zetam/quadrature.hpp"
#include "zetam/report_io.hpp"
#include "zetam/series.hpp"
#include "zetam/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnreachable = 3;

struct Options {
    zetam::RunConfig cfg;
    std::string config_path;
    std::string format_name = "text";
    bool format_set = false, tol_set = false, max_terms_set = false, out_set = false,
         seed_set = false;
};

void apply_config_file(Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + opt.config_path);
    nlohmann::json j;
    in >> j;
    // CLI flags override file values
    if (!opt.tol_set && j.contains("tolerance")) opt.cfg.tolerance = j["tolerance"].get<double>();
    if (!opt.max_terms_set && j.contains("max_terms"))
        opt.cfg.max_terms = j["max_terms"].get<long>();
    if (opt.cfg.suites.empty() && j.contains("suites"))
        opt.cfg.suites = j["suites"].get<std::vector<std::string>>();
    if (!opt.out_set && j.contains("output_path"))
        opt.cfg.output_path = j["output_path"].get<std::string>();
    if (!opt.format_set && j.contains("output_format"))
        opt.format_name = j["output_format"].get<std::string>();
    if (!opt.seed_set && j.contains("seed")) opt.cfg.seed = j["seed"].get<std::uint64_t>();
}

void validate(const zetam::RunConfig& cfg) {
    if (!(cfg.tolerance >= 1e-12))
        throw CLI::ValidationError("--tol", "tolerance must be >= 1e-12");
    if (cfg.max_terms < 100) throw CLI::ValidationError("--max-terms", "must be >= 100");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        out << text;
    }
}

struct ComputeRow {
    std::string method;
    double value;
    double err_bound;
    long terms;
    double deviation;
};

ComputeRow compute_route(const std::string& constant, const std::string& method, double tol,
                         long max_terms) {
    using namespace zetam;
    const auto& reg = registry();
    auto from_eval = [&](const EvalResult& r, double ref) {
        return ComputeRow{r.method, r.value, r.err_bound, r.terms_used, std::abs(r.value - ref)};
    };
    auto from_quad = [&](const std::string& id, const QuadResult& q, double ref) {
        return ComputeRow{id, q.value, q.err_estimate, q.nodes_used, std::abs(q.value - ref)};
    };
    if (constant == "M") {
        static const std::map<std::string, MMethod> kSeries = {
            {"thm1.a", MMethod::A}, {"thm1.b", MMethod::B}, {"thm1.c", MMethod::C},
            {"thm1.d", MMethod::D}, {"thm1.e", MMethod::E}, {"thm1.f", MMethod::F},
            {"thm1.g", MMethod::G}, {"thm1.j", MMethod::J}};
        if (auto it = kSeries.find(method); it != kSeries.end())
            return from_eval(m_series(it->second, tol, max_terms), reg.m_reference);
        if (method == "m.integral") return from_quad(method, m_integral(tol), reg.m_reference);
        if (method == "thm1.h") return from_quad(method, ein_integral_h(tol), reg.m_reference);
        if (method == "thm1.i") return from_quad(method, log_integral_i(tol), reg.m_reference);
    } else {
        static const std::map<std::string, M1Method> kSeries = {
            {"prop3.k", M1Method::K}, {"prop3.l", M1Method::L}, {"prop3.m", M1Method::M_}};
        if (auto it = kSeries.find(method); it != kSeries.end())
            return from_eval(m1_series(it->second, tol, max_terms), reg.m1_reference);
        if (method == "m1.integral") return from_quad(method, m1_integral(tol), reg.m1_reference);
        if (method == "eq21.lhs" || method == "eq21.rhs") {
            IdentityReport r = eq21_check(tol);
            const EvalResult& side = method == "eq21.lhs" ? r.lhs : r.rhs;
            return ComputeRow{method, side.value, side.err_bound, side.terms_used,
                              std::abs(side.value - reg.m1_reference)};
        }
    }
    throw CLI::ValidationError("--method", "unknown method '" + method + "' for " + constant);
}

std::vector<std::string> all_methods(const std::string& constant) {
    if (constant == "M")
        return {"thm1.a", "thm1.b", "thm1.c", "thm1.d", "thm1.e", "thm1.f", "thm1.g", "thm1.j",
                "m.integral", "thm1.h", "thm1.i"};
    return {"prop3.k", "prop3.l", "prop3.m", "m1.integral", "eq21.lhs", "eq21.rhs"};
}

int cmd_compute(const std::string& constant, const std::string& method, const Options& opt) {
    std::vector<ComputeRow> rows;
    if (method == "all") {
        for (const auto& m : all_methods(constant))
            rows.push_back(compute_route(constant, m, opt.cfg.tolerance, opt.cfg.max_terms));
    } else {
        rows.push_back(compute_route(constant, method, opt.cfg.tolerance, opt.cfg.max_terms));
    }

    std::ostringstream os;
    const auto fmt = zetam::parse_format(opt.format_name);
    if (fmt == zetam::OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"method", r.method},
                         {"value", r.value},
                         {"err_bound", r.err_bound},
                         {"terms", r.terms},
                         {"deviation", r.deviation}});
        os << j.dump(2) << "\n";
    } else if (fmt == zetam::OutputFormat::Csv) {
        os << "method,value,err_bound,terms,deviation\n";
        for (const auto& r : rows) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s,%.17g,%.3g,%ld,%.3g\n", r.method.c_str(), r.value,
                          r.err_bound, r.terms, r.deviation);
            os << buf;
        }
    } else {
        char buf[200];
        std::snprintf(buf, sizeof(buf), "%-12s %-22s %-10s %-8s %s\n", "method", "value",
                      "err_bound", "terms", "dev_from_ref");
        os << buf;
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof(buf), "%-12s %-22.17g %-10.3g %-8ld %.3g\n",
                          r.method.c_str(), r.value, r.err_bound, r.terms, r.deviation);
            os << buf;
        }
    }
    emit(os.str(), opt.cfg.output_path);
    return kExitPass;
}

int cmd_verify(const Options& opt) {
    zetam::SuiteReport rep = zetam::run_requested(opt.cfg);
    emit(zetam::render(rep, zetam::parse_format(opt.format_name)), opt.cfg.output_path);
    return rep.fail_count == 0 ? kExitPass : kExitFail;
}

int cmd_grid(const std::string& id, const std::vector<double>& a_list,
             const std::vector<double>& frac_list, const Options& opt) {
    const auto known = zetam::genfun_identity_ids();
    if (std::find(known.begin(), known.end(), id) == known.end())
        throw CLI::ValidationError("identity", "unknown genfun identity '" + id + "'");
    zetam::GridSpec grid;
    grid.a_values = a_list.empty() ? zetam::default_grid().a_values : a_list;
    grid.x_fractions = frac_list.empty() ? zetam::default_grid().x_fractions : frac_list;
    zetam::GenfunReport rep = zetam::run_grid(id, grid, opt.cfg.tolerance, opt.cfg.max_terms);

    std::ostringstream os;
    const auto fmt = zetam::parse_format(opt.format_name);
    if (fmt == zetam::OutputFormat::Json) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : rep.points)
            pts.push_back({{"a", p.a},
                           {"x", p.x},
                           {"abs_diff", p.abs_diff},
                           {"status", p.evaluated ? (p.abs_diff <= rep.tolerance ? "pass" : "fail")
                                                  : "skipped"},
                           {"note", p.note}});
        nlohmann::json j{{"id", rep.id},
                         {"tolerance", rep.tolerance},
                         {"max_abs_diff", rep.max_abs_diff},
                         {"worst_a", rep.worst_a},
                         {"worst_x", rep.worst_x},
                         {"status", rep.passed ? "pass" : "fail"},
                         {"points", pts}};
        os << j.dump(2) << "\n";
    } else if (fmt == zetam::OutputFormat::Csv) {
        os << "id,a,x,abs_diff,tol,status\n";
        for (const auto& p : rep.points) {
            char buf[200];
            std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.3g,%.3g,%s\n", rep.id.c_str(), p.a,
                          p.x, p.abs_diff, rep.tolerance,
                          p.evaluated ? (p.abs_diff <= rep.tolerance ? "pass" : "fail")
                                      : "skipped");
            os << buf;
        }
    } else {
        os << "grid " << rep.id << "  tol=" << rep.tolerance << "\n";
        for (const auto& p : rep.points) {
            char buf[360];
            if (p.evaluated && p.note.empty())
                std::snprintf(buf, sizeof(buf), "  a=%-8g x=%-10g |diff|=%-10.3g %s\n", p.a, p.x,
                              p.abs_diff, p.abs_diff <= rep.tolerance ? "pass" : "FAIL");
            else if (p.evaluated)
                std::snprintf(buf, sizeof(buf), "  a=%-8g x=%-10g |diff|=%-10.3g %s [%s]\n", p.a,
                              p.x, p.abs_diff, p.abs_diff <= rep.tolerance ? "pass" : "FAIL",
                              p.note.c_str());
            else
                std::snprintf(buf, sizeof(buf), "  a=%-8g x=%-10g skipped (%s)\n", p.a, p.x,
                              p.note.c_str());
            os << buf;
        }
    }
    emit(os.str(), opt.cfg.output_path);
    bool any_fail = false;
    for (const auto& p : rep.points)
        if (p.evaluated && p.abs_diff > rep.tolerance) any_fail = true;
    return any_fail ? kExitFail : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of harmonic-number / zeta-value series identities"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--tol", opt.cfg.tolerance, "target tolerance (default 1e-9)")
        ->each([&](const std::string&) { opt.tol_set = true; });
    app.add_option("--max-terms", opt.cfg.max_terms, "series term cap (default 1e5)")
        ->each([&](const std::string&) { opt.max_terms_set = true; });
    app.add_option("--format", opt.format_name, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->each([&](const std::string&) { opt.format_set = true; });
    app.add_option("--out", opt.cfg.output_path, "write output to PATH")
        ->each([&](const std::string&) { opt.out_set = true; });
    app.add_option("--config", opt.config_path, "JSON config file (flags take precedence)");
    app.add_option("--seed", opt.cfg.seed, "seed for the property-test rows")
        ->each([&](const std::string&) { opt.seed_set = true; });

    auto* compute = app.add_subcommand("compute", "compute M or M1 by one or all routes");
    std::string constant, method = "all";
    compute->add_option("constant", constant, "M or M1")
        ->required()
        ->check(CLI::IsMember({"M", "M1"}));
    compute->add_option("--method", method, "route id or 'all'");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", opt.cfg.suites,
                       "core, m-routes, identities, bounds, genfun, transforms, all");

    auto* gridcmd = app.add_subcommand("grid", "run one power-series identity on a grid");
    std::string grid_id;
    std::vector<double> a_list, frac_list;
    gridcmd->add_option("identity", grid_id, "genfun identity id (e.g. eq8)")->required();
    gridcmd->add_option("--a", a_list, "a values")->delimiter(',');
    gridcmd->add_option("--xfrac", frac_list, "x fractions of the radius")->delimiter(',');

    try {
        app.parse(argc, argv);
        apply_config_file(opt);
        opt.cfg.output_format = zetam::parse_format(opt.format_name);
        validate(opt.cfg);
        if (compute->parsed()) return cmd_compute(constant, method, opt);
        if (verify->parsed()) return cmd_verify(opt);
        return cmd_grid(grid_id, a_list, frac_list, opt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints message/help
        return kExitUsage;
    } catch (const zetam::tolerance_unreachable& e) {
        std::cerr << "tolerance unreachable: " << e.what() << "\n";
        return kExitUnreachable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
