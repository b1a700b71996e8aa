#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace zetam {

/// A computed value together with an error bound and bookkeeping about how
/// it was obtained. For series with a certified tail policy the bound
/// dominates the true truncation error; for quadrature it is the engine's
/// convergence estimate.
struct EvalResult {
    double value = 0.0;
    double err_bound = 0.0;   // >= 0, absolute
    long terms_used = 0;      // series terms or quadrature nodes
    std::string method;       // stable identity id, e.g. "thm1.a"
};

/// Outcome of checking one identity: both sides, their difference, and the
/// pass/fail verdict at the given tolerance.
struct IdentityReport {
    std::string id;
    EvalResult lhs;
    EvalResult rhs;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;

    static IdentityReport make(std::string id, EvalResult lhs, EvalResult rhs,
                               double tolerance) {
        IdentityReport r;
        r.id = std::move(id);
        r.abs_diff = std::abs(lhs.value - rhs.value);
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.tolerance = tolerance;
        r.passed = r.abs_diff <= tolerance;
        return r;
    }
};

/// One evaluated (a, x) pair of a power-series identity grid.
struct GenfunPoint {
    double a = 0.0;
    double x = 0.0;
    double abs_diff = 0.0;
    bool evaluated = false;
    std::string note;         // skip reason when not evaluated
};

/// Grid summary for one power-series identity.
struct GenfunReport {
    std::string id;
    double worst_a = 0.0;
    double worst_x = 0.0;
    double max_abs_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<GenfunPoint> points;
};

enum class OutputFormat { Text, Json, Csv };

/// Run-wide configuration shared by the CLI and the suite runners.
struct RunConfig {
    double tolerance = 1e-9;        // >= 1e-12
    long max_terms = 100000;        // >= 100
    std::vector<std::string> suites;
    std::string output_path;        // empty: stdout
    OutputFormat output_format = OutputFormat::Text;
    std::uint64_t seed = 12345;     // property-test generator seed
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityReport> results;   // sorted by id
    long wall_ms = 0;
    int pass_count = 0;
    int fail_count = 0;
    RunConfig config;
};

} // namespace zetam
