#include <doctest.h>

#include <stdexcept>

#include "zetam/report_io.hpp"
#include "zetam/suites.hpp"

using namespace zetam;

TEST_CASE("JSON report round-trip reproduces the classification") {
    RunConfig cfg;
    cfg.suites = {"identities"};
    SuiteReport rep = run_suite("identities", cfg);
    REQUIRE(!rep.results.empty());

    const std::string text = to_json(rep);
    const auto cls = classifications_from_json(text);
    CHECK(cls.size() == rep.results.size());
    for (const auto& r : rep.results) {
        CAPTURE(r.id);
        REQUIRE(cls.count(r.id) == 1);
        CHECK(cls.at(r.id) == r.passed);
    }
}

TEST_CASE("rendered output is byte-stable across runs") {
    RunConfig cfg;
    SuiteReport a = run_suite("bounds", cfg);
    SuiteReport b = run_suite("bounds", cfg);
    a.wall_ms = b.wall_ms = 0;
    CHECK(to_json(a) == to_json(b));
    CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("rows are sorted by id and counted") {
    RunConfig cfg;
    SuiteReport rep = run_suite("bounds", cfg);
    for (std::size_t i = 1; i < rep.results.size(); ++i)
        CHECK(rep.results[i - 1].id <= rep.results[i].id);
    CHECK(rep.pass_count + rep.fail_count == static_cast<int>(rep.results.size()));
    CHECK(rep.fail_count == 0);
}

TEST_CASE("csv has the documented header and one line per row") {
    RunConfig cfg;
    SuiteReport rep = run_suite("core", cfg);
    const std::string csv = to_csv(rep);
    CHECK(csv.rfind("id,lhs,rhs,abs_diff,tol,status\n", 0) == 0);
    const auto lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == static_cast<long>(rep.results.size()) + 1);
}

TEST_CASE("unknown suite names are rejected") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
}

TEST_CASE("every named suite passes at the default configuration") {
    RunConfig cfg;
    for (const std::string& name : suite_names()) {
        CAPTURE(name);
        SuiteReport rep = run_suite(name, cfg);
        CHECK(rep.fail_count == 0);
        CHECK(rep.pass_count > 0);
    }
}
