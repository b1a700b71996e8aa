#pragma once

#include <string>
#include <vector>

#include "zetam/report.hpp"

namespace zetam {

std::vector<std::string> suite_names();  // without "all"

/// Runs one named suite ("core", "m-routes", "identities", "bounds",
/// "genfun", "transforms" or "all") and returns its rows sorted by id.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// Runs every suite in cfg.suites (expanding "all") into a single report.
SuiteReport run_requested(const RunConfig& cfg);

} // namespace zetam
