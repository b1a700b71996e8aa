#pragma once

#include <map>
#include <string>

#include "zetam/report.hpp"

namespace zetam {

std::string format_name(OutputFormat f);
OutputFormat parse_format(const std::string& name);

/// Serializes one suite report. Rows are already sorted by id; doubles are
/// emitted with round-trip precision so output is byte-stable.
std::string to_json(const SuiteReport& rep);
std::string to_csv(const SuiteReport& rep);
std::string to_text(const SuiteReport& rep);
std::string render(const SuiteReport& rep, OutputFormat f);

/// Reads back a JSON report and returns id -> passed, used to confirm that
/// a written report reproduces the original classification.
std::map<std::string, bool> classifications_from_json(const std::string& text);

} // namespace zetam
