#include "zetam/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zetam {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["tolerance"] = cfg.tolerance;
    j["max_terms"] = cfg.max_terms;
    j["suites"] = cfg.suites;
    j["output_format"] = format_name(cfg.output_format);
    j["seed"] = cfg.seed;
    return j;
}

} // namespace

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "text";
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string to_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["config"] = config_json(rep.config);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.results) {
        nlohmann::json row;
        row["id"] = r.id;
        row["lhs"] = r.lhs.value;
        row["rhs"] = r.rhs.value;
        row["abs_diff"] = r.abs_diff;
        row["tol"] = r.tolerance;
        row["status"] = r.passed ? "pass" : "fail";
        rows.push_back(row);
    }
    j["results"] = rows;
    j["wall_ms"] = rep.wall_ms;
    return j.dump(2) + "\n";
}

std::string to_csv(const SuiteReport& rep) {
    std::ostringstream os;
    os << "id,lhs,rhs,abs_diff,tol,status\n";
    for (const auto& r : rep.results) {
        os << r.id << ',' << fmt_double(r.lhs.value) << ',' << fmt_double(r.rhs.value) << ','
           << fmt_double(r.abs_diff) << ',' << fmt_double(r.tolerance) << ','
           << (r.passed ? "pass" : "fail") << "\n";
    }
    return os.str();
}

std::string to_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite: " << rep.suite << "  (tol=" << fmt_double(rep.config.tolerance)
       << ", wall=" << rep.wall_ms << " ms)\n";
    for (const auto& r : rep.results) {
        os << (r.passed ? "  [pass] " : "  [FAIL] ") << r.id << "  |diff|=" << fmt_double(r.abs_diff)
           << "  tol=" << fmt_double(r.tolerance) << "\n";
    }
    os << "  " << rep.pass_count << " passed, " << rep.fail_count << " failed\n";
    return os.str();
}

std::string render(const SuiteReport& rep, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return to_json(rep);
        case OutputFormat::Csv: return to_csv(rep);
        case OutputFormat::Text: return to_text(rep);
    }
    return to_text(rep);
}

std::map<std::string, bool> classifications_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::map<std::string, bool> out;
    for (const auto& row : j.at("results"))
        out[row.at("id").get<std::string>()] = row.at("status").get<std::string>() == "pass";
    return out;
}

} // namespace zetam
