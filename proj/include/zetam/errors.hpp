#pragma once

#include <stdexcept>
#include <string>

namespace zetam {

/// Thrown when a truncation policy cannot certify the requested tolerance
/// within the configured maximum term count.
class tolerance_unreachable : public std::runtime_error {
public:
    tolerance_unreachable(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_value(best), best_bound(bound) {}

    double best_value;
    double best_bound;
};

} // namespace zetam
