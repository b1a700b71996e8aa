#include "zetam/constants.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "zetam/special.hpp"

namespace zetam {

namespace {

// 25-digit decimal literals, rounded to nearest double on parse.
constexpr double kGamma = 0.5772156649015328606065121;
constexpr double kLn2 = 0.6931471805599453094172321;
constexpr double kZeta2 = 1.6449340668482264364724152;
// sum (1/n) ln(1+1/n), 25-digit value
constexpr double kM = 1.2577468869443696300098998;
// sum (1/n) ln(1+1/(n+1)), 25-digit value
constexpr double kM1 = 0.8606201928531383640434949;

void check(const char* name, double stored, double computed) {
    if (std::abs(stored - computed) > 1e-12) {
        std::ostringstream os;
        os << "constants registry: stored " << name << " = " << stored
           << " disagrees with implementation value " << computed
           << " beyond 1e-12; special-function core is broken";
        throw std::logic_error(os.str());
    }
}

} // namespace

const ConstantsRegistry& registry() {
    static const ConstantsRegistry reg = [] {
        ConstantsRegistry r{kGamma, kLn2, kZeta2, kM, kM1};
        check("gamma", r.gamma, -digamma(1.0));
        check("ln2", r.ln2, log_gamma(3.0));
        check("zeta2", r.zeta2, hurwitz_zeta(2.0, 1.0));
        return r;
    }();
    return reg;
}

} // namespace zetam
