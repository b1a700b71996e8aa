#pragma once

namespace zetam {

/// Vetted high-precision anchors used to cross-check every computed route.
/// gamma, ln2 and zeta2 are validated at first use against the
/// implementation (-digamma(1), log_gamma(3), hurwitz_zeta(2,1)); a
/// mismatch beyond 1e-12 throws, since it means the special-function core
/// is broken and no downstream verdict can be trusted.
struct ConstantsRegistry {
    double gamma;          // Euler's constant
    double ln2;
    double zeta2;          // pi^2/6
    double m_reference;    // sum (1/n) ln(1+1/n)
    double m1_reference;   // sum (1/n) ln(1+1/(n+1))
};

const ConstantsRegistry& registry();

} // namespace zetam
