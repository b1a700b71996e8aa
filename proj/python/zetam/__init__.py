"""Series and integral routes to the digamma-integral constants M and M1.

The heavy lifting lives in the compiled ``zetam._core`` extension; this
package just re-exports its surface.
"""

from ._core import (  # noqa: F401
    EvalResult,
    IdentityReport,
    QuadResult,
    ToleranceUnreachable,
    __version__,
    digamma,
    ein,
    ein_integral_h,
    eq21_check,
    fixed_identity,
    genfun_identity_ids,
    harmonic,
    hurwitz_zeta,
    laguerre,
    laguerre_binomial_check,
    log_gamma,
    log_integral_i,
    m1_integral,
    m1_series,
    m_integral,
    m_series,
    prop1_partial_sum_check,
    prop2_check,
    registry,
    remark1_integral,
    riemann_zeta,
    run_grid,
    run_suite,
    s_n,
    skew_harmonic,
    zeta_minus_one,
    zeta_prime,
)

__all__ = [
    "EvalResult",
    "IdentityReport",
    "QuadResult",
    "ToleranceUnreachable",
    "digamma",
    "ein",
    "ein_integral_h",
    "eq21_check",
    "fixed_identity",
    "genfun_identity_ids",
    "harmonic",
    "hurwitz_zeta",
    "laguerre",
    "laguerre_binomial_check",
    "log_gamma",
    "log_integral_i",
    "m1_integral",
    "m1_series",
    "m_integral",
    "m_series",
    "prop1_partial_sum_check",
    "prop2_check",
    "registry",
    "remark1_integral",
    "riemann_zeta",
    "run_grid",
    "run_suite",
    "s_n",
    "skew_harmonic",
    "zeta_minus_one",
    "zeta_prime",
]
