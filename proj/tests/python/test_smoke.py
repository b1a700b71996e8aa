"""Smoke tests for the zetam extension module.

Cross-checks a sample of the special functions against scipy/mpmath where
available, then exercises the main verification entry points end to end.
"""

import json
import math
import os
import subprocess

import pytest

import zetam

GAMMA = 0.5772156649015328606
M_REF = 1.2577468869443696300
M1_REF = 0.8606201928531383640


def test_registry_anchors():
    reg = zetam.registry()
    assert abs(reg["gamma"] - GAMMA) < 1e-15
    assert abs(reg["m_reference"] - M_REF) < 1e-15
    assert abs(reg["m1_reference"] - M1_REF) < 1e-15


def test_special_functions_basic():
    assert abs(zetam.digamma(1.0) + GAMMA) < 1e-13
    assert abs(zetam.log_gamma(3.0) - math.log(2.0)) < 1e-13
    assert abs(zetam.hurwitz_zeta(2.0, 1.0) - math.pi**2 / 6.0) < 1e-12
    assert abs(zetam.harmonic(3) - 11.0 / 6.0) < 1e-15
    assert abs(zetam.skew_harmonic(3) - 5.0 / 6.0) < 1e-15
    assert zetam.laguerre(1, 3.0) == -2.0
    assert zetam.s_n(1) == 1.0
    with pytest.raises(ValueError):
        zetam.digamma(-1.0)


def test_against_scipy():
    scipy_special = pytest.importorskip("scipy.special")
    for x in (0.1, 0.5, 1.7, 12.3, 400.0):
        assert abs(zetam.digamma(x) - scipy_special.psi(x)) < 1e-12
        assert abs(zetam.log_gamma(x) - scipy_special.gammaln(x)) < 1e-11
    for s, a in ((1.5, 0.5), (2.0, 1.0), (7.0, 3.25)):
        assert abs(zetam.hurwitz_zeta(s, a) - scipy_special.zeta(s, a)) < 1e-11


def test_against_mpmath_spot():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    want = float(mpmath.zeta(mpmath.mpf("2.5"), mpmath.mpf("3.7")))
    assert abs(zetam.hurwitz_zeta(2.5, 3.7) - want) < 1e-13


def test_m_routes_agree():
    values = [zetam.m_series(m).value for m in
              ("thm1.a", "thm1.b", "thm1.c", "thm1.d", "thm1.e", "thm1.f", "thm1.g", "thm1.j")]
    values.append(zetam.m_integral().value)
    values.append(zetam.ein_integral_h().value)
    values.append(zetam.log_integral_i().value)
    assert max(values) - min(values) <= 2e-9
    assert all(abs(v - M_REF) <= 2e-9 for v in values)


def test_m1_routes_agree():
    values = [zetam.m1_series(m).value for m in ("prop3.k", "prop3.l", "prop3.m")]
    values.append(zetam.m1_integral().value)
    r = zetam.eq21_check()
    values += [r.lhs.value, r.rhs.value]
    assert max(values) - min(values) <= 2e-9
    assert all(abs(v - M1_REF) <= 2e-9 for v in values)


def test_fixed_identity_and_errors():
    assert zetam.fixed_identity("goldbach").passed
    assert abs(zetam.fixed_identity("goldbach").rhs.value - 1.0) == 0.0
    with pytest.raises(zetam.ToleranceUnreachable):
        zetam.m_series("thm1.a", 1e-12, 10)


def test_suites_pass():
    for name in ("bounds", "identities"):
        rep = zetam.run_suite(name)
        assert rep["fail_count"] == 0
        assert rep["pass_count"] > 0


def test_grid_runner():
    rep = zetam.run_grid("eq8", [1.0, 2.0], [0.5, 0.9])
    assert rep["passed"]
    evaluated = [p for p in rep["points"] if p["evaluated"]]
    assert len(evaluated) == 4


def test_cli_roundtrip(tmp_path):
    cli = os.environ.get("ZETAM_CLI")
    if not cli or not os.path.exists(cli):
        pytest.skip("ZETAM_CLI not set")
    out = tmp_path / "report.json"
    proc = subprocess.run(
        [cli, "verify", "--suite", "identities", "--format", "json", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    rep = json.loads(out.read_text())
    assert rep["suite"] == "identities"
    assert all(row["status"] == "pass" for row in rep["results"])
