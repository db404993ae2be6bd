import dataclasses
import math
import time
from fractions import Fraction as F

import numpy as np
import pytest

from mckayfloer.filtration import (
    HamiltonianProfile,
    PiecewisePolynomial,
    capped_quadratic_profile,
    derivative_residual,
    f_primitive,
    filtration_value,
    verify_profile,
)

PERIODS = [math.pi * j for j in (1, 2, 3, 4)]
CAP = 2 * math.pi * math.sqrt(5)  # irrational multiple of 2 pi, above every period


def ramp_profile():
    """h' = R/2 with a linear cutoff on (1, 2)."""
    hp = PiecewisePolynomial([0.0], [[0.0, 0.5]])
    phi = PiecewisePolynomial([0.0, 1.0, 2.0], [[0.0], [-1.0, 1.0], [1.0]])
    return HamiltonianProfile(1.0, 2.0, 2.0, hp, phi, (10.0,), 100.0)


def test_f_primitive_closed_form():
    p = ramp_profile()
    assert f_primitive(p, 1.0) == 0.0
    assert f_primitive(p, 2.0) == pytest.approx(0.75, abs=1e-10)
    # antiderivative of tau/2 from 1 to R
    for r in (1.25, 1.5, 1.9):
        assert f_primitive(p, r) == pytest.approx((r * r - 1) / 4, abs=1e-10)
    assert abs(f_primitive(p, 3.0) - f_primitive(p, 2.0)) <= 1e-10


def test_filtration_value_basic():
    p = capped_quadratic_profile(PERIODS, CAP, 2)
    assert filtration_value(p, 0.5 * p.R0).T == 0.0
    assert abs(filtration_value(p, p.R0).T) <= 1e-12
    assert filtration_value(p, p.R0 + 1e-3).T < 0
    rs = np.linspace(p.R0, p.R_flat + 1, 50)
    ts = [filtration_value(p, r).T for r in rs]
    assert all(b <= a + 1e-12 for a, b in zip(ts, ts[1:]))


def test_f_bounded_by_flat_value():
    p = capped_quadratic_profile(PERIODS, CAP, 2)
    top = f_primitive(p, p.R_flat)
    assert max(f_primitive(p, r) for r in np.linspace(0, p.R_flat + 3, 60)) <= top + 1e-10
    assert abs(f_primitive(p, p.R_flat + 1) - top) <= 1e-10


def test_capped_profile_passes_all_checks():
    start = time.perf_counter()
    p = capped_quadratic_profile(PERIODS, CAP, 2)
    report = verify_profile(p)
    assert report.passed, [c for c in report.checks if not c.passed]
    values = [0.0] + [s.T for s in report.slice_values]
    assert len(report.slice_values) == 4
    assert all(a > b for a, b in zip(values, values[1:]))
    assert time.perf_counter() - start < 1.0


def test_rational_cap_in_turns():
    p = capped_quadratic_profile(PERIODS, F(5, 2) + F(1, 4), 2)
    assert verify_profile(p).passed
    with pytest.raises(ValueError):
        capped_quadratic_profile(PERIODS, F(5, 2), 2)


def test_initial_slope_failure():
    p = capped_quadratic_profile(PERIODS, CAP, 2)
    bad = dataclasses.replace(p, reeb_periods=(0.5,) + p.reeb_periods, _cache={})
    report = verify_profile(bad)
    assert not report["initial_slope"].passed


def test_plateau_on_period_failure():
    p = capped_quadratic_profile(PERIODS, 3 * math.pi, 2)
    report = verify_profile(p)
    assert not report["plateau_not_period"].passed
    assert not report.passed


def test_linear_ramp_not_c1():
    assert not verify_profile(ramp_profile())["knots_c1"].passed


def test_derivative_matches_closed_form():
    p = capped_quadratic_profile(PERIODS, CAP, 2)
    pts = [r for r in np.linspace(p.R0 + 0.01, p.R_flat - 0.01, 40)
           if min(abs(r - k) for k in p.breakpoints()) > 1e-3]
    assert derivative_residual(p, pts) <= 1e-6


def test_piecewise_polynomial_limits():
    with pytest.raises(ValueError):
        PiecewisePolynomial([0.0], [[0, 0, 0, 0, 0, 1]])
    with pytest.raises(ValueError):
        PiecewisePolynomial([1.0, 0.0], [[0], [1]])
