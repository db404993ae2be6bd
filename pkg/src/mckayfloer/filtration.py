"""Radial Hamiltonian profiles and the filtration functional T.

A profile is given by its slope h'(R) and a cutoff phi(R), both piecewise
polynomial.  With f(R) the integral of phi' h' from 0 to R, an orbit slice
at radius rho gets the value T(rho) = -phi(rho) h'(rho) + f(rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import QuadratureFailure

QUAD_TOL = 1e-10
CHECK_TOL = 1e-9


class PiecewisePolynomial:
    """Polynomial pieces on [knots[i], knots[i+1]); the last piece extends to infinity."""

    def __init__(self, knots, pieces):
        self.knots = tuple(float(k) for k in knots)
        self.pieces = tuple(p if isinstance(p, Polynomial) else Polynomial(p) for p in pieces)
        if len(self.knots) != len(self.pieces):
            raise ValueError("need one knot (left endpoint) per piece")
        if any(b <= a for a, b in zip(self.knots, self.knots[1:])):
            raise ValueError("knots must increase")
        if any(p.degree() > 4 for p in self.pieces):
            raise ValueError("pieces are limited to degree 4")

    def _piece(self, x: float) -> Polynomial:
        i = int(np.searchsorted(self.knots, x, side="right")) - 1
        return self.pieces[max(i, 0)]

    def __call__(self, x):
        if np.ndim(x):
            return np.array([self(float(v)) for v in x])
        return float(self._piece(x)(x))

    def deriv(self) -> "PiecewisePolynomial":
        return PiecewisePolynomial(self.knots, [p.deriv() for p in self.pieces])

    def jumps(self):
        """(knot, left value, right value) at each interior knot."""
        for i in range(1, len(self.knots)):
            x = self.knots[i]
            yield x, float(self.pieces[i - 1](x)), float(self.pieces[i](x))


@dataclass
class HamiltonianProfile:
    R0: float
    R1: float
    R_flat: float
    h_prime: PiecewisePolynomial
    phi: PiecewisePolynomial
    reeb_periods: tuple[float, ...]
    plateau_slope: float
    group_order: int | None = None
    plateau_turns: Fraction | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not 0 < self.R0 < self.R1 <= self.R_flat:
            raise ValueError("need 0 < R0 < R1 <= R_flat")

    @property
    def h_second(self) -> PiecewisePolynomial:
        if "h2" not in self._cache:
            self._cache["h2"] = self.h_prime.deriv()
        return self._cache["h2"]

    @property
    def phi_prime(self) -> PiecewisePolynomial:
        if "dphi" not in self._cache:
            self._cache["dphi"] = self.phi.deriv()
        return self._cache["dphi"]

    def breakpoints(self) -> list[float]:
        return sorted(set(self.h_prime.knots) | set(self.phi.knots) | {0.0})


@dataclass(frozen=True)
class FilterValue:
    rho: float
    T: float


@dataclass(frozen=True)
class ProfileCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class ProfileReport:
    checks: tuple[ProfileCheck, ...]
    slice_values: tuple[FilterValue, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> ProfileCheck:
        return next(c for c in self.checks if c.name == name)


def _integrate(profile: HamiltonianProfile, a: float, b: float) -> float:
    dphi, hp = profile.phi_prime, profile.h_prime
    val, err = quad(lambda t: dphi(t) * hp(t), a, b, epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > QUAD_TOL:
        raise QuadratureFailure(f"quadrature error {err:.2e} on [{a}, {b}]")
    return val


def f_primitive(profile: HamiltonianProfile, R: float) -> float:
    """Integral of phi' h' over [0, R], split at the knots."""
    if R < 0:
        raise ValueError("R must be nonnegative")
    if R <= profile.R0:
        return 0.0
    stops = [x for x in profile.breakpoints() if x >= profile.R0]
    segments = profile._cache.setdefault("segments", {})
    total = 0.0
    for a, b in zip(stops, stops[1:]):
        if a >= R or a >= profile.R_flat:
            break
        if b <= R:
            if (a, b) not in segments:
                segments[(a, b)] = _integrate(profile, a, b)
            total += segments[(a, b)]
        else:
            total += _integrate(profile, a, R)
    return total


def filtration_value(profile: HamiltonianProfile, rho: float) -> FilterValue:
    t = -profile.phi(rho) * profile.h_prime(rho) + f_primitive(profile, rho)
    return FilterValue(rho, t)


# -- profile construction -----------------------------------------------------

def _smoothstep(r0: float, r1: float) -> PiecewisePolynomial:
    w = r1 - r0
    t = Polynomial([-r0 / w, 1 / w])
    return PiecewisePolynomial([0.0, r0, r1], [Polynomial([0.0]), 3 * t**2 - 2 * t**3, Polynomial([1.0])])


def capped_quadratic_profile(periods, cap, group_order: int | None = None) -> HamiltonianProfile:
    """h = R^2/4 with slope capped at `cap`, cut off by a smoothstep.

    `periods` are Reeb periods in radians.  `cap` is either a Fraction
    (turns, must avoid multiples of 1/|G|) or a float in radians.  The slope
    h' = R/2 is bent over [a, a + 1] by a quadratic to reach `cap` with zero
    second derivative, and R0 is the minimal period so h'(R0) is half of it.
    """
    periods = tuple(sorted(float(p) for p in periods))
    turns = None
    if isinstance(cap, Fraction) or isinstance(cap, int):
        turns = Fraction(cap)
        if group_order and (turns * group_order).denominator == 1:
            raise ValueError(f"cap {turns} turns is a multiple of 1/{group_order}")
        cap = 2 * math.pi * turns
    cap = float(cap)
    a = 2 * cap - 0.5
    r_flat = a + 1.0
    r0 = periods[0]
    if not r0 < a:
        raise ValueError("cap is too small relative to the minimal period")
    x = Polynomial([-a, 1.0])  # R - a
    bend = Polynomial([a / 2]) + 0.5 * x - 0.25 * x**2
    hp = PiecewisePolynomial([0.0, a, r_flat], [Polynomial([0.0, 0.5]), bend, Polynomial([cap])])
    return HamiltonianProfile(r0, r_flat, r_flat, hp, _smoothstep(r0, r_flat), periods, cap,
                              group_order, turns)


# -- verification -----------------------------------------------------------

def _grid(profile: HamiltonianProfile, count: int = 400) -> np.ndarray:
    hi = profile.R_flat + 1.0
    pts = set(np.linspace(0.0, hi, count).tolist()) | set(profile.breakpoints())
    return np.array(sorted(p for p in pts if 0.0 <= p <= hi))


def _crossing(profile: HamiltonianProfile, tau: float) -> float | None:
    """Radius in (R0, R_flat) where h' equals tau, if any."""
    g = lambda r: profile.h_prime(r) - tau  # noqa: E731
    lo, hi = profile.R0, profile.R_flat
    if g(lo) >= 0 or g(hi) <= 0:
        return None
    return brentq(g, lo, hi, xtol=1e-14)


def verify_profile(profile: HamiltonianProfile, tol: float = CHECK_TOL) -> ProfileReport:
    checks = []

    def record(name, ok, witness=""):
        checks.append(ProfileCheck(name, bool(ok), witness))

    hp, h2, phi, dphi = profile.h_prime, profile.h_second, profile.phi, profile.phi_prime
    tau_min = profile.reeb_periods[0] if profile.reeb_periods else math.inf
    s0 = hp(profile.R0)
    record("initial_slope", 0 < s0 < tau_min, f"h'(R0)={s0:.6g}, min period={tau_min:.6g}")

    grid = _grid(profile)
    h2v = h2(grid)
    worst = int(np.argmin(h2v))
    record("convex", h2v[worst] >= -tol and h2(profile.R0) > 0,
           f"min h''={h2v[worst]:.3g} at R={grid[worst]:.6g}")

    cap = profile.plateau_slope
    near = min((abs(cap - t) for t in profile.reeb_periods), default=math.inf)
    ok = near > tol
    witness = f"distance to nearest period {near:.3g}"
    if profile.group_order:
        if profile.plateau_turns is not None:
            ok = ok and (profile.plateau_turns * profile.group_order).denominator != 1
        else:
            unit = 2 * math.pi / profile.group_order
            off = abs(cap / unit - round(cap / unit)) * unit
            ok = ok and off > tol
            witness += f", distance to (2pi/|G|)Z {off:.3g}"
    record("plateau_not_period", ok, witness)

    pv, dpv = phi(grid), dphi(grid)
    inside = (grid > profile.R0 + tol) & (grid < profile.R1 - tol)
    ok = (np.all(pv >= -tol) and np.all(pv <= 1 + tol)
          and np.all(dpv >= -tol)
          and np.all(np.abs(pv[grid <= profile.R0]) <= tol)
          and np.all(np.abs(pv[grid >= profile.R_flat] - 1) <= tol)
          and np.all(dpv[inside] > 0))
    record("cutoff", ok, "phi in [0,1], nondecreasing, phi' > 0 on (R0, R1)")

    gaps = []
    for pp in (hp, phi):
        for fn in (pp, pp.deriv()):
            gaps.extend(abs(left - right) for _, left, right in fn.jumps())
    record("knots_c1", max(gaps, default=0.0) <= tol, f"largest jump {max(gaps, default=0.0):.3g}")

    tv = np.array([filtration_value(profile, r).T for r in grid])
    before = tv[grid <= profile.R0]
    after = tv[grid > profile.R0]
    record("T_zero_before_R0", np.all(np.abs(before) <= tol), f"max |T| = {np.max(np.abs(before)):.3g}")
    record("T_negative", np.all(after < 0), f"max T after R0 = {np.max(after):.3g}")
    rise = np.max(np.diff(tv))
    record("T_monotone", rise <= tol, f"largest increase {rise:.3g}")

    slices = []
    strict = True
    witness = []
    for tau in profile.reeb_periods:
        rho = _crossing(profile, tau)
        if rho is None:
            continue
        delta = 1e-3
        lo, mid, hi = (filtration_value(profile, r).T for r in (rho - delta, rho, rho + delta))
        speed = phi(rho) * h2(rho)
        if not (lo > mid > hi and speed > 0):
            strict = False
        witness.append(f"tau={tau:.6g} rho={rho:.6g} T'={-speed:.3g}")
        slices.append(FilterValue(rho, mid))
    record("strict_near_periods", strict, "; ".join(witness))

    values = [0.0] + [s.T for s in slices]
    record("slice_ordering", all(a > b for a, b in zip(values, values[1:])),
           " > ".join(f"{v:.6g}" for v in values))
    return ProfileReport(tuple(checks), tuple(slices))


def derivative_residual(profile: HamiltonianProfile, points, step: float = 1e-5) -> float:
    """Largest gap between a central difference of T and -phi h''."""
    worst = 0.0
    for r in points:
        fd = (filtration_value(profile, r + step).T - filtration_value(profile, r - step).T) / (2 * step)
        worst = max(worst, abs(fd + profile.phi(r) * profile.h_second(r)))
    return worst
