"""Conley-Zehnder indices of rotation paths and Morse-Bott orbit families.

Angles are measured in turns: s turns is the angle 2 pi s.  The grading is
mu = n - CZ, shifted by (dimB + 1)/2 for a Morse-Bott family of dimension dimB.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalAssertion, ParityViolation, WeightSumMismatch


@dataclass(frozen=True)
class IndexRecord:
    cz: int
    mu: int
    bound: Fraction | None = None

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.mu <= self.bound


def w_function(s) -> int:
    """Index of the loop exp(2 pi i t), t in [0, s]: 2 floor(s) + 1 off the integers, 2s on them."""
    s = Fraction(s)
    if s.denominator == 1:
        return 2 * s.numerator
    return 2 * math.floor(s) + 1


def cz_rotation_path(turns) -> int:
    return sum(w_function(s) for s in turns)


def cz_morse_bott(n: int, age: int, sum_smaller_dims: int, dimB: int, k: int = 0) -> IndexRecord:
    """CZ and mu of the family B_{g, l + 2 pi k}."""
    if dimB % 2 == 0:
        raise ParityViolation(f"Morse-Bott dimension {dimB} must be odd")
    if age < 0 or sum_smaller_dims < 0 or k < 0:
        raise ValueError("age, sum_smaller_dims and k must be nonnegative")
    half = (dimB + 1) // 2
    cz = n - 2 * age + 2 * sum_smaller_dims + half + 2 * k * n
    mu = 2 * age - 2 * sum_smaller_dims - dimB - 1 - 2 * k * n
    if mu != n - cz - half:
        raise InternalAssertion("grading does not match the Morse-Bott shift of CZ")
    return IndexRecord(cz, mu)


def constant_orbit_bound(weights, slope, n: int | None = None) -> IndexRecord:
    """Index of a constant orbit at a weight-(m_j) fixed locus for slope `slope` * pi.

    Returns CZ = sum W(-slope * pi * m_j), mu = n - CZ and checks mu <= (3 - slope) n.
    """
    weights = [int(m) for m in weights]
    if n is None:
        n = len(weights)
    if sum(weights) != -n:
        raise WeightSumMismatch(f"weights sum to {sum(weights)}, expected {-n}")
    slope = Fraction(slope)
    cz = sum(w_function(-slope * m / 2) for m in weights)
    mu = n - cz
    bound = (3 - slope) * n
    if mu > bound:
        raise InternalAssertion(f"grading {mu} exceeds the weight bound {bound}")
    return IndexRecord(cz, mu, bound)
