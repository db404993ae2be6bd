"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of order N is stored as integer numerators over a common positive
denominator, in the power basis 1, z, ..., z^(phi(N)-1) after reduction
modulo the N-th cyclotomic polynomial.  The reduced vector is unique, so
equality inside one field is a tuple comparison.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DivisionByZero, PromotionOverflow

#: Largest order reachable through automatic promotion.
MAX_ORDER = 10**6


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    sign, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if m > 1 else sign


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients, monic divisor)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row j is the reduced integer vector of z^j, 0 <= j < n
    phi = euler_phi(n)
    cp = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cp[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise PromotionOverflow(f"cyclotomic order {n} exceeds cap {MAX_ORDER}")


def _reduce(order: int, wide: list[int]) -> list[int]:
    """Reduce a length-`order` vector over powers of z to the canonical basis."""
    phi = euler_phi(order)
    out = wide[:phi]
    if len(wide) > phi:
        table = _power_table(order)
        for k in range(phi, len(wide)):
            c = wide[k]
            if c:
                row = table[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
    return out


class Cyclotomic:
    """An immutable element of Q(zeta_N)."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, num, den: int = 1, _normalized: bool = False):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self._hash = None
        if _normalized:
            self._num, self._den = num, den
            return
        num = list(num)
        phi = euler_phi(order)
        if len(num) != phi:
            wide = [0] * order
            for j, c in enumerate(num):
                wide[j % order] += c
            num = _reduce(order, wide)
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num, den = [-c for c in num], -den
        g = math.gcd(den, *num)
        if g > 1:
            num, den = [c // g for c in num], den // g
        self._num = tuple(num)
        self._den = den

    # -- construction -------------------------------------------------------
    @classmethod
    def root(cls, order: int, k: int = 1) -> "Cyclotomic":
        """zeta_order ** k."""
        _check_order(order)
        return cls(order, _power_table(order)[k % order], 1, _normalized=True)

    @classmethod
    def rational(cls, value, order: int = 1) -> "Cyclotomic":
        value = Fraction(value)
        num = [0] * euler_phi(order)
        num[0] = value.numerator
        return cls(order, num, value.denominator)

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> "Cyclotomic":
        """Build sum(c_j z^j) from rational coefficients indexed by power."""
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(1, *(c.denominator for c in coeffs))
        return cls(order, [int(c * den) for c in coeffs], den)

    # -- accessors ----------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical coefficient vector, length phi(order)."""
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def key(self) -> tuple:
        """Exact hashable identity within a fixed order."""
        return (self._num, self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    # -- order handling -----------------------------------------------------
    def promote(self, order: int) -> "Cyclotomic":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot promote order {self.order} to {order}")
        _check_order(order)
        step = order // self.order
        wide = [0] * order
        for j, c in enumerate(self._num):
            if c:
                wide[j * step] = c
        return Cyclotomic(order, _reduce(order, wide), self._den)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            n = math.lcm(self.order, other.order)
            _check_order(n)
            return self.promote(n), other.promote(n)
        if isinstance(other, (int, Rational)):
            return self, Cyclotomic.rational(other, self.order)
        return None, None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        num = [a._num[i] * b._den + b._num[i] * a._den for i in range(len(a._num))]
        return Cyclotomic(a.order, num, a._den * b._den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self._num), self._den, _normalized=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        num = [a._num[i] * b._den - b._num[i] * a._den for i in range(len(a._num))]
        return Cyclotomic(a.order, num, a._den * b._den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n = a.order
        if b.is_rational():
            c = b._num[0]
            return Cyclotomic(n, [x * c for x in a._num], a._den * b._den)
        if a.is_rational():
            c = a._num[0]
            return Cyclotomic(n, [x * c for x in b._num], a._den * b._den)
        wide = [0] * n
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        wide[(i + j) % n] += x * y
        return Cyclotomic(n, _reduce(n, wide), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the product of the other Galois conjugates."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.to_fraction(), self.order)
        cofactor = Cyclotomic.rational(1, self.order)
        for k in _units(self.order):
            if k != 1:
                cofactor = cofactor * self.galois(k)
        norm = (self * cofactor).to_fraction()
        return cofactor * (1 / norm)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- automorphisms ------------------------------------------------------
    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism z -> z^k (k coprime to the order)."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        wide = [0] * n
        for j, c in enumerate(self._num):
            if c:
                wide[(j * k) % n] += c
        return Cyclotomic(n, _reduce(n, wide), self._den)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.order - 1)

    def mean_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of the order used."""
        n = self.order
        total = Fraction(0)
        for j, c in enumerate(self._num):
            if c:
                m = n // math.gcd(j, n)
                total += Fraction(c * mobius(m), euler_phi(m))
        return total / self._den

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        # mean_trace is order independent, so equal values hash equally
        if self._hash is None:
            self._hash = hash(self.mean_trace()) if not self.is_rational() else hash(self.to_fraction())
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- display ------------------------------------------------------------
    def __complex__(self):
        return to_complex(self)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {format_expr(self)!r})"

    def __str__(self):
        return format_expr(self)


def to_complex(a: Cyclotomic) -> complex:
    n = a.order
    total = 0j
    for j, c in enumerate(a._num):
        if c:
            total += c * cmath.exp(2j * math.pi * j / n)
    return total / a._den


def format_expr(a: Cyclotomic, var: str = "z") -> str:
    """Render in the input grammar, e.g. ``1/2 + z^3`` or ``-z``."""
    terms = []
    for j, c in enumerate(a.coeffs):
        if not c:
            continue
        mag = abs(c)
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- functional surface ------------------------------------------------------

def cyc_make(order: int, k: int) -> Cyclotomic:
    return Cyclotomic.root(order, k)


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def cyc_conj(a: Cyclotomic) -> Cyclotomic:
    return a.conjugate()


def cyc_to_complex(a: Cyclotomic) -> tuple[float, float]:
    z = to_complex(a)
    return (z.real, z.imag)
