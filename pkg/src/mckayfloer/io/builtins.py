"""Named groups: the ADE subgroups of SL(2) and a few higher-dimensional examples."""

from __future__ import annotations

import math
import re
from fractions import Fraction

from ..cyclotomic import Cyclotomic
from ..errors import UnknownBuiltin
from .parser import ExplicitSpec

PATTERNS = (
    "cyclic_A{k}",
    "binary_dihedral_D{k}",
    "binary_tetrahedral",
    "binary_octahedral",
    "binary_icosahedral",
    "c3z3",
    "c4_pm1",
    "trivial{n}",
)

#: Concrete names exercised by the test suites.
STANDARD = (
    "cyclic_A1", "cyclic_A2", "cyclic_A3", "cyclic_A4", "cyclic_A5",
    "binary_dihedral_D4", "binary_dihedral_D5", "binary_dihedral_D6",
    "binary_tetrahedral", "binary_octahedral", "binary_icosahedral",
    "c3z3", "c4_pm1", "trivial2", "trivial3",
)


def _z(order, k=1):
    return Cyclotomic.root(order, k)


def _q(value, order):
    return Cyclotomic.rational(Fraction(value), order)


def _diag(*entries):
    order = entries[0].order
    nil = _q(0, order)
    return tuple(tuple(e if i == j else nil for j in range(len(entries))) for i, e in enumerate(entries))


def _mat(rows):
    return tuple(tuple(r) for r in rows)


def _cyclic(k: int) -> ExplicitSpec:
    m = k + 1
    return ExplicitSpec(2, m, (_diag(_z(m), _z(m, k)),))


def _dihedral(k: int) -> ExplicitSpec:
    half = 2 * (k - 2)
    order = math.lcm(half, 4)
    a = _diag(_z(order, order // half), _z(order, -(order // half)))
    i, nil = _z(order, order // 4), _q(0, order)
    b = _mat([[nil, i], [i, nil]])
    return ExplicitSpec(2, order, (a, b))


def _quaternion_units(order: int):
    # 1, i, j, k as 2x2 complex matrices
    one, nil, i = _q(1, order), _q(0, order), _z(order, order // 4)
    qi = _diag(i, -i)
    qj = _mat([[nil, one], [-one, nil]])
    qk = _mat([[nil, i], [i, nil]])
    return one, qi, qj, qk


def _omega(order: int):
    """(1 + i + j + k) / 2."""
    one, nil, i = _q(1, order), _q(0, order), _z(order, order // 4)
    half = Fraction(1, 2)
    return _mat([[(one + i) * half, (one + i) * half], [(i - one) * half, (one - i) * half]])


def _tetrahedral() -> ExplicitSpec:
    _, qi, qj, _ = _quaternion_units(4)
    return ExplicitSpec(2, 4, (qi, qj, _omega(4)))


def _octahedral() -> ExplicitSpec:
    _, qi, qj, _ = _quaternion_units(8)
    rot = _diag(_z(8), _z(8, 7))
    return ExplicitSpec(2, 8, (qi, qj, _omega(8), rot))


def _icosahedral() -> ExplicitSpec:
    e = lambda k: _z(5, k)  # noqa: E731
    sqrt5 = e(1) - e(2) - e(3) + e(4)
    s = _diag(e(3), e(2))
    scale = sqrt5.inverse()
    t = _mat([[(e(4) - e(1)) * scale, (e(2) - e(3)) * scale],
              [(e(2) - e(3)) * scale, (e(1) - e(4)) * scale]])
    return ExplicitSpec(2, 5, (s, t))


def _scalar(n: int, order: int, k: int) -> ExplicitSpec:
    return ExplicitSpec(n, order, (_diag(*[_z(order, k)] * n),))


_FIXED = {
    "binary_tetrahedral": _tetrahedral,
    "binary_octahedral": _octahedral,
    "binary_icosahedral": _icosahedral,
    "c3z3": lambda: _scalar(3, 3, 1),
    "c4_pm1": lambda: _scalar(4, 2, 1),
}


def builtin(name: str) -> ExplicitSpec:
    """Generators of a named group with exact cyclotomic entries."""
    spec = None
    if name in _FIXED:
        spec = _FIXED[name]()
    elif m := re.fullmatch(r"cyclic_A([1-9]\d*)", name):
        spec = _cyclic(int(m.group(1)))
    elif m := re.fullmatch(r"binary_dihedral_D([1-9]\d*)", name):
        if int(m.group(1)) >= 4:
            spec = _dihedral(int(m.group(1)))
    elif m := re.fullmatch(r"trivial([1-9]\d*)", name):
        spec = _scalar(int(m.group(1)), 1, 0)
    if spec is None:
        raise UnknownBuiltin(f"unknown builtin {name!r}; known patterns: {', '.join(PATTERNS)}")
    return ExplicitSpec(spec.n, spec.cyclotomic_order, spec.generators, name)
