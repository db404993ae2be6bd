"""Eigenvalue angles, ages and orbit isotropy.

Angles are turn fractions: an eigenvalue exp(2 pi i q) is recorded by the
rational q in (0, 1], so eigenvalue 1 has q = 1.  The age of g is
sum (1 - q) * mult over its spectrum.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .cyclotomic import Cyclotomic
from .errors import InternalAssertion, NonIntegerAge, NotAnEigenvalue
from .groups import MatrixGroup

STRATA_MAX_DIM = 3


def turn(value) -> Fraction:
    """Reduce into (0, 1]."""
    q = Fraction(value) % 1
    return q if q else Fraction(1)


@dataclass(frozen=True)
class EigenSpectrum:
    entries: tuple[tuple[Fraction, int], ...]

    @property
    def n(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def turns(self) -> tuple[Fraction, ...]:
        return tuple(q for q, _ in self.entries)

    def multiplicity(self, q) -> int:
        q = Fraction(q)
        return next((m for p, m in self.entries if p == q), 0)

    def smaller_dims(self, q) -> int:
        """Total multiplicity of eigenvalues with turn fraction below q."""
        return sum(m for p, m in self.entries if p < q)

    def power(self, j: int) -> "EigenSpectrum":
        """Spectrum of g^j computed from that of g."""
        acc = Counter()
        for q, m in self.entries:
            acc[turn(q * j)] += m
        return EigenSpectrum(tuple(sorted(acc.items())))

    def as_multiset(self) -> list[Fraction]:
        return [q for q, m in self.entries for _ in range(m)]


@dataclass(frozen=True)
class ClassSpectrum:
    class_index: int
    spectrum: EigenSpectrum
    age: int
    min_q: Fraction


@dataclass(frozen=True)
class IsotropyData:
    class_index: int
    q: Fraction
    generic_Gv_order: int
    fiber_size: int
    orbit_multiplicity: int
    strata: tuple[int, ...] | None = None

    def multiplicity(self, k: int = 0) -> int:
        """Multiplicity of the orbit of period q + k turns."""
        return int((self.q + k) * self.generic_Gv_order)


def _nullity_spectrum(mat, order: int, r: int) -> EigenSpectrum:
    n = len(mat)
    field = math.lcm(order, r)
    g = linalg.promote(mat, field)
    entries, total = [], 0
    for k in range(1, r + 1):
        mult = linalg.nullity(linalg.shift(g, Cyclotomic.root(field, k * (field // r))))
        if mult:
            entries.append((Fraction(k, r), mult))
            total += mult
            if total == n:
                break
    return EigenSpectrum(tuple(entries))


def eigen_spectrum(group: MatrixGroup, idx: int) -> EigenSpectrum:
    """Exact spectrum of element `idx` from nullities of g - zeta_r^k I."""
    key = ("spectrum", idx)
    if key not in group.cache:
        r = group.element_order(idx)
        group.cache[key] = _nullity_spectrum(group.elements[idx], group.field_order, r)
    return group.cache[key]


def age(spectrum: EigenSpectrum) -> int:
    total = sum((1 - q) * m for q, m in spectrum.entries)
    if total.denominator != 1:
        raise NonIntegerAge(f"age {total} is not an integer; element is not in SL")
    return int(total)


def class_spectra(group: MatrixGroup) -> list[ClassSpectrum]:
    out = []
    for ci, cls in enumerate(group.classes):
        spec = eigen_spectrum(group, cls.rep_index)
        out.append(ClassSpectrum(ci, spec, age(spec), spec.entries[0][0]))
    return out


def age_census(group: MatrixGroup) -> dict[int, int]:
    counts = Counter(cs.age for cs in class_spectra(group))
    return dict(sorted(counts.items()))


# -- isotropy ---------------------------------------------------------------

def _eigenbasis(mat, field: int, q: Fraction):
    r = q.denominator
    zeta = Cyclotomic.root(field, (q.numerator % r) * (field // r))
    return linalg.nullspace(linalg.shift(linalg.promote(mat, field), zeta))


def _scalar_on(mat, vectors) -> bool:
    """True if `mat` multiplies every vector in `vectors` by one common scalar."""
    lam = None
    for v in vectors:
        w = linalg.matvec(mat, v)
        if lam is None:
            # basis vectors from elimination carry a unit entry; avoid inverting otherwise
            i = next((i for i, x in enumerate(v) if x == 1), None)
            if i is None:
                i = next(i for i, x in enumerate(v) if not x.is_zero())
                lam = w[i] / v[i]
            else:
                lam = w[i]
        if any(wi != lam * vi for wi, vi in zip(w, v)):
            return False
    return True


def isotropy(group: MatrixGroup, class_index: int, q, with_strata: bool | None = None) -> IsotropyData:
    """Generic isotropy of the orbits through V_{g,q} for the class representative g.

    |G_v| counts centralizer elements acting as a scalar on V_{g,q}.  With
    `with_strata` (default when n <= 3) the orders attained on special
    eigenvectors are listed too.
    """
    q = Fraction(q)
    cls = group.classes[class_index]
    g = cls.rep_index
    spec = eigen_spectrum(group, g)
    if spec.multiplicity(q) == 0:
        raise NotAnEigenvalue(f"turn fraction {q} is not an eigenvalue of class {class_index}")
    field = math.lcm(group.field_order, group.element_order(g))
    basis = _eigenbasis(group.elements[g], field, q)
    cent = group.centralizer(g)
    gv = sum(1 for h in cent if _scalar_on(linalg.promote(group.elements[h], field), basis))
    if cls.centralizer_order % gv:
        raise InternalAssertion("generic isotropy order does not divide the centralizer order")
    mult = q * gv
    if mult.denominator != 1 or mult <= 0:
        raise InternalAssertion(f"orbit multiplicity {mult} is not a positive integer")
    if with_strata is None:
        with_strata = group.n <= STRATA_MAX_DIM
    strata = _strata(group, g, q, cent) if with_strata else None
    return IsotropyData(class_index, q, gv, cls.centralizer_order // gv, int(mult), strata)


def _rowspace_key(rows):
    if not rows:
        return ()
    red, piv = linalg.rref(rows)
    return tuple(tuple(x.key for x in row) for row in red[: len(piv)])


def _canonical(rows):
    if not rows:
        return []
    red, piv = linalg.rref(rows)
    return [tuple(r) for r in red[: len(piv)]]


def _intersect(a, b, d, field):
    ann = []
    for rows in (a, b):
        ann.extend(linalg.nullspace(tuple(rows)) if rows else [])
    if not ann:
        return list(linalg.identity(d, field))
    return _canonical(linalg.nullspace(tuple(ann)))


def _strata(group: MatrixGroup, g: int, q: Fraction, cent) -> tuple[int, ...]:
    """Isotropy orders attained by points of V_{g,q}.

    Every point lies generically in some intersection of eigenspaces of
    centralizer elements restricted to V; the generic isotropy of each such
    subspace is recorded.
    """
    field = math.lcm(group.field_order, group.exponent)
    basis = _eigenbasis(group.elements[g], field, q)
    d = len(basis)
    free = [next(j for j, x in enumerate(v) if x == 1 and all(w[j].is_zero() for w in basis if w is not v))
            for v in basis]
    restricted = []
    for h in cent:
        hm = linalg.promote(group.elements[h], field)
        cols = [tuple(linalg.matvec(hm, v)[f] for f in free) for v in basis]
        restricted.append(tuple(zip(*cols)))

    full = list(linalg.identity(d, field))
    spaces = {_rowspace_key(full): full}
    for h, a in zip(cent, restricted):
        r = group.element_order(h)
        seen = 0
        for k in range(1, r + 1):
            w = _canonical(_eigenbasis(a, field, Fraction(k, r)))
            seen += len(w)
            if 0 < len(w) < d:
                spaces.setdefault(_rowspace_key(w), w)
            if seen == d:
                break
    # a line meets any subspace in itself or in 0, so only planes and up need intersecting
    frontier = [w for w in spaces.values() if 1 < len(w) < d]
    while frontier:
        new = []
        current = [w for w in spaces.values() if 1 < len(w) < d]
        for u in frontier:
            for w in current:
                if w is u:
                    continue
                x = _intersect(u, w, d, field)
                key = _rowspace_key(x)
                if x and key not in spaces:
                    spaces[key] = x
                    new.append(x)
        frontier = new
    orders = set()
    for rows in spaces.values():
        orders.add(sum(1 for a in restricted if _scalar_on(a, rows)))
    return tuple(sorted(orders))


# -- oracles ----------------------------------------------------------------

def spectrum_trace_dft(group: MatrixGroup, idx: int) -> EigenSpectrum:
    """Multiplicities from mult(zeta_r^k) = (1/r) sum_j tr(g^j) zeta_r^(-kj)."""
    r = group.element_order(idx)
    field = math.lcm(group.field_order, r)
    step = field // r
    traces = []
    for j in range(r):
        t = linalg.trace(group.elements[group.power(idx, j)]).promote(field)
        traces.append(t)
    den = math.lcm(*(t.denominator for t in traces))
    scaled = [[(p, c * (den // t.denominator)) for p, c in enumerate(t.numerators) if c] for t in traces]
    entries = []
    for k in range(1, r + 1):
        wide = [0] * field
        for j, terms in enumerate(scaled):
            shift = (k * j * step) % field
            for p, c in terms:
                wide[(p - shift) % field] += c
        total = Cyclotomic(field, wide, den * r)
        if not total.is_rational():
            raise InternalAssertion("trace transform produced an irrational multiplicity")
        m = total.to_fraction()
        if m.denominator != 1 or m < 0:
            raise InternalAssertion(f"trace transform produced multiplicity {m}")
        if m:
            entries.append((Fraction(k, r), int(m)))
    return EigenSpectrum(tuple(entries))


def spectrum_float(group: MatrixGroup, idx: int, tol: float = 1e-6) -> EigenSpectrum:
    """Float eigensolve with phases snapped to multiples of 1/r."""
    r = group.element_order(idx)
    values = np.linalg.eigvals(linalg.to_numpy(group.elements[idx]))
    acc = Counter()
    for lam in values:
        if abs(abs(lam) - 1) > tol:
            raise InternalAssertion(f"eigenvalue {lam} is off the unit circle")
        phase = (cmath.phase(lam) / (2 * math.pi)) % 1.0
        k = round(phase * r)
        if abs(phase - k / r) > tol:
            raise InternalAssertion(f"phase {phase} does not snap to a multiple of 1/{r}")
        acc[turn(Fraction(k, r))] += 1
    return EigenSpectrum(tuple(sorted(acc.items())))
