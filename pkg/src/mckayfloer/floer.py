"""Orbit catalog, E1 pages, per-class summands and the Gysin ranks.

A record (class, q, k) stands for the Morse-Bott family of Reeb orbits of
period q + k turns whose linearised return map acts on V_{g,q}.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .czindex import cz_morse_bott
from .errors import CoverageGap, CoverageOverlap, InternalAssertion, NotIsolated, NotSL
from .groups import MatrixGroup, validate
from .spectrum import IsotropyData, class_spectra, isotropy


@dataclass(frozen=True)
class MorseBottOrbit:
    class_index: int
    q: Fraction
    k: int
    d: int
    dimB: int
    cz: int
    mu: int
    mu_max: int
    isotropy: IsotropyData | None

    @property
    def period(self) -> Fraction:
        return self.q + self.k

    @property
    def multiplicity(self) -> int | None:
        return self.isotropy.multiplicity(self.k) if self.isotropy else None


@dataclass
class GradedRankTable:
    ranks: dict[int, int] = field(default_factory=dict)
    provenance: dict[int, list[int]] = field(default_factory=dict)

    def add(self, degree: int, rank: int = 1, source: int | None = None) -> None:
        self.ranks[degree] = self.ranks.get(degree, 0) + rank
        if source is not None:
            self.provenance.setdefault(degree, []).append(source)

    def __getitem__(self, degree: int) -> int:
        return self.ranks.get(degree, 0)

    def __eq__(self, other):
        if not isinstance(other, GradedRankTable):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def as_dict(self) -> dict[int, int]:
        return {d: r for d, r in sorted(self.ranks.items()) if r}

    @property
    def support(self) -> list[int]:
        return list(self.as_dict())

    @property
    def total(self) -> int:
        return sum(self.ranks.values())


@dataclass(frozen=True)
class FSummand:
    class_index: int
    mu_g: int
    covered_degrees: tuple[int, ...]


def _require_isolated(group: MatrixGroup) -> None:
    report = validate(group)
    if not report.in_sl:
        raise NotSL("group is not contained in SL(n)")
    if not report.isolated:
        raise NotIsolated("a non-identity element has eigenvalue 1; the singularity is not isolated")


def orbit_catalog(group: MatrixGroup, slope, with_isotropy: bool = True) -> list[MorseBottOrbit]:
    """All orbit families of period at most `slope` turns, sorted by period then class.

    `with_isotropy=False` skips the centralizer scans and leaves the
    isotropy field empty; gradings do not depend on it.
    """
    slope = Fraction(slope)
    if slope <= 0:
        raise ValueError("slope must be positive")
    _require_isolated(group)
    n = group.n
    out = []
    for cs in class_spectra(group):
        for q, d in cs.spectrum.entries:
            iso = isotropy(group, cs.class_index, q) if with_isotropy else None
            below = cs.spectrum.smaller_dims(q)
            k = 0
            while q + k <= slope:
                rec = cz_morse_bott(n, cs.age, below, 2 * d - 1, k)
                out.append(MorseBottOrbit(cs.class_index, q, k, d, 2 * d - 1, rec.cz, rec.mu,
                                          rec.mu + 2 * d - 1, iso))
                k += 1
    out.sort(key=lambda o: (o.period, o.class_index))
    return out


def e1_plain(catalog) -> GradedRankTable:
    table = GradedRankTable()
    for i, orb in enumerate(catalog):
        table.add(orb.mu, 1, i)
        table.add(orb.mu_max, 1, i)
    return table


def equivariant_degrees(orbit: MorseBottOrbit) -> list[int]:
    return [orbit.mu + 2 * j + 1 for j in range(orbit.d)]


def e1_equivariant(catalog) -> GradedRankTable:
    table = GradedRankTable()
    for i, orb in enumerate(catalog):
        for deg in equivariant_degrees(orb):
            table.add(deg, 1, i)
    return table


def stack_f_summands(group: MatrixGroup, catalog) -> list[FSummand]:
    """Check each class's equivariant generators tile the odd degrees below 2 age - 1."""
    per_class = defaultdict(list)
    for orb in catalog:
        per_class[orb.class_index].extend(equivariant_degrees(orb))
    out = []
    for cs in class_spectra(group):
        top = 2 * cs.age - 1
        degrees = sorted(per_class.get(cs.class_index, []), reverse=True)
        if not degrees:
            raise CoverageGap(f"class {cs.class_index} has no orbits within the slope horizon")
        expected = top
        for deg in degrees:
            if deg > expected:
                raise CoverageOverlap(f"class {cs.class_index} repeats degree {deg}")
            if deg < expected:
                raise CoverageGap(f"class {cs.class_index} misses degree {expected}")
            expected -= 2
        out.append(FSummand(cs.class_index, top, tuple(degrees)))
    union = Counter(d for s in out for d in s.covered_degrees)
    if dict(sorted(union.items())) != e1_equivariant(catalog).as_dict():
        raise InternalAssertion("summand union differs from the equivariant E1 page")
    return out


def gysin_solve(summands) -> GradedRankTable:
    """Odd-degree ranks of SH+: one generator per summand, at its top degree."""
    table = GradedRankTable()
    for s in summands:
        table.add(s.mu_g, 1, s.class_index)
    return table


def parity_degeneration(table: GradedRankTable) -> bool:
    return all(deg % 2 for deg, rank in table.ranks.items() if rank)


def catalog_age(catalog, class_index: int) -> Fraction:
    """Age recomputed from the short orbits of one class."""
    return sum(((1 - o.q) * o.d for o in catalog if o.class_index == class_index and o.k == 0),
               Fraction(0))
