"""Predicted cohomology of a crepant resolution and the consistency checklist."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import floer
from .errors import NotSL
from .groups import ConjClass, MatrixGroup, ValidationReport, burnside_class_count, validate
from .spectrum import (
    ClassSpectrum,
    class_spectra,
    eigen_spectrum,
    spectrum_float,
    spectrum_trace_dft,
)

DEFAULT_SLOPE = Fraction(3)
LABELLING_NOTE = "non-canonical labelling"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ClassLabel:
    class_index: int
    degree: int
    age: int
    min_q: Fraction
    mu: int | None
    mu_max: int | None
    note: str = LABELLING_NOTE


@dataclass
class McKayReport:
    order: int
    n: int
    field_order: int
    slope: Fraction
    validation: ValidationReport
    classes: list[ConjClass]
    spectra: list[ClassSpectrum]
    age_census: dict[int, int]
    betti: tuple[int, ...]
    euler: int
    characteristic_exclusions: tuple[int, ...]
    obstructed: bool
    obstruction_reason: str
    labelling: list[ClassLabel]
    catalog: list | None = None
    pages: dict | None = None
    f_summands: list | None = None
    sh_plus: floer.GradedRankTable | None = None
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def all_checks_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def primes_up_to(n: int) -> tuple[int, ...]:
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for m in range(p * p, n + 1, p):
                sieve[m] = False
    return tuple(out)


def betti_from_census(census: dict[int, int]) -> tuple[int, ...]:
    """b_{2k} = |Conj_k|, listed for k = 0 .. max age."""
    top = max(census)
    return tuple(census.get(k, 0) for k in range(top + 1))


def obstruction_flag(report_or_betti) -> tuple[bool, str]:
    betti = getattr(report_or_betti, "betti", report_or_betti)
    b2 = betti[1] if len(betti) > 1 else 0
    higher = sum(betti[1:])
    if b2 == 0 and higher > 0:
        degrees = [2 * k for k, b in enumerate(betti) if b and k]
        return True, (f"b2 = 0 but H^{degrees[0]} is nonzero: the exceptional fibre would be a "
                      "positive-dimensional projective variety without a Kahler class in H^2")
    return False, "no degree pattern rules out a crepant resolution"


def _inverse_class(group: MatrixGroup, ci: int) -> int:
    return group.class_of[group.inverse(group.classes[ci].rep_index)]


def structural_checks(group: MatrixGroup, spectra) -> list[Check]:
    out = []
    classes = group.classes
    out.append(Check("class_equation", all(c.class_size * c.centralizer_order == group.order for c in classes)
                     and sum(c.class_size for c in classes) == group.order))
    burnside = burnside_class_count(group)
    out.append(Check("burnside_class_count", burnside == len(classes), f"{burnside} vs {len(classes)}"))
    out.append(Check("age_range", all(0 <= cs.age <= group.n - 1 for cs in spectra)))
    return out


def isolated_checks(group: MatrixGroup, spectra, census) -> list[Check]:
    out = []
    n = group.n
    dual = all(spectra[ci].age + spectra[_inverse_class(group, ci)].age == n
               for ci in range(1, len(spectra)))
    out.append(Check("age_duality", dual))
    out.append(Check("b0_is_one", census.get(0, 0) == 1))
    sym = all(census.get(k, 0) == census.get(n - k, 0) for k in range(1, n))
    out.append(Check("census_symmetry", sym))
    return out


def pipeline_checks(group, spectra, catalog, pages, summands, sh_plus, slope) -> list[Check]:
    out = []
    n = group.n
    out.append(Check("mu_even", all(o.mu % 2 == 0 for o in catalog)))
    out.append(Check("dimB_odd", all(o.dimB == 2 * o.d - 1 for o in catalog)))
    base = {(o.class_index, o.q): o.mu for o in catalog if o.k == 0}
    out.append(Check("winding_shift", all(o.mu == base[(o.class_index, o.q)] - 2 * o.k * n for o in catalog)))
    out.append(Check("catalog_age", all(floer.catalog_age(catalog, cs.class_index) == cs.age for cs in spectra)))
    short = [o for o in catalog if o.k == 0]
    low = sum(r for d, r in floer.e1_plain(short).ranks.items() if d >= -2 * n)
    out.append(Check("plain_short_rank", low == 2 * len(short), f"{low} vs {2 * len(short)}"))
    out.append(Check("parity_degeneration", floer.parity_degeneration(pages["esc_plus"])))
    out.append(Check("summand_count", len(summands) == len(group.classes)))
    out.append(Check("summand_top_degree", all(s.mu_g == 2 * spectra[s.class_index].age - 1 for s in summands)))
    census = {}
    for cs in spectra:
        census[cs.age] = census.get(cs.age, 0) + 1
    out.append(Check("gysin_matches_census", sh_plus.as_dict() == {2 * k - 1: c for k, c in sorted(census.items())}))
    out.append(Check("isotropy_bound", all(o.isotropy.orbit_multiplicity <= group.order for o in short)))
    return out


def oracle_checks(group: MatrixGroup, every_element: bool = False) -> list[Check]:
    """Compare exact spectra with the trace transform and a float eigensolve."""
    indices = range(group.order) if every_element else [c.rep_index for c in group.classes]
    dft = flt = True
    for i in indices:
        exact = eigen_spectrum(group, i)
        dft = dft and spectrum_trace_dft(group, i) == exact
        flt = flt and spectrum_float(group, i) == exact
    scope = "every element" if every_element else "class representatives"
    conj = True
    if every_element:
        for cls in group.classes:
            ref = eigen_spectrum(group, cls.rep_index)
            conj = conj and all(eigen_spectrum(group, m) == ref for m in cls.member_indices)
    return [Check("spectrum_trace_dft", dft, scope), Check("spectrum_float", flt, scope),
            Check("spectrum_conjugation_invariant", conj)]


def predict(group: MatrixGroup, slope=DEFAULT_SLOPE, oracles: bool = True) -> McKayReport:
    """Run the full pipeline and return every predicted quantity with its checks."""
    slope = Fraction(slope)
    report = validate(group)
    if not report.in_sl:
        raise NotSL("; ".join(report.messages) or "group is not contained in SL(n)")
    spectra = class_spectra(group)
    census = {}
    for cs in spectra:
        census[cs.age] = census.get(cs.age, 0) + 1
    census = dict(sorted(census.items()))
    betti = betti_from_census(census)
    flag, reason = obstruction_flag(betti)
    checks = structural_checks(group, spectra)
    notes = []
    catalog = pages = summands = sh_plus = None
    if report.isolated:
        checks += isolated_checks(group, spectra, census)
        catalog = floer.orbit_catalog(group, slope)
        pages = {"sc_plus": floer.e1_plain(catalog), "esc_plus": floer.e1_equivariant(catalog)}
        summands = floer.stack_f_summands(group, catalog)
        sh_plus = floer.gysin_solve(summands)
        checks += pipeline_checks(group, spectra, catalog, pages, summands, sh_plus, slope)
        checks.append(Check("sh_plus_matches_betti",
                            all(sh_plus[2 * k - 1] == b for k, b in enumerate(betti))))
    else:
        msg = ("singularity is not isolated: only the age census and Betti prediction are "
               "computed; the orbit pipeline assumes a free action off the origin")
        notes.append(msg)
        warnings.warn(msg, stacklevel=2)
    if oracles:
        checks += oracle_checks(group)
    checks.append(Check("euler_is_class_count", sum(betti) == len(group.classes)))

    labels = []
    for cs in spectra:
        mu = mu_max = None
        if catalog is not None:
            first = next(o for o in catalog if o.class_index == cs.class_index and o.k == 0 and o.q == cs.min_q)
            mu, mu_max = first.mu, first.mu_max
        labels.append(ClassLabel(cs.class_index, 2 * cs.age, cs.age, cs.min_q, mu, mu_max))

    return McKayReport(
        order=group.order, n=group.n, field_order=group.field_order, slope=slope,
        validation=report, classes=list(group.classes), spectra=spectra, age_census=census,
        betti=betti, euler=sum(betti), characteristic_exclusions=primes_up_to(group.order),
        obstructed=flag, obstruction_reason=reason, labelling=labels, catalog=catalog,
        pages=pages, f_summands=summands, sh_plus=sh_plus, checks=checks, warnings=notes,
    )
