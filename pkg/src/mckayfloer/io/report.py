"""Serialisation of reports and diagrams.

JSON output uses a fixed key order, integers for ranks and degrees, and
"a/b" strings for every rational.  The schema ships next to this module as
``report.schema.json``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import jsonschema

from ..errors import UnsupportedFormat
from ..mckay import McKayReport
from .render import Diagram, render_ascii, render_svg

FORMATS = ("json", "text", "svg")


def rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _table(table):
    if table is None:
        return None
    return [{"degree": d, "rank": r} for d, r in table.as_dict().items()]


def report_to_dict(report: McKayReport) -> dict:
    from .. import __version__

    spectra = report.spectra
    classes = []
    for cls, cs in zip(report.classes, spectra):
        classes.append({
            "index": cs.class_index,
            "rep": cls.rep_index,
            "size": cls.class_size,
            "centralizer": cls.centralizer_order,
            "age": cs.age,
            "spectrum": [{"q": rational(q), "mult": m} for q, m in cs.spectrum.entries],
        })
    orbits = None
    if report.catalog is not None:
        orbits = []
        for o in report.catalog:
            iso = o.isotropy
            orbits.append({
                "class": o.class_index,
                "q": rational(o.q),
                "k": o.k,
                "period": rational(o.period),
                "d": o.d,
                "dimB": o.dimB,
                "cz": o.cz,
                "mu": o.mu,
                "mu_max": o.mu_max,
                "isotropy": {
                    "generic_Gv_order": iso.generic_Gv_order,
                    "fiber_size": iso.fiber_size,
                    "multiplicity": o.multiplicity,
                    "strata": list(iso.strata) if iso.strata is not None else None,
                },
            })
    constants = {
        "degrees": [2 * k for k, b in enumerate(report.betti) for _ in range(b)],
        "status": "prediction",
    }
    pages = {"constants": constants}
    if report.pages is not None:
        pages["sc_plus"] = _table(report.pages["sc_plus"])
        pages["esc_plus"] = _table(report.pages["esc_plus"])
    summands = None
    if report.f_summands is not None:
        summands = [{"class": s.class_index, "mu_g": s.mu_g, "covered_degrees": list(s.covered_degrees)}
                    for s in report.f_summands]
    v = report.validation
    return {
        "group": {
            "order": report.order,
            "n": report.n,
            "field_order": report.field_order,
            "class_count": report.class_count,
            "slope": rational(report.slope),
        },
        "validation": {"in_sl": v.in_sl, "isolated": v.isolated, "small": v.small,
                       "messages": list(v.messages)},
        "classes": classes,
        "orbits": orbits,
        "pages": pages,
        "f_summands": summands,
        "betti": list(report.betti),
        "sh_plus": _table(report.sh_plus),
        "euler": report.euler,
        "age_census": [{"age": k, "count": c} for k, c in report.age_census.items()],
        "obstruction": {"flag": report.obstructed, "explanation": report.obstruction_reason},
        "characteristic_exclusions": list(report.characteristic_exclusions),
        "labelling": {
            "note": "non-canonical labelling",
            "entries": [{"class": lab.class_index, "degree": lab.degree, "age": lab.age,
                         "min_q": rational(lab.min_q), "mu": lab.mu, "mu_max": lab.mu_max}
                        for lab in report.labelling],
        },
        "warnings": list(report.warnings),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
        "version": __version__,
    }


@lru_cache(maxsize=1)
def report_schema() -> dict:
    text = resources.files(__package__).joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_report_json(data) -> None:
    """Raise jsonschema.ValidationError if `data` does not match the schema."""
    jsonschema.validate(data, report_schema())


def report_to_text(report: McKayReport) -> str:
    lines = [
        f"group: order {report.order}, n = {report.n}, {report.class_count} conjugacy classes, "
        f"field Q(zeta_{report.field_order})",
        f"validation: in_sl={report.validation.in_sl} isolated={report.validation.isolated} "
        f"small={report.validation.small}",
        "age census: " + ", ".join(f"age {k}: {c}" for k, c in report.age_census.items()),
        "betti (even degrees 0, 2, ...): " + " ".join(str(b) for b in report.betti),
        f"euler characteristic: {report.euler}",
        f"obstructed: {report.obstructed} ({report.obstruction_reason})",
        "excluded characteristics: " + (" ".join(map(str, report.characteristic_exclusions)) or "none"),
    ]
    if report.sh_plus is not None:
        lines.append("SH+ ranks: " + ", ".join(f"{d:+d}: {r}" for d, r in report.sh_plus.as_dict().items()))
        lines.append(f"orbit families up to slope {report.slope}: {len(report.catalog)}")
    lines.append("classes (non-canonical labelling):")
    for cls, cs in zip(report.classes, report.spectra):
        spec = ", ".join(f"{rational(q)} (x{m})" for q, m in cs.spectrum.entries)
        lines.append(f"  g{cs.class_index}: size {cls.class_size}, centralizer {cls.centralizer_order}, "
                     f"age {cs.age}, spectrum {spec}")
    lines.append("checks:")
    for c in report.checks:
        lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}" + (f" ({c.detail})" if c.detail else ""))
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def emit_report(obj, fmt: str) -> bytes:
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if isinstance(obj, Diagram):
        if fmt == "svg":
            return render_svg(obj).encode()
        if fmt == "text":
            return render_ascii(obj).encode()
        data = {
            "page": obj.page,
            "constants": list(obj.constants.degrees) if obj.constants else None,
            "columns": [{"label": c.label, "class": c.class_index, "period": rational(c.period),
                         "degrees": list(c.degrees)} for c in obj.columns],
        }
        return (json.dumps(data, indent=2) + "\n").encode()
    if fmt == "svg":
        raise UnsupportedFormat("svg output is only available for diagrams")
    if fmt == "text":
        return report_to_text(obj).encode()
    data = report_to_dict(obj)
    validate_report_json(data)
    return (json.dumps(data, indent=2) + "\n").encode()
