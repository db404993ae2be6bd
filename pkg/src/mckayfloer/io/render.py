"""Spectral-sequence diagrams as fixed-width text or SVG.

A diagram has one column per orbit family, ordered by period, listing the
degrees that family contributes to the chosen page.  The "sc" page also
carries a bracketed column of constant-orbit degrees, which is the predicted
cohomology of the resolution rather than a computed quantity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from ..floer import equivariant_degrees

PAGES = {"sc": "sc", "sc+": "sc_plus", "sc_plus": "sc_plus", "esc+": "esc_plus", "esc_plus": "esc_plus"}


@dataclass(frozen=True)
class Column:
    label: str
    period: Fraction | None
    degrees: tuple[int, ...]
    class_index: int | None = None


@dataclass(frozen=True)
class Diagram:
    page: str
    columns: tuple[Column, ...]
    constants: Column | None = None

    @property
    def has_constants(self) -> bool:
        return self.constants is not None


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def build_diagram(report, page: str) -> Diagram:
    """Columns of the requested page from a full report."""
    kind = PAGES.get(page)
    if kind is None:
        raise ValueError(f"unknown page {page!r}; expected sc, sc+ or esc+")
    if report.catalog is None:
        raise ValueError("report has no orbit catalog (non-isolated input)")
    cols = []
    for orb in report.catalog:
        if kind == "esc_plus":
            degs = tuple(sorted(equivariant_degrees(orb), reverse=True))
        else:
            degs = (orb.mu_max, orb.mu)
        label = f"g{orb.class_index}:{_fmt_q(orb.period)}"
        cols.append(Column(label, orb.period, degs, orb.class_index))
    constants = None
    if kind == "sc":
        degs = tuple(2 * k for k in range(len(report.betti) - 1, -1, -1) for _ in range(report.betti[k]))
        constants = Column("const", None, degs)
    return Diagram(kind, tuple(cols), constants)


def _cell(deg: int, constant: bool) -> str:
    if constant:
        return f"({deg})"
    return f"{deg:+d}" if deg else "0"


def render_ascii(diagram: Diagram) -> str:
    """Columns left to right by period; degrees descend down each column."""
    cols = []
    if diagram.constants is not None:
        cols.append((diagram.constants.label, [_cell(d, True) for d in diagram.constants.degrees]))
    for col in diagram.columns:
        cols.append((col.label, [_cell(d, False) for d in col.degrees]))
    if not cols:
        return f"[{diagram.page}] (empty)\n"
    width = max(len(s) for label, cells in cols for s in [label, *cells]) + 2
    height = max(len(cells) for _, cells in cols)
    lines = [f"[{diagram.page}]", "".join(label.rjust(width) for label, _ in cols).rstrip()]
    for row in range(height):
        parts = [(cells[row] if row < len(cells) else "").rjust(width) for _, cells in cols]
        lines.append("".join(parts).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(diagram: Diagram) -> str:
    """One <text> per generator placed at height proportional to its degree.

    Each text element carries data-column and data-degree attributes so the
    picture can be read back.
    """
    entries = []
    if diagram.constants is not None:
        entries.append((diagram.constants, True))
    entries.extend((c, False) for c in diagram.columns)
    all_degs = [d for c, _ in entries for d in c.degrees] or [0]
    top, bottom = max(all_degs), min(all_degs)
    dx, dy, margin = 56, 18, 40
    width = margin * 2 + dx * max(len(entries), 1)
    height = margin * 2 + dy * (top - bottom + 1)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'data-page="{diagram.page}">']
    for ci, (col, constant) in enumerate(entries):
        x = margin + dx * ci + dx // 2
        out.append(f'  <text x="{x}" y="{margin - 16}" text-anchor="middle" font-size="10" '
                   f'class="label" data-column="{ci}">{escape(col.label)}</text>')
        stacked: dict[int, int] = {}
        for d in col.degrees:
            y = margin + dy * (top - d) + dy // 2
            offset = stacked.get(d, 0)
            stacked[d] = offset + 1
            out.append(f'  <text x="{x + 12 * offset}" y="{y}" text-anchor="middle" font-size="12" '
                       f'class="{"constant" if constant else "degree"}" data-column="{ci}" '
                       f'data-degree="{d}">{escape(_cell(d, constant))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
