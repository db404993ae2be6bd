"""Input parsing, builtin groups, rendering, serialisation and the CLI."""

from .builtins import PATTERNS, STANDARD, builtin
from .parser import BuiltinSpec, ExplicitSpec, LensSpec, parse_expr, parse_spec, print_spec, spec_from_dict
from .render import Column, Diagram, build_diagram, render_ascii, render_svg
from .report import emit_report, report_schema, report_to_dict, validate_report_json

__all__ = [
    "PATTERNS", "STANDARD", "builtin",
    "BuiltinSpec", "ExplicitSpec", "LensSpec", "parse_expr", "parse_spec", "print_spec", "spec_from_dict",
    "Column", "Diagram", "build_diagram", "render_ascii", "render_svg",
    "emit_report", "report_schema", "report_to_dict", "validate_report_json",
]
