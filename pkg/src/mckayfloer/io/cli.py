"""Command-line driver.

Exit codes: 0 success, 1 validation failure, 2 input error, 3 internal
assertion failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings
from fractions import Fraction

from .. import filtration, floer
from ..errors import InputError, InternalAssertion, McKayError, ResourceCap, ValidationError
from ..groups import MatrixGroup, close
from ..mckay import DEFAULT_SLOPE, oracle_checks, predict
from .builtins import PATTERNS, STANDARD, builtin
from .parser import BuiltinSpec, parse_spec
from .render import build_diagram
from .report import emit_report

EXIT_OK, EXIT_VALIDATION, EXIT_INPUT, EXIT_INTERNAL, EXIT_CAP = range(5)


def load_spec(arg: str):
    """A spec from a JSON file path, or ``builtin:NAME``."""
    if arg.startswith("builtin:"):
        return builtin(arg.split(":", 1)[1])
    try:
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {arg}: {exc.strerror}") from None
    spec = parse_spec(text)
    if isinstance(spec, BuiltinSpec):
        spec = spec.resolve()
    return spec


def load_group(arg: str) -> MatrixGroup:
    spec = load_spec(arg)
    for flag in getattr(spec, "flags", lambda: [])():
        print(f"warning: {flag}", file=sys.stderr)
    return close(spec.generator_matrices())


def _slope(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("slope must be positive")
    return value


def default_cap(group: MatrixGroup, slope: Fraction) -> Fraction:
    """A plateau slope just past `slope` that avoids multiples of 1/|G|."""
    return slope + Fraction(1, 2 * group.order)


def profile_for(group: MatrixGroup, cap: Fraction) -> filtration.HamiltonianProfile:
    catalog = floer.orbit_catalog(group, cap)
    periods = sorted({2 * math.pi * float(o.period) for o in catalog})
    return filtration.capped_quadratic_profile(periods, cap, group_order=group.order)


def _write(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def cmd_analyze(args) -> int:
    group = load_group(args.file)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = predict(group, args.slope)
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    _write(emit_report(report, args.format))
    return EXIT_OK if report.all_checks_pass else EXIT_INTERNAL


def cmd_diagram(args) -> int:
    group = load_group(args.file)
    floer.orbit_catalog(group, args.slope)  # raises NotIsolated early
    report = predict(group, args.slope, oracles=False)
    diagram = build_diagram(report, args.page)
    _write(emit_report(diagram, "svg" if args.svg else "text"))
    return EXIT_OK


def cmd_check(args) -> int:
    group = load_group(args.file)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = predict(group, args.slope)
    checks = list(report.checks) + oracle_checks(group, every_element=True)
    ok = all(c.passed for c in checks)
    for c in checks:
        print(f"[{'ok' if c.passed else 'FAIL'}] {c.name}" + (f" ({c.detail})" if c.detail else ""))
    if report.catalog is not None:
        prof = filtration.verify_profile(profile_for(group, default_cap(group, args.slope)))
        for c in prof.checks:
            print(f"[{'ok' if c.passed else 'FAIL'}] profile.{c.name}")
        ok = ok and prof.passed
    print("all checks passed" if ok else "some checks FAILED")
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_profile(args) -> int:
    group = load_group(args.file)
    cap = args.cap if args.cap is not None else default_cap(group, args.slope)
    try:
        profile = profile_for(group, cap)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    report = filtration.verify_profile(profile)
    print(f"R0 = {profile.R0:.9g}, R1 = {profile.R1:.9g}, plateau slope = {profile.plateau_slope:.9g}")
    for c in report.checks:
        print(f"[{'ok' if c.passed else 'FAIL'}] {c.name}: {c.witness}")
    for s in report.slice_values:
        print(f"slice rho = {s.rho:.9g}  T = {s.T:.12g}")
    return EXIT_OK if report.passed else EXIT_VALIDATION


def cmd_list(args) -> int:
    print("patterns:")
    for p in PATTERNS:
        print(f"  {p}")
    print("examples:")
    for name in STANDARD:
        print(f"  {name}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mckay-floer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file", help="JSON group specification, or builtin:NAME")
        p.add_argument("--slope", type=_slope, default=DEFAULT_SLOPE, help="slope horizon in turns (default 3)")
        return p

    p = with_file(sub.add_parser("analyze", help="full report"))
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = with_file(sub.add_parser("diagram", help="E1 page diagram"))
    p.add_argument("--page", choices=["sc", "sc+", "esc+"], required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--ascii", action="store_true", help="fixed-width text (default)")
    mode.add_argument("--svg", action="store_true")
    p.set_defaults(func=cmd_diagram)

    p = with_file(sub.add_parser("check", help="run every invariant and oracle"))
    p.set_defaults(func=cmd_check)

    p = with_file(sub.add_parser("profile", help="verify the capped quadratic Hamiltonian profile"))
    p.add_argument("--cap", type=_slope, default=None, help="plateau slope in turns")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("list-builtins", help="names accepted by builtin:NAME")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalAssertion as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ResourceCap as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (McKayError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
