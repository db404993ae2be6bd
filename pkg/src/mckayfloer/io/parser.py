"""Group specifications and the matrix-entry expression grammar.

Entries are written in a small language over z = zeta_N::

    expr     ::= ["+" | "-"] term (("+" | "-") term)*
    term     ::= atom ("*" atom)*
    atom     ::= rational | "z" | "z^" ["-"] int | "(" expr ")"
    rational ::= int | int "/" int

Whitespace is ignored and U+2212 is read as "-".  A specification file is a
JSON object whose "kind" is "explicit", "lens" or "builtin".
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..cyclotomic import Cyclotomic, format_expr
from ..errors import InputError, ParseError

MINUS = "−"


class _ExprParser:
    def __init__(self, text: str, order: int, where: str = ""):
        self.text = text.replace(MINUS, "-")
        self.order = order
        self.where = where
        self.pos = 0

    def fail(self, expected):
        raise ParseError(self.pos, expected, self.text, self.where)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(["integer"])
        return int(self.text[start:self.pos])

    def parse(self) -> Cyclotomic:
        value = self.expr()
        if self.peek():
            self.fail(["+", "-", "*", "end of input"])
        return value

    def expr(self) -> Cyclotomic:
        negate = self.eat("-")
        if not negate:
            self.eat("+")
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.eat("+"):
                value = value + self.term()
            elif self.eat("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Cyclotomic:
        value = self.atom()
        while self.eat("*"):
            value = value * self.atom()
        return value

    def atom(self) -> Cyclotomic:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.eat(")"):
                self.fail([")", "+", "-", "*"])
            return value
        if ch == "z":
            self.pos += 1
            if self.eat("^"):
                neg = self.eat("-")
                if not self.peek().isdigit():
                    self.fail(["integer"] if neg else ["integer", "-"])
                k = self.integer()
                return Cyclotomic.root(self.order, -k if neg else k)
            return Cyclotomic.root(self.order, 1)
        if ch.isdigit():
            num = self.integer()
            if self.eat("/"):
                at = self.pos
                den = self.integer()
                if den == 0:
                    self.pos = at
                    self.fail(["nonzero integer"])
                return Cyclotomic.rational(Fraction(num, den), self.order)
            return Cyclotomic.rational(num, self.order)
        self.fail(["integer", "z", "("])


def parse_expr(text: str, order: int, where: str = "") -> Cyclotomic:
    """Parse one matrix entry as an element of Q(zeta_order)."""
    return _ExprParser(text, order, where).parse()


# -- specifications -------------------------------------------------------------

@dataclass(frozen=True)
class ExplicitSpec:
    n: int
    cyclotomic_order: int
    generators: tuple
    name: str | None = field(default=None, compare=False)

    def generator_matrices(self):
        return [tuple(tuple(x.promote(self.cyclotomic_order) for x in row) for row in g)
                for g in self.generators]

    def to_dict(self) -> dict:
        out = {"kind": "explicit"}
        if self.name:
            out["name"] = self.name
        out["n"] = self.n
        out["cyclotomic_order"] = self.cyclotomic_order
        out["generators"] = [[[format_expr(x) for x in row] for row in g] for g in self.generators]
        return out


@dataclass(frozen=True)
class LensSpec:
    m: int
    weights: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    def flags(self) -> list[str]:
        out = []
        bad = [w for w in self.weights if math.gcd(w, self.m) != 1]
        if bad:
            out.append(f"weights {bad} are not coprime to {self.m}; the action is not free off the origin")
        if sum(self.weights) % self.m:
            out.append(f"weights sum to {sum(self.weights)}, not 0 mod {self.m}; the generator is not in SL")
        return out

    def generator_matrices(self):
        nil = Cyclotomic.rational(0, self.m)
        diag = [Cyclotomic.root(self.m, w) for w in self.weights]
        return [tuple(tuple(diag[i] if i == j else nil for j in range(self.n)) for i in range(self.n))]

    def to_dict(self) -> dict:
        return {"kind": "lens", "m": self.m, "weights": list(self.weights)}


@dataclass(frozen=True)
class BuiltinSpec:
    name: str

    def resolve(self) -> ExplicitSpec:
        from .builtins import builtin

        return builtin(self.name)

    def generator_matrices(self):
        return self.resolve().generator_matrices()

    @property
    def n(self) -> int:
        return self.resolve().n

    def to_dict(self) -> dict:
        return {"kind": "builtin", "name": self.name}


def _require(obj, key, kind, where):
    if key not in obj:
        raise InputError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputError(f"{where}: field {key!r} has the wrong type")
    return value


def spec_from_dict(obj) -> ExplicitSpec | LensSpec | BuiltinSpec:
    if not isinstance(obj, dict):
        raise InputError("specification must be a JSON object")
    kind = _require(obj, "kind", str, "spec")
    if kind == "builtin":
        return BuiltinSpec(_require(obj, "name", str, "spec"))
    if kind == "lens":
        m = _require(obj, "m", int, "spec")
        weights = _require(obj, "weights", list, "spec")
        if m < 1 or not weights or not all(isinstance(w, int) and not isinstance(w, bool) for w in weights):
            raise InputError("spec: lens needs m >= 1 and a nonempty list of integer weights")
        return LensSpec(m, tuple(weights))
    if kind == "explicit":
        n = _require(obj, "n", int, "spec")
        order = _require(obj, "cyclotomic_order", int, "spec")
        gens = _require(obj, "generators", list, "spec")
        if n < 1 or order < 1 or not gens:
            raise InputError("spec: explicit needs n >= 1, cyclotomic_order >= 1 and generators")
        mats = []
        for gi, g in enumerate(gens):
            if not isinstance(g, list) or len(g) != n:
                raise InputError(f"generators[{gi}]: expected {n} rows")
            rows = []
            for ri, row in enumerate(g):
                if not isinstance(row, list) or len(row) != n:
                    raise InputError(f"generators[{gi}][{ri}]: expected {n} entries")
                entries = []
                for ci, entry in enumerate(row):
                    where = f"generators[{gi}][{ri}][{ci}]"
                    if isinstance(entry, int) and not isinstance(entry, bool):
                        entry = str(entry)
                    if not isinstance(entry, str):
                        raise InputError(f"{where}: entries must be strings")
                    entries.append(parse_expr(entry, order, where))
                rows.append(tuple(entries))
            mats.append(tuple(rows))
        return ExplicitSpec(n, order, tuple(mats), obj.get("name"))
    raise InputError(f"spec: unknown kind {kind!r}; expected explicit, lens or builtin")


def parse_spec(text: str):
    """Parse a JSON group specification."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos, ["valid JSON"], text, f"line {exc.lineno}, column {exc.colno}") from None
    return spec_from_dict(obj)


def print_spec(spec) -> str:
    return json.dumps(spec.to_dict(), indent=2, ensure_ascii=False) + "\n"
