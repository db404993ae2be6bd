"""Finite matrix groups over cyclotomic fields.

:func:`close` enumerates the group generated by a list of matrices by
breadth-first search from the identity.  Products of indices are answered
from a Cayley table for groups up to :data:`TABLE_LIMIT` elements, and by
replaying the BFS word of the right factor otherwise.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .cyclotomic import Cyclotomic
from .errors import CapExceeded, NotInvertible

DEFAULT_CAP = 20000
TABLE_LIMIT = 4096


def default_cap() -> int:
    env = os.environ.get("MCKAY_CAP")
    return int(env) if env else DEFAULT_CAP


def matrix_key(mat) -> tuple:
    return tuple(x.key for row in mat for x in row)


@dataclass(frozen=True)
class ConjClass:
    rep_index: int
    member_indices: tuple[int, ...]
    centralizer_order: int
    class_size: int


@dataclass(frozen=True)
class ValidationReport:
    in_sl: bool
    isolated: bool
    small: bool
    messages: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.in_sl and self.isolated


@dataclass(eq=False)
class MatrixGroup:
    n: int
    field_order: int
    elements: list
    generator_indices: tuple[int, ...]
    right: np.ndarray  # right[i, s] = index of elements[i] * gen[s]
    parent: np.ndarray
    parent_gen: np.ndarray
    _index: dict = field(repr=False, default_factory=dict)
    cache: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, mat) -> int:
        return self._index[matrix_key(linalg.promote(mat, self.field_order))]

    def matrix(self, idx):
        return self.elements[idx]

    # -- products -----------------------------------------------------------
    @cached_property
    def table(self) -> np.ndarray | None:
        size = len(self)
        if size > TABLE_LIMIT:
            return None
        dtype = np.int16 if size < 2**15 else np.int32
        tab = np.empty((size, size), dtype=dtype)
        tab[:, 0] = np.arange(size)
        right = self.right.astype(dtype)
        for h in range(1, size):
            tab[:, h] = right[tab[:, self.parent[h]], self.parent_gen[h]]
        return tab

    def word(self, idx) -> list[int]:
        out = []
        while idx != 0:
            out.append(int(self.parent_gen[idx]))
            idx = int(self.parent[idx])
        return out[::-1]

    def mul(self, a: int, b: int) -> int:
        tab = self.table
        if tab is not None:
            return int(tab[a, b])
        for s in self.word(b):
            a = int(self.right[a, s])
        return a

    @cached_property
    def inverses(self) -> np.ndarray:
        tab = self.table
        if tab is not None:
            return np.argmax(tab == 0, axis=1)
        out = np.empty(len(self), dtype=np.int64)
        for i in range(len(self)):
            out[i] = self.power(i, self.element_order(i) - 1)
        return out

    def inverse(self, idx: int) -> int:
        return int(self.inverses[idx])

    def power(self, idx: int, k: int) -> int:
        if k < 0:
            idx, k = self.inverse(idx), -k
        result, base = 0, idx
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for i in range(len(self)):
            r, cur = 1, i
            while cur != 0:
                cur = self.mul(cur, i)
                r += 1
            out.append(r)
        return tuple(out)

    def element_order(self, idx: int) -> int:
        return self.orders[idx]

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    # -- conjugation --------------------------------------------------------
    @cached_property
    def _generator_conjugations(self) -> list[np.ndarray]:
        # permutation g -> s g s^-1 for each generator s, via matrix products
        perms = []
        for s in self.generator_indices:
            smat = self.elements[s]
            sinv = self.elements[self.power(s, self.element_order(s) - 1)]
            perm = np.empty(len(self), dtype=np.int64)
            for i, mat in enumerate(self.elements):
                perm[i] = self._index[matrix_key(linalg.matmul(linalg.matmul(smat, mat), sinv))]
            perms.append(perm)
        return perms

    def conjugates(self, idx: int) -> np.ndarray:
        tab = self.table
        if tab is not None:
            return np.unique(tab[tab[:, idx], self.inverses])
        seen = {idx}
        frontier = [idx]
        perms = self._generator_conjugations
        while frontier:
            nxt = []
            for g in frontier:
                for perm in perms:
                    h = int(perm[g])
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return np.array(sorted(seen))

    def centralizer(self, idx: int) -> tuple[int, ...]:
        tab = self.table
        if tab is not None:
            return tuple(int(h) for h in np.nonzero(tab[:, idx] == tab[idx, :])[0])
        return tuple(h for h in range(len(self)) if self.mul(h, idx) == self.mul(idx, h))

    def centralizer_order(self, idx: int) -> int:
        tab = self.table
        if tab is not None:
            return int(np.count_nonzero(tab[:, idx] == tab[idx, :]))
        return len(self.centralizer(idx))

    @cached_property
    def classes(self) -> tuple[ConjClass, ...]:
        return tuple(conjugacy_classes(self))

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        out = [0] * len(self)
        for ci, cls in enumerate(self.classes):
            for m in cls.member_indices:
                out[m] = ci
        return tuple(out)


def close(generators, cap: int | None = None) -> MatrixGroup:
    """Enumerate the group generated by `generators`.

    Elements are ordered by BFS from the identity, multiplying on the right
    by the generators in input order.
    """
    if cap is None:
        cap = default_cap()
    gens = [tuple(tuple(row) for row in g) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required")
    n = len(gens[0])
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("generators must be square matrices of equal size")
    order = math.lcm(*(x.order for g in gens for row in g for x in row))
    gens = [linalg.promote(g, order) for g in gens]
    for i, g in enumerate(gens):
        if linalg.det(g).is_zero():
            raise NotInvertible(f"generator {i} is singular")

    ident = linalg.identity(n, order)
    elements = [ident]
    index = {matrix_key(ident): 0}
    right_rows: list[list[int]] = []
    parent, parent_gen = [0], [0]
    head = 0
    while head < len(elements):
        cur = elements[head]
        row = []
        for s, g in enumerate(gens):
            prod = linalg.matmul(cur, g)
            key = matrix_key(prod)
            j = index.get(key)
            if j is None:
                if len(elements) >= cap:
                    raise CapExceeded(f"group closure exceeded cap of {cap} elements")
                j = len(elements)
                index[key] = j
                elements.append(prod)
                parent.append(head)
                parent_gen.append(s)
            row.append(j)
        right_rows.append(row)
        head += 1

    gen_idx = tuple(index[matrix_key(g)] for g in gens)
    return MatrixGroup(
        n=n,
        field_order=order,
        elements=elements,
        generator_indices=gen_idx,
        right=np.array(right_rows, dtype=np.int64),
        parent=np.array(parent, dtype=np.int64),
        parent_gen=np.array(parent_gen, dtype=np.int64),
        _index=index,
    )


def conjugacy_classes(group: MatrixGroup) -> list[ConjClass]:
    """Partition into classes; representative is the lowest index."""
    assigned = np.full(len(group), False)
    out = []
    for g in range(len(group)):
        if assigned[g]:
            continue
        members = group.conjugates(g)
        assigned[members] = True
        cent = group.centralizer_order(g)
        out.append(ConjClass(g, tuple(int(m) for m in members), cent, len(members)))
    return out


def element_order(group: MatrixGroup, idx: int) -> int:
    return group.element_order(idx)


def burnside_class_count(group: MatrixGroup) -> Fraction:
    """(1/|G|) sum over g of |C_G(g)|, each term counted directly."""
    total = sum(group.centralizer_order(g) for g in range(len(group)))
    return Fraction(total, len(group))


def validate(group: MatrixGroup) -> ValidationReport:
    """Check the SL, isolated-singularity and no-quasi-reflection hypotheses.

    Nullity of g - I is the eigenvalue-1 multiplicity; it is constant on
    conjugacy classes, so one representative per class is examined.
    """
    msgs = []
    one = Cyclotomic.rational(1, group.field_order)
    in_sl = True
    for s in group.generator_indices:
        d = linalg.det(group.elements[s])
        if d != one:
            in_sl = False
            msgs.append(f"generator at index {s} has determinant {d}, not 1")
    isolated = small = True
    for cls in group.classes:
        if cls.rep_index == 0:
            continue
        fixed = linalg.nullity(linalg.shift(group.elements[cls.rep_index], one))
        if fixed:
            isolated = False
            msgs.append(f"element {cls.rep_index} has eigenvalue 1 with multiplicity {fixed}")
        if fixed == group.n - 1:
            small = False
            msgs.append(f"element {cls.rep_index} is a quasi-reflection")
    return ValidationReport(in_sl, isolated, small, tuple(msgs))

