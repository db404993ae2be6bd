"""Dense matrices over a single cyclotomic field.

Matrices are tuples of row tuples of :class:`Cyclotomic`, all of one order.
Rank uses fraction-free elimination (no field inverses); nullspace and
determinant divide by pivots.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic


def zero(order):
    return Cyclotomic.rational(0, order)


def identity(n, order):
    one, nil = Cyclotomic.rational(1, order), zero(order)
    return tuple(tuple(one if i == j else nil for j in range(n)) for i in range(n))


def promote(mat, order):
    return tuple(tuple(x.promote(order) for x in row) for row in mat)


def matmul(a, b):
    cols = list(zip(*b))
    out = []
    for row in a:
        new_row = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                acc = x * y if acc is None else acc + x * y
            new_row.append(acc if acc is not None else zero(row[0].order))
        out.append(tuple(new_row))
    return tuple(out)


def matvec(a, v):
    out = []
    for row in a:
        acc = zero(v[0].order)
        for x, y in zip(row, v):
            if not (x.is_zero() or y.is_zero()):
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def shift(mat, scalar):
    """mat - scalar * I."""
    return tuple(
        tuple(x - scalar if i == j else x for j, x in enumerate(row)) for i, row in enumerate(mat)
    )


def trace(mat):
    acc = mat[0][0]
    for i in range(1, len(mat)):
        acc = acc + mat[i][i]
    return acc


def rank(mat) -> int:
    rows = [list(r) for r in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f.is_zero():
                continue
            rows[i] = [p * x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def nullity(mat) -> int:
    return len(mat[0]) - rank(mat)


def rref(mat):
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in mat]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(mat):
    """Basis of the right kernel, one vector per free column."""
    order = mat[0][0].order
    ncols = len(mat[0])
    rows, pivots = rref(mat)
    one, nil = Cyclotomic.rational(1, order), zero(order)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [nil] * ncols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(tuple(v))
    return basis


def det(mat):
    rows = [list(r) for r in mat]
    n = len(rows)
    order = rows[0][0].order
    result = Cyclotomic.rational(1, order)
    for c in range(n):
        piv = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
        if piv is None:
            return zero(order)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            result = -result
        p = rows[c][c]
        result = result * p
        inv = p.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if not f.is_zero():
                f = f * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def to_numpy(mat):
    import numpy as np

    return np.array([[complex(x) for x in row] for row in mat], dtype=complex)
