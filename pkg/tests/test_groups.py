import sympy
import pytest

from mckayfloer import groups
from mckayfloer.cyclotomic import Cyclotomic
from mckayfloer.errors import CapExceeded, NotInvertible
from mckayfloer.groups import burnside_class_count, close, conjugacy_classes, element_order, validate
from mckayfloer.io.builtins import STANDARD, builtin


def q(v, order):
    return Cyclotomic.rational(v, order)


def z(order, k=1):
    return Cyclotomic.root(order, k)


def diag(*entries):
    order = entries[0].order
    return tuple(tuple(e if i == j else q(0, order) for j in range(len(entries))) for i, e in enumerate(entries))


QI = ((q(0, 4), z(4)), (z(4), q(0, 4)))
QJ = ((q(0, 4), q(-1, 4)), (q(1, 4), q(0, 4)))


def test_minus_identity_has_order_two():
    g = close([diag(q(-1, 1), q(-1, 1))])
    assert g.order == 2
    assert [len(c.member_indices) for c in conjugacy_classes(g)] == [1, 1]


def test_scalar_cube_roots():
    g = close([diag(z(3), z(3), z(3))])
    assert g.order == 3
    assert len(conjugacy_classes(g)) == 3


def test_quaternion_group():
    g = close([QI, QJ])
    assert g.order == 8
    classes = conjugacy_classes(g)
    assert sorted(c.class_size for c in classes) == [1, 1, 2, 2, 2]
    assert classes[0].rep_index == 0
    for c in classes:
        assert c.rep_index == min(c.member_indices)
        assert list(c.member_indices) == sorted(c.member_indices)


def test_element_orders():
    g = close([QI, QJ])
    assert element_order(g, 0) == 1
    assert element_order(g, g.index_of(diag(q(-1, 4), q(-1, 4)))) == 2
    assert element_order(g, g.index_of(QI)) == 4
    assert all(g.order % element_order(g, i) == 0 for i in range(g.order))


def test_validate_flags():
    rep = validate(close([diag(q(-1, 1), q(-1, 1))]))
    assert rep.in_sl and rep.isolated and rep.small
    rep = validate(close([diag(z(3), z(3, 2), q(1, 3))]))
    assert rep.in_sl and not rep.isolated
    rep = validate(close([diag(q(1, 1), q(-1, 1))]))
    assert not rep.in_sl
    assert not rep.small  # a reflection is a quasi-reflection


def test_singular_generator():
    with pytest.raises(NotInvertible):
        close([diag(q(1, 1), q(0, 1))])


def test_cap_argument_and_environment(monkeypatch):
    with pytest.raises(CapExceeded):
        close([diag(z(7), z(7, 6))], cap=5)
    monkeypatch.setenv("MCKAY_CAP", "4")
    with pytest.raises(CapExceeded):
        close([QI, QJ])


def test_closure_deterministic_and_fixed_point(group_of):
    spec = builtin("binary_tetrahedral")
    a = close(spec.generator_matrices())
    b = close(spec.generator_matrices())
    assert [groups.matrix_key(m) for m in a.elements] == [groups.matrix_key(m) for m in b.elements]
    again = close(a.elements)
    assert again.order == a.order
    assert {groups.matrix_key(m) for m in again.elements} == {groups.matrix_key(m) for m in a.elements}


@pytest.mark.parametrize("name", STANDARD)
def test_group_axioms_and_class_equation(group_of, name):
    g = group_of(name)
    classes = g.classes
    assert sum(c.class_size for c in classes) == g.order
    for c in classes:
        assert c.class_size * c.centralizer_order == g.order
    assert burnside_class_count(g) == len(classes)
    for i in range(g.order):
        assert g.mul(i, g.inverse(i)) == 0


def test_word_products_match_table(monkeypatch, group_of):
    tab = group_of("binary_octahedral")
    monkeypatch.setattr(groups, "TABLE_LIMIT", 0)
    slow = close(builtin("binary_octahedral").generator_matrices())
    assert slow.table is None
    for a in range(0, slow.order, 5):
        for b in range(0, slow.order, 3):
            assert slow.mul(a, b) == tab.mul(a, b)
    assert [c.member_indices for c in slow.classes] == [c.member_indices for c in tab.classes]
    assert [c.centralizer_order for c in slow.classes] == [c.centralizer_order for c in tab.classes]


def _sympy_closure(gens):
    """Brute-force closure with sympy matrices, used as an independent oracle."""
    def key(m):
        return tuple(sympy.nsimplify(sympy.expand(x)) for x in m)

    ident = sympy.eye(gens[0].shape[0])
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = (m * g).applyfunc(sympy.expand)
                k = key(p)
                if k not in seen:
                    seen[k] = p
                    nxt.append(p)
        frontier = nxt
    elems = list(seen.values())
    classes = set()
    for e in elems:
        classes.add(frozenset(key((h * e * h.inv()).applyfunc(sympy.expand)) for h in elems))
    return len(elems), len(classes)


def test_sympy_oracle_quaternion_and_tetrahedral():
    i = sympy.I
    qi = sympy.Matrix([[0, i], [i, 0]])
    qj = sympy.Matrix([[0, -1], [1, 0]])
    assert _sympy_closure([qi, qj]) == (8, 5)
    ti = sympy.Matrix([[i, 0], [0, -i]])
    tj = sympy.Matrix([[0, 1], [-1, 0]])
    om = sympy.Matrix([[1 + i, 1 + i], [i - 1, 1 - i]]) / 2
    order, ncls = _sympy_closure([ti, tj, om])
    g = close(builtin("binary_tetrahedral").generator_matrices())
    assert (order, ncls) == (g.order, len(g.classes)) == (24, 7)
