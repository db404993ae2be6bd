import cmath
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mckayfloer.cyclotomic import (
    Cyclotomic,
    cyc_arith,
    cyc_conj,
    cyc_make,
    cyc_to_complex,
    cyclotomic_polynomial,
    euler_phi,
    format_expr,
)
from mckayfloer.errors import DivisionByZero, PromotionOverflow


def test_make_zeta4_squared():
    assert cyc_make(4, 2) == -1
    assert cyc_make(4, 0) == 1


def test_cube_roots_sum():
    total = cyc_arith(cyc_make(3, 0), cyc_arith(cyc_make(3, 1), cyc_make(3, 2), "add"), "add")
    assert total.is_zero()
    assert cyc_make(3, 1) + cyc_make(3, 2) == -1


def test_golden_ratio_embedding():
    re, im = cyc_to_complex(cyc_make(5, 1) + cyc_make(5, 4))
    assert re == pytest.approx(0.6180339887, abs=1e-10)
    assert abs(im) < 1e-12


def test_inverse_pair_and_known_product():
    assert cyc_arith(cyc_make(8, 1), cyc_make(8, 7), "mul") == 1
    assert (1 + cyc_make(3, 1)) * (1 + cyc_make(3, 2)) == 1


def test_promotion():
    assert cyc_make(2, 1).promote(6) == cyc_make(6, 3)
    assert cyc_make(2, 1) == cyc_make(6, 3)
    assert hash(cyc_make(2, 1)) == hash(cyc_make(6, 3))
    mixed = cyc_make(4, 1) * cyc_make(3, 1)
    assert mixed.order == 12 and mixed == cyc_make(12, 7)


def test_conjugation_examples():
    assert cyc_conj(cyc_make(4, 1)) == cyc_make(4, 3)
    assert cyc_conj(Cyclotomic.rational(Fraction(3, 2))) == Fraction(3, 2)
    a = cyc_make(5, 1) + cyc_make(5, 2)
    assert cyc_conj(a) == cyc_make(5, 4) + cyc_make(5, 3)


def test_complex_examples():
    assert cyc_to_complex(Cyclotomic.rational(1)) == (1.0, 0.0)
    re, im = cyc_to_complex(cyc_make(4, 1))
    assert abs(re) < 1e-12 and abs(im - 1) < 1e-12
    re, im = cyc_to_complex(cyc_make(3, 1))
    assert re == pytest.approx(-0.5, abs=1e-9) and im == pytest.approx(0.8660254038, abs=1e-9)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        cyc_arith(cyc_make(3, 1), Cyclotomic.rational(0, 3), "div")
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(1, 5) / Cyclotomic.rational(0, 5)


def test_promotion_cap():
    with pytest.raises(PromotionOverflow):
        cyc_make(1000, 1) * cyc_make(1001, 1)


def test_unknown_operation():
    with pytest.raises(ValueError):
        cyc_arith(cyc_make(3, 1), cyc_make(3, 1), "pow")


@pytest.mark.parametrize("n", range(1, 90))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()))
    assert cyclotomic_polynomial(n) == expected
    assert len(expected) - 1 == euler_phi(n)


def test_format_expr():
    a = Cyclotomic.from_coeffs(8, [Fraction(1, 2), 0, 0, 1])
    assert format_expr(a) == "1/2 + z^3"
    assert format_expr(-cyc_make(5, 1)) == "-z"
    assert format_expr(Cyclotomic.rational(0, 7)) == "0"


# -- properties ---------------------------------------------------------------

orders = st.integers(min_value=1, max_value=60)
small = st.integers(min_value=-5, max_value=5)


@st.composite
def elements(draw, order=None):
    n = order if order is not None else draw(orders)
    coeffs = draw(st.lists(small, min_size=n, max_size=n))
    den = draw(st.integers(min_value=1, max_value=4))
    return Cyclotomic(n, coeffs, den)


@st.composite
def triples(draw):
    n = draw(orders)
    return draw(elements(n)), draw(elements(n)), draw(elements(n))


@settings(max_examples=80, deadline=None)
@given(triples())
def test_ring_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - b) + b == a


@settings(max_examples=80, deadline=None)
@given(elements())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * cyc_arith(Cyclotomic.rational(1, a.order), a, "div") == 1


@settings(max_examples=80, deadline=None)
@given(triples())
def test_float_homomorphism(t):
    a, b, _ = t
    assert abs(complex(a * b) - complex(a) * complex(b)) <= 1e-9
    assert abs(complex(cyc_conj(a)) - complex(a).conjugate()) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(elements())
def test_conjugation_involution_and_galois_consistency(a):
    assert cyc_conj(cyc_conj(a)) == a
    k = next((k for k in range(2, a.order) if math.gcd(k, a.order) == 1), 1)
    expected = sum(complex(c) * cmath.exp(2j * math.pi * j * k / a.order) for j, c in enumerate(a.coeffs))
    assert abs(complex(a.galois(k)) - expected) < 1e-8


@settings(max_examples=60, deadline=None)
@given(elements(), st.integers(min_value=2, max_value=5))
def test_promote_preserves_value(a, factor):
    b = a.promote(a.order * factor)
    assert b == a and hash(b) == hash(a)
    assert abs(complex(b) - complex(a)) < 1e-9
