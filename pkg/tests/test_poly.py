import pytest
from hypothesis import given, settings, strategies as st

from cyclocode.errors import DivisionByZeroPoly
from cyclocode.field import gf
from cyclocode.poly import Poly, gcd, lcm

F3 = gf(3)
coeffs = st.lists(st.integers(0, 2), min_size=1, max_size=15)


@settings(max_examples=150, deadline=None)
@given(coeffs, coeffs)
def test_division_identity(a, b):
    A, B = Poly(F3, a), Poly(F3, b)
    if B.is_zero():
        with pytest.raises(DivisionByZeroPoly):
            A.divrem(B)
        return
    q, r = A.divrem(B)
    assert q * B + r == A
    assert r.is_zero() or r.deg < B.deg


@settings(max_examples=100, deadline=None)
@given(coeffs, coeffs)
def test_gcd_divides_and_lcm(a, b):
    A, B = Poly(F3, a), Poly(F3, b)
    if A.is_zero() or B.is_zero():
        return
    g = gcd(A, B)
    assert g.lead == 1 and g.divides(A) and g.divides(B)
    assert (lcm(A, B) * g).monic() == (A * B).monic()


def test_reciprocal_and_parse():
    f = Poly.parse(F3, "x^3 + 2x + 1")
    assert str(f.reciprocal()) == "x^3 + 2x^2 + 1"
    assert str(Poly.x_n_minus_1(F3, 4)) == "x^4 + 2"


# x^13 - 1 over GF(3): (x + 2) times four cubics
TRUE_CUBICS = ["x^3 + 2x + 2", "x^3 + x^2 + 2", "x^3 + x^2 + x + 2", "x^3 + 2x^2 + 2x + 2"]


def test_x13_minus_1_factorization_over_gf3():
    prod = Poly.parse(F3, "x + 2")
    for c in TRUE_CUBICS:
        prod = prod * Poly.parse(F3, c)
    assert prod == Poly.x_n_minus_1(F3, 13)


def test_x3_2x2_2_is_not_a_factor():
    f = Poly.parse(F3, "x^3 + 2x^2 + 2")
    assert not f.divides(Poly.x_n_minus_1(F3, 13))


@pytest.mark.xfail(strict=True, reason="x^3 + 2x^2 + 2 is not a factor, the right cubic is x^3 + x^2 + 2")
def test_x13_factorization_with_wrong_cubic():
    prod = Poly.parse(F3, "x + 2")
    for c in ["x^3 + 2x + 2", "x^3 + 2x^2 + 2", "x^3 + x^2 + x + 2", "x^3 + 2x^2 + 2x + 2"]:
        prod = prod * Poly.parse(F3, c)
    assert prod == Poly.x_n_minus_1(F3, 13)
