import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclocode.bounds import (_ceil_minus_sqrt, _floor_plus_sqrt, gaussian_period_bound_check, icc_affine_lower_bound,
                              icc_min_weight, icc_weight_bounds, icc_weights, o4_bounds, o4_conditions,
                              square_root_bounds)
from cyclocode.codes import StructureTag, irreducible_cyclic_code
from cyclocode.errors import Inapplicable, OrderMismatch
from cyclocode.field import gf
from cyclocode.weights import weight_enumeration


@settings(max_examples=300, deadline=None)
@given(st.integers(-10 ** 6, 10 ** 6), st.integers(0, 50), st.integers(1, 10 ** 5), st.integers(1, 500))
def test_exact_sqrt_rounding(A, a, r, B):
    import mpmath

    mpmath.mp.dps = 60
    x = (A - a * mpmath.sqrt(r)) / B
    y = (A + a * mpmath.sqrt(r)) / B
    assert _ceil_minus_sqrt(A, a, r, B) == int(mpmath.ceil(x))
    assert _floor_plus_sqrt(A, a, r, B) == int(mpmath.floor(y))


def test_small_case_literal_against_analytic():
    F = gf(3)
    wb = icc_weight_bounds(F, 3, 2)
    assert (wb.literal["lower"], wb.literal["upper"]) == (10, 8) and not wb.literal["consistent"]
    assert (wb.lower, wb.upper) == (9, 9)
    ab = icc_affine_lower_bound(F, 3, 2)
    assert ab.literal["second"] == Fraction(43, 6) and ab.literal["lower"] == 8
    assert ab.lower == 7
    assert icc_min_weight(F, 3, 2) == 9 and icc_min_weight(F, 3, 2, with_b=True) == 7


@pytest.mark.parametrize("q,k,N", [(3, 3, 2), (2, 4, 3), (2, 6, 3), (4, 3, 3), (5, 2, 3), (3, 4, 5), (2, 8, 5),
                                   (7, 2, 4), (2, 9, 7), (3, 2, 2)])
def test_icc_weights_against_enumeration(q, k, N):
    F = gf(q)
    for with_b in (False, True):
        code = irreducible_cyclic_code(F, k, N, with_b)
        dist = weight_enumeration(code, budget=1 << 24).distribution
        want = {w: a for w, a in enumerate(dist) if a}
        assert icc_weights(F, k, N, with_b) == want


def test_icc_order_mismatch():
    with pytest.raises(OrderMismatch):
        icc_weight_bounds(gf(2), 4, 4)


def test_o4_bounds():
    rep = o4_bounds(13, gf(3))
    assert rep.applicable and rep.contains(9)
    assert rep.to_json()["bound"] == "o4-weights"
    aff = o4_bounds(13, gf(3), with_x_minus_1=True)
    assert aff.lower == 7
    with pytest.raises(Inapplicable, match="q in C0"):
        o4_bounds(13, gf(5))
    assert o4_conditions(15, gf(2)) == {"n prime": False, "n = 1 mod 4": False}


def test_square_root_bounds():
    rep = square_root_bounds(73, StructureTag("Duadic-shape", ("x-1", "O0", "O1")))
    assert rep.analytic["d_odd_lower"] == 9
    assert square_root_bounds(13, "QuadraticResidue-shape").lower == 4
    with pytest.raises(Inapplicable):
        square_root_bounds(13, "Other")


def test_gaussian_bound_forms():
    # the floor form is violated already at r = 5, the unrounded form is not
    assert gaussian_period_bound_check(5, 2, form="literal") is False
    assert gaussian_period_bound_check(5, 2, form="analytic") is True
    assert gaussian_period_bound_check(9, 4, form="analytic") is True
    with pytest.raises(ValueError):
        gaussian_period_bound_check(5, 2, form="other")
