import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclocode.errors import NotPrime, NotSubfield, ParseError, SizeLimit
from cyclocode.field import (FieldCtx, build_extension, embedding, first_irreducible, format_poly, gf, parse_poly,
                             trace)

FIELDS = [2, 3, 4, 8, 9, 25, 27, 49, 1 << 12]


@pytest.mark.parametrize("q", FIELDS)
def test_axioms_exhaustive_or_sampled(q):
    F = gf(q)
    rng = np.random.default_rng(q)
    xs = rng.integers(0, q, size=(200, 3))
    for a, b, c in xs.tolist():
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_vectorized_matches_scalar():
    F = gf(81)
    a = np.arange(81)
    b = (a * 7 + 3) % 81
    assert F.vmul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vadd(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]


def test_table_and_digit_paths_agree():
    tab = gf(2 ** 10)
    dig = FieldCtx(2, tab.modulus, table_limit=4)
    assert dig.kind == "digits" and tab.kind == "table"
    for a, b in [(3, 900), (1023, 1023), (77, 512)]:
        assert tab.mul(a, b) == dig.mul(a, b)
        assert tab.inv(a) == dig.inv(a)


def test_primitive_element_has_full_order():
    F = gf(27)
    g = F.primitive_element
    seen = {F.pow(g, e) for e in range(26)}
    assert len(seen) == 26


def test_root_of_unity_order():
    F = build_extension(gf(3), 3)
    z = F.root_of_unity(13)
    assert F.pow(z, 13) == 1 and F.pow(z, 1) != 1


def test_first_irreducible_is_lexicographic():
    assert first_irreducible(2, 2) == (1, 1, 1)
    assert first_irreducible(3, 2) == (1, 0, 1)


def test_errors():
    with pytest.raises(NotPrime):
        gf(6)
    with pytest.raises(SizeLimit):
        gf(2 ** 50)
    with pytest.raises(ParseError):
        FieldCtx(2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2
    with pytest.raises(NotSubfield):
        embedding(gf(4), gf(8))


def test_trace_lands_in_subfield_and_is_linear():
    E, F = gf(64), gf(4)
    for a, b in [(5, 9), (63, 1), (17, 40)]:
        ta, tb = trace(E, F, a).value, trace(E, F, b).value
        assert trace(E, F, E.add(a, b)).value == F.add(ta, tb)


def test_embedding_is_a_homomorphism():
    emb = embedding(gf(4), gf(16))
    F, E = gf(4), gf(16)
    for a in range(4):
        for b in range(4):
            assert emb(F.mul(a, b)) == E.mul(emb(a), emb(b))
            assert emb(F.add(a, b)) == E.add(emb(a), emb(b))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=12).filter(lambda c: c[-1] != 0))
def test_format_parse_roundtrip(coeffs):
    assert parse_poly(format_poly(coeffs)) == coeffs


def test_format_examples():
    assert format_poly([2, 2, 1, 0, 2, 0, 1, 1, 0, 1]) == "x^9 + x^7 + x^6 + 2x^4 + x^2 + 2x + 2"
    assert format_poly([0]) == "0"
    with pytest.raises(ParseError):
        parse_poly("x^^2")
