import itertools
import json

import numpy as np
import pytest

from cyclocode.codes import (CyclicCode, classify_structure, code_from_sequence, encode, factor_product,
                             irreducible_cyclic_code, omega_polynomials, tag_for_factors)
from cyclocode.errors import FieldDividesN, NotADivisor, NotBiquadraticResidue
from cyclocode.field import gf
from cyclocode.poly import Poly
from cyclocode.sequences import SequenceSpec


def test_code_parameters_and_json_roundtrip():
    code = code_from_sequence(SequenceSpec("s1", 13, gf(3)))
    assert (code.n, code.k) == (13, 4)
    back = CyclicCode.from_json(json.dumps(code.to_json()))
    assert back == code
    ext = code_from_sequence(SequenceSpec("s2", 17, gf(4), 0))
    assert CyclicCode.from_json(ext.to_json()) == ext and "modulus" in ext.to_json()


def test_dual_and_generator_matrix():
    code = code_from_sequence(SequenceSpec("s2", 13, gf(3), 0))
    d = code.dual()
    assert d.k == code.n - code.k
    G, H = code.generator_matrix(), d.generator_matrix()
    assert not ((G @ H.T) % 3).any()


def test_codewords_are_cyclic():
    code = code_from_sequence(SequenceSpec("s2", 13, gf(3), 1))
    F = code.field
    words = set()
    for msg in itertools.product(range(3), repeat=code.k):
        words.add(tuple(encode(code, Poly(F, list(msg))).tolist()))
    assert len(words) == 3 ** code.k
    assert all(w[-1:] + w[:-1] in words for w in words)


def test_constructor_errors():
    F = gf(2)
    with pytest.raises(NotADivisor):
        CyclicCode(7, F, Poly.parse(F, "x^2 + 1"))
    with pytest.raises(FieldDividesN):
        CyclicCode(4, F, Poly.parse(F, "x + 1"))


@pytest.mark.parametrize("n,q", [(13, 3), (17, 4), (29, 7), (73, 2), (61, 9)])
def test_omega_product(n, q):
    F = gf(q)
    om = omega_polynomials(n, F)
    prod = factor_product(F, om, ["x-1", "O0", "O1", "O2", "O3"])
    assert prod == Poly.x_n_minus_1(F, n)
    assert all(o.deg == (n - 1) // 4 for o in om.omegas)


def test_omega_normalization():
    F = gf(3)
    om = omega_polynomials(13, F, normalize=True)
    assert om.normalized and F.add(om.periods[0], om.periods[2]) == 0
    with pytest.raises(NotBiquadraticResidue):
        omega_polynomials(13, gf(5))


def test_irreducible_code_parameters():
    F = gf(3)
    c = irreducible_cyclic_code(F, 3, 2)
    cb = irreducible_cyclic_code(F, 3, 2, with_b=True)
    assert (c.n, c.k, cb.k) == (13, 3, 4)
    assert c.generator.divides(Poly.x_n_minus_1(F, 13))


def test_structure_tags():
    assert tag_for_factors({"x-1"}) == "Trivial-(x-1)-complement"
    assert tag_for_factors({"x-1", "O0", "O2"}) == "QuadraticResidue-shape"
    assert tag_for_factors({"x-1", "O0", "O1"}) == "Duadic-shape"
    assert tag_for_factors({"O3"}) == "IrreducibleCheck"
    code = code_from_sequence(SequenceSpec("s2", 13, gf(3), 1))
    tag = classify_structure(code)
    assert tag.tag == "IrreducibleCheck"
