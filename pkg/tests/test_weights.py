import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclocode.codes import CyclicCode, code_from_sequence
from cyclocode.errors import BudgetExceeded, InconsistentInput
from cyclocode.field import gf
from cyclocode.poly import Poly
from cyclocode.sequences import SequenceSpec
from cyclocode.weights import (krawtchouk, macwilliams_transform, min_weight, plan, random_codeword_upper_bound,
                               tier_budget, weight_enumeration)
from cyclocode.weights.report import WeightReport, distribution_csv


def brute_distribution(code):
    G = code.generator_matrix()
    F = code.field
    dist = [0] * (code.n + 1)
    for msg in itertools.product(range(code.q), repeat=code.k):
        w = np.zeros(code.n, dtype=np.int64)
        for c, row in zip(msg, G):
            if c:
                w = F.vadd(w, F.vscale(c, row))
        dist[int((w != 0).sum())] += 1
    return dist


SMALL = [("s1", 13, 3, 0), ("s2", 13, 3, 0), ("s2", 13, 3, 1), ("s2", 17, 4, 0), ("s2", 17, 2, 1)]


@pytest.mark.parametrize("kind,n,q,rho", SMALL)
def test_enumeration_matches_brute_force(kind, n, q, rho):
    code = code_from_sequence(SequenceSpec(kind, n, gf(q), rho))
    if code.q ** code.k > 3 ** 9:
        code = code.dual()
    e = weight_enumeration(code)
    assert e.distribution == brute_distribution(code)


def test_threads_and_chunks_do_not_change_the_result():
    code = code_from_sequence(SequenceSpec("s2", 73, gf(2), 1))
    a = weight_enumeration(code, threads=1).distribution
    b = weight_enumeration(code, threads=3, chunks=7).distribution
    assert a == b
    code = code_from_sequence(SequenceSpec("s1", 29, gf(7)))
    a = weight_enumeration(code, threads=1).distribution
    b = weight_enumeration(code, threads=2, chunks=5).distribution
    assert a == b


def test_budget():
    code = code_from_sequence(SequenceSpec("s2", 73, gf(2), 1))
    with pytest.raises(BudgetExceeded):
        weight_enumeration(code, budget=1000)
    assert plan(code, 1000) == "bounds-only"
    assert plan(code.dual(), 1 << 20) == "dual-macwilliams"


def test_budget_env(monkeypatch):
    monkeypatch.setenv("CYCLOCODE_BUDGET", "1e3")
    assert tier_budget("fast") == 1000
    monkeypatch.setenv("CYCLOCODE_BUDGET", "0x100")
    assert tier_budget("extended") == 256


def test_krawtchouk_orthogonality():
    n, q = 7, 3
    for i in range(n + 1):
        for j in range(n + 1):
            s = sum(krawtchouk(n, q, i, k) * krawtchouk(n, q, k, j) for k in range(n + 1))
            assert s == (q ** n if i == j else 0)


@pytest.mark.parametrize("kind,n,q,rho", SMALL)
def test_macwilliams_matches_direct(kind, n, q, rho):
    code = code_from_sequence(SequenceSpec(kind, n, gf(q), rho))
    dual = code.dual()
    small, big = (code, dual) if code.k <= dual.k else (dual, code)
    dist = weight_enumeration(small).distribution
    assert macwilliams_transform(dist, n, q, small.k) == weight_enumeration(big, budget=1 << 26).distribution


def test_macwilliams_rejects_bad_input():
    with pytest.raises(InconsistentInput):
        macwilliams_transform([1, 0, 0], 3, 2, 1)
    with pytest.raises(InconsistentInput):
        macwilliams_transform([1, 1, 0], 3, 2, 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 31))
def test_search_never_undercuts_true_distance(seed):
    code = code_from_sequence(SequenceSpec("s2", 17, gf(4), 0))
    ub = random_codeword_upper_bound(code, 5, seed)
    assert ub >= 5


def test_search_finds_minimum_on_binary_code():
    code = code_from_sequence(SequenceSpec("s2", 89, gf(2), 0))
    assert random_codeword_upper_bound(code, 2000, 1, target=7) == 7


def test_min_weight_strategies():
    direct = min_weight(code_from_sequence(SequenceSpec("s1", 13, gf(3))))
    assert (direct.strategy, direct.d, direct.d_even, direct.d_odd) == ("direct", 7, 9, 7)
    dual = min_weight(code_from_sequence(SequenceSpec("s2", 73, gf(2), 0)))
    assert dual.strategy == "dual-macwilliams" and dual.d == 6
    # q-ary dual route splits even and odd weights through a second transform
    code = code_from_sequence(SequenceSpec("s1", 13, gf(3))).dual()
    a = min_weight(code)
    b = min_weight(code, budget=3 ** 8)
    assert b.strategy == "dual-macwilliams" and (a.d, a.d_even, a.d_odd) == (b.d, b.d_even, b.d_odd)
    assert a.distribution == b.distribution


def test_bounds_only_interval_and_json():
    rep = min_weight(code_from_sequence(SequenceSpec("s2", 41, gf(4), 1)), seed=0)
    assert isinstance(rep, WeightReport) and not rep.exact
    assert rep.lower <= 10 == rep.upper
    js = rep.to_json()
    assert js["d"] == [rep.lower, 10] and js["strategy"] == "bounds-only"
    assert distribution_csv([1, 0, 3]).splitlines() == ["weight,count", "0,1", "2,3"]


def test_numpy_fallback_agrees():
    code = ("from cyclocode.codes import code_from_sequence\n"
            "from cyclocode.field import gf\n"
            "from cyclocode.sequences import SequenceSpec\n"
            "from cyclocode.weights import weight_enumeration, random_codeword_upper_bound\n"
            "from cyclocode._accel import backend\n"
            "a = code_from_sequence(SequenceSpec('s2', 73, gf(2), 1))\n"
            "b = code_from_sequence(SequenceSpec('s1', 29, gf(7)))\n"
            "c = code_from_sequence(SequenceSpec('s2', 61, gf(9), 1))\n"
            "print(backend(), weight_enumeration(a).distribution, weight_enumeration(b).distribution,"
            " random_codeword_upper_bound(c, 30, 0))\n")
    outs = []
    for flag in ("0", "1"):
        env = dict(os.environ, CYCLOCODE_NO_NUMBA=flag)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, check=True,
                                   capture_output=True, text=True).stdout.split(" ", 1))
    assert outs[1][0] == "numpy"
    assert outs[0][1] == outs[1][1]
