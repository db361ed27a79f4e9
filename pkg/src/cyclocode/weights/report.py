"""Minimum-weight reports: pick a strategy, run it, and fall back to an interval."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

from ..codes import CyclicCode
from ..errors import CycloError
from ..poly import Poly, gcd
from .enumerate import EXTENDED_BUDGET, FAST_BUDGET, _min_positive, plan, tier_budget, weight_enumeration
from .macwilliams import macwilliams_transform
from .search import random_codeword_upper_bound

SEARCH_TRIALS = {"fast": 2000, "extended": 100_000}

Bound = int | None | tuple[int | None, int | None]


@dataclass
class WeightReport:
    n: int
    k: int
    q: int
    strategy: str
    d: Bound
    d_even: Bound
    d_odd: Bound
    distribution: list[int] | None = None
    words_enumerated: int = 0
    time_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return not isinstance(self.d, tuple)

    @property
    def lower(self) -> int | None:
        return self.d[0] if isinstance(self.d, tuple) else self.d

    @property
    def upper(self) -> int | None:
        return self.d[1] if isinstance(self.d, tuple) else self.d

    def to_json(self) -> dict:
        def enc(b):
            return list(b) if isinstance(b, tuple) else b
        out = {"n": self.n, "k": self.k, "q": self.q, "strategy": self.strategy, "d": enc(self.d),
               "d_even": enc(self.d_even), "d_odd": enc(self.d_odd),
               "time_ms": round(self.time_ms, 3), "words_enumerated": self.words_enumerated}
        if self.distribution is not None:
            out["distribution"] = [str(a) for a in self.distribution]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def distribution_csv(distribution: list[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "count"])
    for i, a in enumerate(distribution):
        if a:
            w.writerow([i, a])
    return buf.getvalue()


def _dual_distribution(code: CyclicCode, budget: int, threads: int | None) -> tuple[list[int], int]:
    dual = code.dual()
    e = weight_enumeration(dual, budget=budget, threads=threads)
    return macwilliams_transform(e.distribution, code.n, code.q, dual.k), e.words


def _even_like_dual(code: CyclicCode) -> CyclicCode | None:
    """Dual of the even-like subcode, or None when the code is entirely even-like."""
    dual = code.dual()
    F = code.field
    ones = Poly(F, [1] * code.n)
    if dual.generator.divides(ones):
        return None
    g = gcd(dual.generator, ones)
    return CyclicCode(code.n, F, g)


def _split_from_dual(code: CyclicCode, dist: list[int], budget: int,
                     threads: int | None) -> tuple[Bound, Bound, int]:
    n = code.n
    if code.q == 2:
        even = [a if i % 2 == 0 else 0 for i, a in enumerate(dist)]
        odd = [a if i % 2 else 0 for i, a in enumerate(dist)]
        return _min_positive(even), _min_positive(odd, allow_zero=True), 0
    ed = _even_like_dual(code)
    if ed is None:
        return _min_positive(dist), None, 0
    if code.q ** ed.k > budget:
        d = _min_positive(dist)
        return (d, None), (d, None), 0
    e = weight_enumeration(ed, budget=budget, threads=threads)
    even = macwilliams_transform(e.distribution, n, code.q, ed.k)
    odd = [a - b for a, b in zip(dist, even)]
    return _min_positive(even), _min_positive(odd, allow_zero=True), e.words


def structural_lower_bounds(code: CyclicCode) -> tuple[int, int | None, list[str]]:
    """(lower bound on d, lower bound on d_odd, notes) from the bounds module."""
    from ..bounds import o4_bounds, square_root_bounds
    from ..codes import classify_structure

    notes = []
    lo = 1 if code.generator.deg == 0 else 2
    lo_odd = None
    try:
        tag = classify_structure(code)
    except CycloError:
        return lo, lo_odd, notes
    factors = set(tag.factors)
    omegas = [f for f in factors if f.startswith("O")]
    if len(omegas) == 1 and factors <= {"x-1", omegas[0]}:
        try:
            rep = o4_bounds(code.n, code.field, with_x_minus_1="x-1" in factors)
            if rep.lower is not None and rep.lower > lo:
                lo = rep.lower
                notes.append(f"{rep.name} lower bound {rep.lower}")
        except CycloError:
            pass
    try:
        rep = square_root_bounds(code.n, tag)
        lo_odd = rep.analytic["d_odd_lower"]
        notes.append(f"{rep.name} bound: d_odd >= {lo_odd}")
        if rep.lower is not None and rep.lower > lo:
            lo = rep.lower
    except CycloError:
        pass
    return lo, lo_odd, notes


def min_weight(code: CyclicCode, tier: str = "fast", *, seed: int = 0, threads: int | None = None,
               budget: int | None = None, trials: int | None = None) -> WeightReport:
    """Exact minimum weight when the planned enumeration fits the budget, else an interval."""
    budget = tier_budget(tier) if budget is None else budget
    strategy = plan(code, budget)
    t0 = time.perf_counter()
    n, k, q = code.n, code.k, code.q
    if k == 0:
        return WeightReport(n, k, q, strategy, None, None, None, [1] + [0] * n, 1,
                            (time.perf_counter() - t0) * 1e3)
    if strategy == "direct":
        e = weight_enumeration(code, budget=budget, threads=threads)
        return WeightReport(n, k, q, strategy, e.d, e.d_even, e.d_odd, e.distribution, e.words,
                            (time.perf_counter() - t0) * 1e3)
    if strategy == "dual-macwilliams":
        dist, words = _dual_distribution(code, budget, threads)
        d_even, d_odd, extra = _split_from_dual(code, dist, budget, threads)
        return WeightReport(n, k, q, strategy, _min_positive(dist), d_even, d_odd, dist, words + extra,
                            (time.perf_counter() - t0) * 1e3)
    lo, lo_odd, notes = structural_lower_bounds(code)
    trials = SEARCH_TRIALS.get(tier, SEARCH_TRIALS["fast"]) if trials is None else trials
    hi = random_codeword_upper_bound(code, trials, seed, target=lo)
    notes.append(f"search: {trials} trials, seed {seed}")
    d: Bound = hi if hi == lo else (lo, hi)
    d_odd: Bound = (lo_odd if lo_odd is not None else lo, None)
    d_even: Bound = (max(lo, 2) if q == 2 else lo, None)
    return WeightReport(n, k, q, strategy, d, d_even, d_odd, None, 0,
                        (time.perf_counter() - t0) * 1e3, notes)


__all__ = ["WeightReport", "min_weight", "distribution_csv", "structural_lower_bounds",
           "FAST_BUDGET", "EXTENDED_BUDGET"]
