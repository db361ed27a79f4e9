"""Weight distributions by Gray-order enumeration, plus planning and reports."""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..codes import CyclicCode
from ..errors import BudgetExceeded
from . import kernels

FAST_BUDGET = 1 << 30
EXTENDED_BUDGET = 1 << 37


def tier_budget(tier: str = "fast") -> int:
    env = os.environ.get("CYCLOCODE_BUDGET")
    if env:
        return int(float(env)) if "e" in env.lower() else int(env, 0)
    if tier == "fast":
        return FAST_BUDGET
    if tier == "extended":
        return EXTENDED_BUDGET
    raise ValueError(f"unknown tier {tier!r}")


def default_threads() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover
        return max(1, os.cpu_count() or 1)


def plan(code: CyclicCode, budget: int | None = None) -> str:
    budget = tier_budget() if budget is None else budget
    if code.q ** code.k <= budget:
        return "direct"
    if code.q ** (code.n - code.k) <= budget:
        return "dual-macwilliams"
    return "bounds-only"


@dataclass
class Enumeration:
    """Histogram split by coordinate sum: even[w], odd[w]."""

    n: int
    q: int
    k: int
    even: np.ndarray
    odd: np.ndarray
    words: int
    seconds: float

    @property
    def distribution(self) -> list[int]:
        return [int(a) + int(b) for a, b in zip(self.even, self.odd)]

    @property
    def d(self) -> int | None:
        return _min_positive(self.distribution)

    @property
    def d_even(self) -> int | None:
        return _min_positive([int(v) for v in self.even])

    @property
    def d_odd(self) -> int | None:
        return _min_positive([int(v) for v in self.odd], allow_zero=True)


def _min_positive(dist, allow_zero: bool = False) -> int | None:
    for w, a in enumerate(dist):
        if a and (w > 0 or allow_zero):
            return w
    return None


def _gfp_rows(code: CyclicCode) -> tuple[np.ndarray, np.ndarray]:
    """GF(p)-spanning rows as (k m, n, m) digit arrays and their coordinate sums."""
    F = code.field
    G = code.generator_matrix()
    m = F.degree
    rows = []
    for i in range(code.k):
        for e in range(m):
            scale = F.p ** e if m > 1 else 1
            rows.append(F.digits_array(F.vscale(scale, G[i])) if m > 1 else G[i][:, None])
    R = np.stack(rows).astype(np.int64) % F.p
    return R, R.sum(axis=1) % F.p


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(a, min(total, a + step)) for a in range(0, total, step)]


def weight_enumeration(code: CyclicCode, *, budget: int | None = None, threads: int | None = None,
                       chunks: int | None = None) -> Enumeration:
    """Exact split histogram over all q^k messages.

    The rank space is cut into ``chunks`` contiguous Gray-rank ranges (default:
    the worker count); each range fills a private histogram and the results are
    summed in range order, so the output does not depend on the worker count.
    """
    budget = tier_budget() if budget is None else budget
    total = code.q ** code.k
    if total > budget:
        raise BudgetExceeded(f"q^k = {total} exceeds the budget {budget}")
    threads = default_threads() if threads is None else max(1, threads)
    chunks = chunks or threads
    n = code.n
    t0 = time.perf_counter()
    if code.q == 2:
        rows = kernels.pack_rows(code.generator_matrix())
        parts = _ranges(total, chunks)
        hists = [np.zeros(n + 1, dtype=np.int64) for _ in parts]

        def work(idx):
            a, b = parts[idx]
            kernels.binary_range(rows, a, b, hists[idx])

        _run(work, len(parts), threads)
        dist = sum(hists[1:], hists[0].copy())
        w = np.arange(n + 1)
        even = np.where(w % 2 == 0, dist, 0)
        odd = np.where(w % 2 == 1, dist, 0)
    else:
        R, S = _gfp_rows(code)
        p = code.field.p
        parts = _ranges(total, chunks)
        hists = [np.zeros((2, n + 1), dtype=np.int64) for _ in parts]

        def work(idx):
            a, b = parts[idx]
            kernels.qary_range(R, S, p, a, b, hists[idx])

        _run(work, len(parts), threads)
        H = sum(hists[1:], hists[0].copy())
        even, odd = H[0], H[1]
    return Enumeration(n, code.q, code.k, even, odd, total, time.perf_counter() - t0)


def _run(work, count: int, threads: int) -> None:
    if threads == 1 or count == 1:
        for i in range(count):
            work(i)
        return
    with ThreadPoolExecutor(max_workers=threads) as ex:
        list(ex.map(work, range(count)))


def weight_distribution_direct(code: CyclicCode, *, budget: int | None = None,
                               threads: int | None = None) -> list[int]:
    return weight_enumeration(code, budget=budget, threads=threads).distribution


def odd_even_min_weights(code: CyclicCode, *, budget: int | None = None,
                         threads: int | None = None) -> tuple[int | None, int | None]:
    e = weight_enumeration(code, budget=budget, threads=threads)
    return e.d_even, e.d_odd
