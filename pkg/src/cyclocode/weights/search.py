"""Stochastic upper bounds on the minimum weight by information-set search."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..codes import CyclicCode
from ..field import FieldCtx
from . import kernels

DEFAULT_TRIALS = 10 ** 6


@lru_cache(maxsize=None)
def _tables(F: FieldCtx) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    q = F.size
    a = np.arange(q)
    add = np.stack([F.vadd(np.full(q, x), a) for x in range(q)]).astype(np.int64)
    mul = np.stack([F.vmul(np.full(q, x), a) for x in range(q)]).astype(np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inv[x] = F.inv(x)
    neg = F.vneg(a).astype(np.int64)
    return add, mul, inv, neg


def random_codeword_upper_bound(code: CyclicCode, trials: int = DEFAULT_TRIALS, seed: int = 0, *,
                                target: int | None = None) -> int | None:
    """Min weight seen over ``trials`` random information sets.

    Each trial permutes the coordinates, brings the generator matrix to
    systematic form on the first independent columns and inspects every row
    and every pair row_i + a row_j.  Stops early once ``target`` is reached.
    Returns None for the zero code.
    """
    if code.k == 0:
        return None
    if trials < 1:
        raise ValueError("trials must be >= 1")
    G = code.generator_matrix()
    tabs = _tables(code.field)
    rng = np.random.default_rng(seed)
    # deterministic probe: the cyclic generator rows themselves
    best = int((G != 0).sum(axis=1).min())
    best = kernels.isd_trial(G, np.arange(code.n), tabs, best)
    for _ in range(trials):
        if target is not None and best <= target:
            break
        perm = rng.permutation(code.n)
        best = kernels.isd_trial(G, perm, tabs, best)
    return best
