"""MacWilliams transform in exact integer arithmetic."""
from __future__ import annotations

from math import comb
from typing import Sequence

from ..errors import InconsistentInput


def krawtchouk(n: int, q: int, i: int, j: int) -> int:
    """K_i(j) = sum_s (-1)^s (q-1)^(i-s) C(j, s) C(n-j, i-s)."""
    return sum((-1) ** s * (q - 1) ** (i - s) * comb(j, s) * comb(n - j, i - s)
               for s in range(0, min(i, j) + 1))


def macwilliams_transform(dual_dist: Sequence[int], n: int, q: int, dual_k: int) -> list[int]:
    """Distribution of C from the distribution of its dual (dimension dual_k)."""
    B = [int(b) for b in dual_dist]
    if len(B) != n + 1:
        raise InconsistentInput(f"expected {n + 1} counts, got {len(B)}")
    if sum(B) != q ** dual_k:
        raise InconsistentInput(f"counts sum to {sum(B)}, not q^{dual_k}")
    size = q ** dual_k
    support = [j for j, b in enumerate(B) if b]
    out = []
    for i in range(n + 1):
        num = sum(B[j] * krawtchouk(n, q, i, j) for j in support)
        a, r = divmod(num, size)
        if r or a < 0:
            raise InconsistentInput(f"A_{i} = {num}/{size} is not a nonnegative integer")
        out.append(a)
    return out
