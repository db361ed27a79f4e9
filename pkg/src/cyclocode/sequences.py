"""The order-four cyclotomic sequences, their minimal polynomials and linear spans."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cyclotomy import build_classes
from .errors import FieldDividesN, NotOneModFour, NotPrime
from .field import FieldCtx, build_prime_field, is_prime
from .poly import Poly, gcd


@dataclass(frozen=True)
class SequenceSpec:
    kind: str  # "s1" or "s2"
    n: int
    field: FieldCtx
    rho: int = 0

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in ("s1", "s2"):
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if not is_prime(self.n):
            raise NotPrime(f"{self.n} is not prime")
        if self.n % 4 != 1:
            raise NotOneModFour(f"{self.n} is not 1 mod 4")
        if self.n == self.field.p:
            raise FieldDividesN(f"gcd({self.n}, {self.field.size}) != 1")
        if self.rho not in (0, 1):
            raise ValueError("rho must be 0 or 1")
        if kind == "s1" and self.rho:
            raise ValueError("rho only applies to s2")

    @property
    def q(self) -> int:
        return self.field.size

    def label(self) -> str:
        base = f"({self.field.p},{self.field.degree},{self.n},{self.kind.upper()}"
        return base + (f",rho={self.rho})" if self.kind == "s2" else ")")


def support(spec: SequenceSpec) -> list[int]:
    C = build_classes(spec.n, 4).classes
    if spec.kind == "s1":
        s = set(C[0]) | set(C[1])
    else:
        s = set(C[1]) | set(C[2]) | set(C[3])
        if spec.rho:
            s.add(0)
    return sorted(s)


def generate(spec: SequenceSpec) -> np.ndarray:
    """One period as a 0/1 vector (entries are codes of 0 and 1 in GF(q))."""
    out = np.zeros(spec.n, dtype=np.int64)
    out[support(spec)] = 1
    return out


def period_string(period: Sequence[int]) -> str:
    return "".join(str(int(v)) if int(v) < 10 else f"[{int(v)}]" for v in period)


@dataclass(frozen=True)
class SequenceAnalysis:
    n: int
    field: FieldCtx
    period: np.ndarray
    Lambda: Poly
    gcd: Poly
    minimal_poly: Poly
    linear_span: int
    kind: str | None = None
    rho: int | None = None

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.field.size, "kind": self.kind, "rho": self.rho,
                "linear_span": self.linear_span, "minimal_poly": str(self.minimal_poly)}


def analyze_period(field: FieldCtx, period: Sequence[int], *, kind: str | None = None,
                   rho: int | None = None) -> SequenceAnalysis:
    """m = (x^n - 1) / gcd(Lambda, x^n - 1) for the given first period."""
    n = len(period)
    lam = Poly(field, np.asarray(period, dtype=np.int64))
    xn1 = Poly.x_n_minus_1(field, n)
    g = gcd(lam, xn1) if not lam.is_zero() else xn1.monic()
    m, r = xn1.divrem(g)
    assert r.is_zero()
    return SequenceAnalysis(n, field, np.asarray(period), lam, g, m, m.deg, kind, rho)


def analyze(spec: SequenceSpec) -> SequenceAnalysis:
    return analyze_period(spec.field, generate(spec), kind=spec.kind, rho=spec.rho)


def berlekamp_massey(seq: Sequence[int], field: FieldCtx) -> tuple[Poly, int]:
    """Shortest LFSR: (connection polynomial C with C(0) = 1, linear span L).

    The all-zero sequence returns (1, 0).
    """
    F = field
    s = [int(v) for v in seq]
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for i in range(len(s)):
        d = s[i]
        for j in range(1, L + 1):
            if j < len(C) and C[j]:
                d = F.add(d, F.mul(C[j], s[i - j]))
        if d == 0:
            m += 1
            continue
        coef = F.div(d, b)
        T = list(C)
        need = len(B) + m
        if len(C) < need:
            C = C + [0] * (need - len(C))
        for j, bj in enumerate(B):
            if bj:
                C[j + m] = F.sub(C[j + m], F.mul(coef, bj))
        if 2 * L <= i:
            L, B, b, m = i + 1 - L, T, d, 1
        else:
            m += 1
    return Poly(F, C), L


def bm_minimal_poly(seq: Sequence[int], field: FieldCtx) -> tuple[Poly, int]:
    """Monic scaling of the Berlekamp-Massey connection polynomial, and L.

    With the c_0 = 1 feedback convention, S(x) = Lambda(x) / (1 - x^n) = P(x) / C(x),
    so C is the gcd-construction minimal polynomial up to the unit -1.
    """
    C, L = berlekamp_massey(seq, field)
    return C.monic(), L


def p_rank(support_set: Iterable[int], n: int, p: int) -> int:
    """Linear span over GF(p) of the characteristic sequence of a subset of Z_n."""
    F = build_prime_field(p)
    if n % p == 0:
        raise FieldDividesN(f"gcd({n}, {p}) != 1")
    period = np.zeros(n, dtype=np.int64)
    idx = [int(i) % n for i in support_set]
    period[idx] = 1
    return analyze_period(F, period).linear_span


def class_union(n: int, labels: Iterable[int], order: int = 4) -> list[int]:
    C = build_classes(n, order).classes
    out: set[int] = set()
    for i in labels:
        out |= set(C[i])
    return sorted(out)
