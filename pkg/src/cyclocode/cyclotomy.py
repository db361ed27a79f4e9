"""Cyclotomic classes and numbers mod a prime, quartic decompositions, Gaussian periods."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import sympy

from .errors import (NotCoprime, NotOneModFour, NotPrime, OrderMismatch, SizeLimit,
                     UnsupportedBase)
from .field import FieldCtx, build_extension, gf, is_prime, prime_power


@dataclass(frozen=True)
class CyclotomicCtx:
    n: int
    N: int
    g: int
    classes: tuple[tuple[int, ...], ...]  # C_i in generation order g^(i + N j)
    membership: np.ndarray = field(repr=False, compare=False)  # residue -> class, -1 at 0

    @property
    def class_size(self) -> int:
        return (self.n - 1) // self.N

    def class_of(self, a: int) -> int:
        a %= self.n
        if a == 0:
            raise NotCoprime(f"0 has no class mod {self.n}")
        return int(self.membership[a])

    def sorted_classes(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]

    def to_json(self) -> dict:
        return {"n": self.n, "order": self.N, "generator": self.g,
                "classes": self.sorted_classes()}


@lru_cache(maxsize=None)
def build_classes(n: int, N: int) -> CyclotomicCtx:
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    if N < 1 or (n - 1) % N:
        raise OrderMismatch(f"{N} does not divide {n - 1}")
    g = int(sympy.primitive_root(n))
    powers = np.empty(n - 1, dtype=np.int64)
    powers[0] = 1
    for e in range(1, n - 1):
        powers[e] = powers[e - 1] * g % n
    membership = np.full(n, -1, dtype=np.int64)
    membership[powers] = np.arange(n - 1) % N
    membership.setflags(write=False)
    classes = tuple(tuple(int(v) for v in powers[i::N]) for i in range(N))
    return CyclotomicCtx(n, N, g, classes, membership)


def cyclotomic_number(ctx: CyclotomicCtx, i: int, j: int) -> int:
    """|(C_i + 1) ∩ C_j| by direct count."""
    shifted = (np.array(ctx.classes[i % ctx.N]) + 1) % ctx.n
    return int(np.count_nonzero(ctx.membership[shifted] == j % ctx.N))


def cyclotomic_matrix(ctx: CyclotomicCtx) -> np.ndarray:
    """All (i, j)_N at once."""
    N, n = ctx.N, ctx.n
    out = np.zeros((N, N), dtype=np.int64)
    x = np.arange(1, n - 1)  # x and x+1 both nonzero
    np.add.at(out, (ctx.membership[x], ctx.membership[x + 1]), 1)
    return out


@dataclass(frozen=True)
class QuarticDecomposition:
    n: int
    u: int
    v: int

    def to_json(self) -> dict:
        return {"n": self.n, "u": self.u, "v": self.v}


@lru_cache(maxsize=None)
def quartic_decomposition(n: int) -> QuarticDecomposition:
    """n = u^2 + 4 v^2 with u = 1 mod 4 and v >= 0."""
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    if n % 4 != 1:
        raise NotOneModFour(f"{n} is not 1 mod 4")
    for a in range(1, math.isqrt(n) + 1, 2):
        rest = n - a * a
        if rest % 4 == 0:
            v = math.isqrt(rest // 4)
            if v * v * 4 == rest:
                u = a if a % 4 == 1 else -a
                return QuarticDecomposition(n, u, v)
    raise RuntimeError(f"no decomposition for {n}")  # unreachable for primes = 1 mod 4


_LAYOUT_5 = ("ABCD", "EEDB", "AEAE", "EDBE")
_LAYOUT_1 = ("ABCD", "BDEE", "CECE", "DEEB")


def closed_form_values(n: int, u: int, v: int) -> dict[str, int]:
    """A..E of the order-4 cyclotomic numbers for the given signed (u, v)."""
    if n % 8 == 5:
        nums = {"A": n - 7 + 2 * u, "B": n + 1 + 2 * u - 8 * v, "C": n + 1 - 6 * u,
                "D": n + 1 + 2 * u + 8 * v, "E": n - 3 - 2 * u}
    elif n % 8 == 1:
        nums = {"A": n - 11 - 6 * u, "B": n - 3 + 2 * u + 8 * v, "C": n - 3 + 2 * u,
                "D": n - 3 + 2 * u - 8 * v, "E": n + 1 - 2 * u}
    else:
        raise NotOneModFour(f"{n} is not 1 mod 4")
    out = {}
    for k, val in nums.items():
        if val % 16:
            raise ValueError(f"{k} = {val}/16 is not integral for n={n}, u={u}, v={v}")
        out[k] = val // 16
    return out


def closed_form_table(n: int, u: int, v: int) -> np.ndarray:
    vals = closed_form_values(n, u, v)
    layout = _LAYOUT_5 if n % 8 == 5 else _LAYOUT_1
    return np.array([[vals[ch] for ch in row] for row in layout], dtype=np.int64)


@dataclass(frozen=True)
class ClosedFormResult:
    table_plus_v: np.ndarray
    table_minus_v: np.ndarray
    matched_sign: str | None  # "+v", "-v", "both" or None
    sign_ambiguous: bool  # the two sign choices give different tables

    @property
    def table(self) -> np.ndarray:
        return self.table_minus_v if self.matched_sign == "-v" else self.table_plus_v

    def to_json(self) -> dict:
        return {"table": self.table.tolist(), "matched_sign": self.matched_sign,
                "sign_ambiguous": self.sign_ambiguous}


def closed_form_numbers(ctx: CyclotomicCtx, dec: QuarticDecomposition | None = None) -> ClosedFormResult:
    if ctx.N != 4:
        raise OrderMismatch("closed forms are only tabulated for order 4")
    dec = dec or quartic_decomposition(ctx.n)
    tp = closed_form_table(dec.n, dec.u, dec.v)
    tm = closed_form_table(dec.n, dec.u, -dec.v)
    brute = cyclotomic_matrix(ctx)
    mp, mm = bool((tp == brute).all()), bool((tm == brute).all())
    sign = "both" if mp and mm else "+v" if mp else "-v" if mm else None
    return ClosedFormResult(tp, tm, sign, not bool((tp == tm).all()))


def closed_form_order2(r: int) -> np.ndarray:
    """(i, j)_2 for odd r from the two-case formula."""
    if r % 4 == 1:
        a, b = (r - 5) // 4, (r - 1) // 4
        return np.array([[a, b], [b, b]], dtype=np.int64)
    if r % 4 == 3:
        a, b = (r - 3) // 4, (r + 1) // 4
        return np.array([[a, b], [a, a]], dtype=np.int64)
    raise ValueError("r must be odd")


def biquadratic_class_of(ctx: CyclotomicCtx, q: int) -> int:
    if math.gcd(q, ctx.n) != 1:
        raise NotCoprime(f"gcd({q}, {ctx.n}) != 1")
    return ctx.class_of(q)


def reciprocity_criterion(n: int, base: int) -> bool:
    """Arithmetic test for base in C_0^(4,n), base in {2, 3, 5}."""
    if base not in (2, 3, 5):
        raise UnsupportedBase(f"no criterion for base {base}")
    if base == n:
        raise NotCoprime(f"base equals n={n}")
    dec = quartic_decomposition(n)
    a, b = abs(dec.u), dec.v  # n = a^2 + 4 b^2
    if base == 2:
        return b % 4 == 0  # n = a^2 + 64 (b/4)^2
    if base == 3:
        return (n % 8 == 1 and b % 3 == 0) or (n % 8 == 5 and a % 3 == 0)
    return (2 * b) % 5 == 0


def multiplicative_order(q: int, n: int) -> int:
    return int(sympy.n_order(q, n))


# ---------------------------------------------------------------------------
# Gaussian periods


@dataclass(frozen=True)
class GaussianPeriodReport:
    r: int
    N: int
    periods: tuple[complex, ...]
    bound_literal: int  # floor((N-1) sqrt(r) / N)
    bound_analytic: float  # (N-1) sqrt(r) / N

    def deviations(self) -> list[float]:
        return [abs(eta + 1 / self.N) for eta in self.periods]

    def literal_holds(self, tol: float = 1e-9) -> bool:
        return all(d <= self.bound_literal + tol for d in self.deviations())

    def analytic_holds(self, tol: float = 1e-9) -> bool:
        return all(d <= self.bound_analytic + tol for d in self.deviations())

    def to_json(self) -> dict:
        return {"r": self.r, "N": self.N,
                "periods": [[z.real, z.imag] for z in self.periods],
                "bound_literal": self.bound_literal, "bound_analytic": self.bound_analytic}


GAUSS_LIMIT = 1 << 16


def gaussian_periods(r: int, N: int) -> GaussianPeriodReport:
    """eta_i = sum over x in C_i of exp(2 pi i Tr(x) / p), C_i = alpha^i <alpha^N>."""
    if r > GAUSS_LIMIT:
        raise SizeLimit(f"r={r} above {GAUSS_LIMIT}")
    if (r - 1) % N:
        raise OrderMismatch(f"{N} does not divide {r - 1}")
    F = gf(r)
    p = F.p
    tr = F.absolute_trace(F.exp_table().astype(np.int64))  # Tr(alpha^e)
    chi = np.exp(2j * np.pi * tr / p)
    periods = tuple(complex(chi[i::N].sum()) for i in range(N))
    analytic = (N - 1) * math.sqrt(r) / N
    literal = floor_sqrt_ratio(N - 1, r, N)
    return GaussianPeriodReport(r, N, periods, literal, analytic)


def floor_sqrt_ratio(a: int, r: int, b: int) -> int:
    """floor(a sqrt(r) / b) in exact integer arithmetic, a >= 0, b > 0."""
    x = a * a * r
    t = math.isqrt(x) // b
    while ((t + 1) * b) ** 2 <= x:
        t += 1
    while (t * b) ** 2 > x:
        t -= 1
    return t


# ---------------------------------------------------------------------------
# theta_0 identity


@dataclass(frozen=True)
class ThetaCheck:
    q: int
    n: int
    theta0: int  # element code in the extension
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def theta0_identity(qfield: FieldCtx, n: int) -> ThetaCheck:
    """theta_0 (theta_0 + 1) against (n-1)/4 in GF(q^ord_n(q)), theta_0 over C_0^(2,n)."""
    if n % 4 != 1:
        raise NotOneModFour(f"{n} is not 1 mod 4")
    k = multiplicative_order(qfield.size, n)
    E = build_extension(qfield, k, max_size=None)
    eta = E.root_of_unity(n)
    ctx = build_classes(n, 2)
    theta = 0
    for i in ctx.classes[0]:
        theta = E.add(theta, E.pow(eta, i))
    lhs = E.mul(theta, E.add(theta, 1))
    rhs = E.from_int((n - 1) // 4)
    return ThetaCheck(qfield.size, n, theta, lhs, rhs)
