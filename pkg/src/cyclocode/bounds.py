"""Weight bounds for irreducible cyclic codes and the order-4 cyclotomic codes.

Each bound is evaluated twice: in the rounded form (integer parts taken
inside the expression) and in the unrounded analytic form where only the
final value is rounded outward.  Square roots never go through floating
point when a rounding decision depends on them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .codes import StructureTag
from .cyclotomy import build_classes, floor_sqrt_ratio, gaussian_periods, multiplicative_order
from .errors import Inapplicable, OrderMismatch
from .field import FieldCtx, build_extension, is_prime, trace_matrix


def _isqrt_ceil(x: int) -> int:
    s = math.isqrt(x)
    return s if s * s == x else s + 1


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _ceil_minus_sqrt(A: int, a: int, r: int, B: int) -> int:
    """ceil((A - a sqrt r) / B), a >= 0, B > 0."""
    x = a * a * r
    s = math.isqrt(x)
    if s * s == x:
        return _ceil_div(A - s, B)
    # irrational: floor((A - a sqrt r) / B) = floor((A - ceil(a sqrt r)) / B)
    return (A - s - 1) // B + 1


def _floor_plus_sqrt(A: int, a: int, r: int, B: int) -> int:
    """floor((A + a sqrt r) / B)."""
    return (A + math.isqrt(a * a * r)) // B


@dataclass
class BoundReport:
    name: str
    params: dict
    literal: dict
    analytic: dict
    conditions: dict = field(default_factory=dict)

    @property
    def applicable(self) -> bool:
        return all(self.conditions.values())

    @property
    def lower(self) -> int | None:
        return self.analytic.get("lower")

    @property
    def upper(self) -> int | None:
        return self.analytic.get("upper")

    def contains(self, w: int) -> bool:
        lo, hi = self.lower, self.upper
        return (lo is None or w >= lo) and (hi is None or w <= hi)

    def to_json(self) -> dict:
        def enc(d):
            return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in d.items()}
        return {"bound": self.name, "params": dict(self.params), "literal": enc(self.literal),
                "analytic": enc(self.analytic), "conditions": dict(self.conditions),
                "applicable": self.applicable}


def _icc_params(qfield: FieldCtx, k: int, N: int) -> dict:
    q = qfield.size
    r = q ** k
    if N < 1 or (r - 1) % N:
        raise OrderMismatch(f"{N} does not divide {q}^{k} - 1")
    n = (r - 1) // N
    return {"q": q, "k": k, "r": r, "N": N, "N1": math.gcd((r - 1) // (q - 1), N), "n": n}


def icc_weight_bounds(qfield: FieldCtx, k: int, N: int) -> BoundReport:
    """Range of nonzero weights in C(r, N), r = q^k."""
    P = _icc_params(qfield, k, N)
    q, r, N1 = P["q"], P["r"], P["N1"]
    B = q * N
    f = math.isqrt((N1 - 1) ** 2 * r)  # floor((N1-1) sqrt r)
    lit_lo = (q - 1) * _ceil_div(r - f, B)
    lit_hi = (q - 1) * ((r + f) // B)
    s = (N1 - 1) * math.sqrt(r)
    an_lo = _ceil_minus_sqrt((q - 1) * r, (q - 1) * (N1 - 1), r, B)
    an_hi = _floor_plus_sqrt((q - 1) * r, (q - 1) * (N1 - 1), r, B)
    literal = {"lower": lit_lo, "upper": lit_hi, "consistent": lit_lo <= lit_hi}
    analytic = {"lower": an_lo, "upper": an_hi,
                "lower_value": (q - 1) * (r - s) / B, "upper_value": (q - 1) * (r + s) / B}
    return BoundReport("icc-weights", P, literal, analytic)


def icc_affine_lower_bound(qfield: FieldCtx, k: int, N: int) -> BoundReport:
    """Minimum-distance lower bound for the code spanned by C(r, N) and the all-ones word."""
    P = _icc_params(qfield, k, N)
    q, r = P["q"], P["r"]
    B = q * N
    first = icc_weight_bounds(qfield, k, N)
    # rounded form
    A2 = (q - 1) * (r - 1) - 1
    t2_lit = Fraction(A2, B) - Fraction(q - 1, q) * floor_sqrt_ratio(N - 1, r, N)
    lit_val = min(Fraction(first.literal["lower"]), t2_lit)
    # analytic: [A2 - (q-1)(N-1) sqrt r] / (qN)
    t2_an = _ceil_minus_sqrt(A2, (q - 1) * (N - 1), r, B)
    t2_val = (A2 - (q - 1) * (N - 1) * math.sqrt(r)) / B
    literal = {"first": first.literal["lower"], "second": t2_lit, "second_value": float(t2_lit),
               "lower_value": float(lit_val), "lower": math.ceil(lit_val)}
    analytic = {"first": first.analytic["lower"], "second": t2_an, "second_value": t2_val,
                "lower_value": min(first.analytic["lower_value"], t2_val),
                "lower": min(first.analytic["lower"], t2_an), "upper": None}
    return BoundReport("icc-affine-lower", P, literal, analytic)


def o4_conditions(n: int, qfield: FieldCtx) -> dict:
    q = qfield.size
    cond = {"n prime": is_prime(n), "n = 1 mod 4": n % 4 == 1}
    if not all(cond.values()):
        return cond
    cond["gcd(n, q) = 1"] = n % qfield.p != 0
    if not cond["gcd(n, q) = 1"]:
        return cond
    cond["q in C0"] = build_classes(n, 4).class_of(q % n) == 0
    cond["ord_n(q) = (n-1)/4"] = multiplicative_order(q, n) == (n - 1) // 4
    cond["q - 1 < n"] = q - 1 < n
    return cond


def o4_bounds(n: int, qfield: FieldCtx, with_x_minus_1: bool = False) -> BoundReport:
    """Bounds for the code with check polynomial Omega_i (times x - 1 when asked)."""
    cond = o4_conditions(n, qfield)
    failed = [c for c, ok in cond.items() if not ok]
    if failed:
        raise Inapplicable("condition failed: " + ", ".join(failed))
    q = qfield.size
    k = (n - 1) // 4
    r = q ** k
    N = (r - 1) // n
    rep = icc_affine_lower_bound(qfield, k, N) if with_x_minus_1 else icc_weight_bounds(qfield, k, N)
    closed = Fraction(N, q - 1)
    cond["N1 = N/(q-1)"] = closed == rep.params["N1"]
    rep.name = "o4-affine-lower" if with_x_minus_1 else "o4-weights"
    rep.conditions = cond
    return rep


def square_root_bounds(n: int, tag: StructureTag | str) -> BoundReport:
    t = tag.tag if isinstance(tag, StructureTag) else str(tag)
    root = _isqrt_ceil(n)
    if t == "Duadic-shape":
        return BoundReport("sqrt-odd", {"n": n, "tag": t}, {"d_odd_lower": root},
                           {"d_odd_lower": root, "lower": None, "upper": None}, {"duadic": True})
    if t == "QuadraticResidue-shape":
        return BoundReport("sqrt", {"n": n, "tag": t}, {"lower": root},
                           {"lower": root, "d_odd_lower": root, "upper": None}, {"quadratic residue": True})
    raise Inapplicable(f"square-root bound needs a duadic or quadratic-residue shape, got {t}")


def gaussian_period_bound_check(r: int, N: int, *, form: str = "literal", tol: float = 1e-9) -> bool:
    """Whether every |eta_i + 1/N| stays within the (rounded or analytic) bound."""
    rep = gaussian_periods(r, N)
    if form == "literal":
        return rep.literal_holds(tol)
    if form == "analytic":
        return rep.analytic_holds(tol)
    raise ValueError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# exact weights of irreducible cyclic codes


@lru_cache(maxsize=64)
def _trace_powers(qfield: FieldCtx, k: int) -> np.ndarray:
    """Tr_{r/q}(alpha^e) for e = 0..r-2, as codes of the base field."""
    E = build_extension(qfield, k)
    T = trace_matrix(E, qfield)
    D = E.digits_array(E.exp_table().astype(np.int64))
    return qfield.from_digits_array((D @ T.T) % qfield.p).astype(np.int64)


def icc_weights(qfield: FieldCtx, k: int, N: int, with_b: bool = False) -> dict[int, int]:
    """Weight multiplicities of C(r, N), or of C(r, N) + GF(q) 1 when ``with_b``.

    The word for a = alpha^e reads Tr along the residue class e mod N, so each
    class contributes n cyclic shifts of one weight.  Counts are taken over the
    parameter pairs (a, t), t the added constant; they equal codeword counts
    when k = ord_n(q) and the all-ones word lies outside C(r, N).
    """
    P = _icc_params(qfield, k, N)
    q, n = P["q"], P["n"]
    tr = _trace_powers(qfield, k)
    cls = np.arange(tr.size) % N
    if with_b:
        # cells (s, t) hit by Tr(alpha^(s + N i)) = t; -t runs over GF(q) with t
        _, hits = np.unique(cls * q + tr, return_counts=True)
        hist = np.bincount(n - hits, minlength=n + 1) * n
        hist[n] += (N * q - hits.size) * n + q - 1
    else:
        zeros = np.bincount(cls[tr == 0], minlength=N)
        hist = np.bincount(n - zeros, minlength=n + 1) * n
    hist[0] += 1
    dist = {int(w): int(a) for w, a in enumerate(hist) if a}
    return dict(sorted(dist.items()))


def icc_min_weight(qfield: FieldCtx, k: int, N: int, with_b: bool = False) -> int:
    return min(w for w, a in icc_weights(qfield, k, N, with_b).items() if w and a)


@dataclass
class SweepRow:
    q: int
    k: int
    N: int
    n: int
    weights: tuple[int, ...]
    d_affine: int
    bounds: BoundReport
    affine: BoundReport

    @property
    def analytic_ok(self) -> bool:
        return all(self.bounds.contains(w) for w in self.weights) and self.d_affine >= self.affine.lower

    @property
    def literal_ok(self) -> bool:
        lo, hi = self.bounds.literal["lower"], self.bounds.literal["upper"]
        return all(lo <= w <= hi for w in self.weights) and self.d_affine >= self.affine.literal["lower"]

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "N": self.N, "n": self.n, "weights": list(self.weights),
                "d_affine": self.d_affine, "analytic_ok": self.analytic_ok, "literal_ok": self.literal_ok,
                "bounds": self.bounds.to_json(), "affine": self.affine.to_json()}


def icc_sweep(r_max: int = 1 << 14):
    """Every C(r, N) with r = q^k < r_max, N > 1, n = (r-1)/N > 1 and ord_n(q) = k."""
    from sympy import divisors, primerange

    from .field import gf

    for p in primerange(2, r_max):
        q = p
        while q < r_max:
            r = q
            k = 1
            while r < r_max:
                for N in divisors(r - 1):
                    n = (r - 1) // N
                    if N == 1 or n == 1 or multiplicative_order(q, n) != k:
                        continue
                    F = gf(q)
                    ws = tuple(w for w in icc_weights(F, k, N) if w)
                    d_aff = icc_min_weight(F, k, N, with_b=True)
                    yield SweepRow(q, k, N, n, ws, d_aff, icc_weight_bounds(F, k, N),
                                   icc_affine_lower_bound(F, k, N))
                r *= q
                k += 1
            q *= p
