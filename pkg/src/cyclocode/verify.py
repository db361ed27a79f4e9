"""Case analysis for the order-four sequences and the table of worked examples.

``classify_case`` maps (p, m, n, kind, rho) to one case of the T4/T5/T6 tables
and lists the admissible branches; each branch pairs conditions on measured
quantities with the predicted factor set D of gcd(Lambda, x^n - 1), so that
m = (x^n - 1) / prod(D).  ``verify_prediction`` measures the branch variables,
computes the actual gcd and compares.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .codes import CyclicCode, OmegaFactors, code_from_sequence, omega_polynomials
from .cyclotomy import build_classes, quartic_decomposition
from .errors import CycloError, NormalizationUnavailable, OutOfHypothesis
from .field import FieldCtx, format_poly, gf, is_prime
from .poly import Poly
from .sequences import SequenceSpec, analyze, analyze_period, p_rank, support

LABELS = ("x-1", "O0", "O1", "O2", "O3")
VERDICTS = ("exact-match", "swap-match", "mismatch", "out-of-hypothesis")


def _D(*labels: str) -> frozenset[str]:
    return frozenset(labels)


def swap13(D: Iterable[str]) -> frozenset[str]:
    sw = {"O1": "O3", "O3": "O1"}
    return frozenset(sw.get(x, x) for x in D)


@dataclass(frozen=True)
class Branch:
    when: tuple[tuple[str, int], ...]  # required values of measured variables
    D: frozenset[str]

    def matches(self, measured: dict) -> bool:
        return all(measured.get(k) == v for k, v in self.when)

    def to_json(self) -> dict:
        return {"when": dict(self.when), "gcd_factors": sorted(self.D),
                "m_factors": sorted(set(LABELS) - self.D) or ["all"]}


def _b(D: frozenset[str], **when: int) -> Branch:
    return Branch(tuple(sorted(when.items())), D)


@dataclass(frozen=True)
class TheoremCase:
    theorem: str  # T4, T5, T6
    case: int
    subcase: str | None
    n: int
    p: int
    m: int
    kind: str
    rho: int
    u: int
    v: int
    conditions: dict
    branches: tuple[Branch, ...]

    def predicted_spans(self) -> list[int]:
        return sorted({self.n - factor_degree(b.D, self.n) for b in self.branches})

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "case": self.case, "subcase": self.subcase,
                "params": {"p": self.p, "m": self.m, "n": self.n, "kind": self.kind, "rho": self.rho,
                           "u": self.u, "v": self.v},
                "conditions": dict(self.conditions),
                "branches": [b.to_json() for b in self.branches],
                "predicted_linear_span": self.predicted_spans()}


def factor_degree(D: Iterable[str], n: int) -> int:
    return sum(1 if x == "x-1" else (n - 1) // 4 for x in D)


# ---------------------------------------------------------------------------
# case tables


def _t4_branches(case: int, sub: int) -> tuple[Branch, ...]:
    if sub == 1:
        return (_b(_D("x-1")),)
    if case == 1:
        return (_b(_D("x-1", "O0", "O1"), Lambda=0, Gamma=0),
                _b(_D("x-1", "O0", "O3"), Lambda=0, Gamma=-1),
                _b(_D("x-1", "O1", "O2"), Lambda=-1, Gamma=0),
                _b(_D("x-1", "O2", "O3"), Lambda=-1, Gamma=-1))
    return (_b(_D("x-1", "O0"), Lambda=0), _b(_D("x-1", "O2"), Lambda=-1),
            _b(_D("x-1", "O1"), Gamma=0), _b(_D("x-1", "O3"), Gamma=-1))


def _s2_branches(case: int, rho: int, p_even: bool) -> tuple[Branch, ...]:
    """Branch table shared by n = 1 mod 8 and n = 5 mod 8 (the latter always has p odd)."""
    if case == 1:
        if rho == 0:
            return (_b(_D("x-1", "O3"), eta1=0), _b(_D("x-1", "O1"), eta1=-1))
        return (_b(_D("O1", "O0", "O2"), eta1=0), _b(_D("O3", "O0", "O2"), eta1=-1))
    if case == 2:
        return (_b(_D("x-1")),) if rho == 0 else (_b(_D("O0", "O2")),)
    if case == 3:
        if rho == 1:
            return (_b(_D("O1"), eta1=0), _b(_D("O3"), eta1=-1))
        if p_even:
            return (_b(_D("x-1", "O3", "O0", "O2"), eta1=0), _b(_D("x-1", "O1", "O0", "O2"), eta1=-1))
        return (_b(_D("x-1", "O3", "O2"), eta0=1, eta1=0), _b(_D("x-1", "O1", "O2"), eta0=1, eta1=-1),
                _b(_D("x-1", "O3", "O0"), eta0=-1, eta1=0), _b(_D("x-1", "O1", "O0"), eta0=-1, eta1=-1))
    if case == 4:
        if rho == 1:
            return (_b(_D()),)
        if p_even:
            return (_b(_D("x-1", "O0", "O2")),)
        return (_b(_D("x-1", "O2"), eta0=1), _b(_D("x-1", "O0"), eta0=-1))
    if case == 5:
        if rho == 0:
            return (_b(_D("x-1", "O3"), eta1=0), _b(_D("x-1", "O1"), eta1=-1))
        return (_b(_D("O1"), eta1=0), _b(_D("O3"), eta1=-1))
    return (_b(_D("x-1")),) if rho == 0 else (_b(_D()),)


def _s2_case(a: int, b: int, p: int, one: int) -> int:
    """Case index from the residues a, b; ``one`` is the residue playing the role of one (1 or p - 1)."""
    predicates = [
        (1, a == 0 and b == 0),
        (2, a == 0 and b != 0),
        (3, a == one and b == 0),
        (4, a == one and b != 0),
        (5, a not in (0, one) and b == 0),
        (6, a not in (0, one) and b != 0),
    ]
    hits = [c for c, ok in predicates if ok]
    if len(hits) != 1:
        raise AssertionError(f"residues ({a}, {b}) mod {p} select cases {hits}")
    return hits[0]


def classify_case(p: int, m: int, n: int, kind: str, rho: int = 0) -> TheoremCase:
    kind = kind.lower()
    if not is_prime(p):
        raise OutOfHypothesis(f"p={p} is not prime")
    if not is_prime(n) or n % 4 != 1:
        raise OutOfHypothesis(f"n={n} is not a prime = 1 mod 4")
    if n == p:
        raise OutOfHypothesis("p divides n")
    if ((n - 1) // 4) % p:
        raise OutOfHypothesis(f"(n-1)/4 = {(n - 1) // 4} is not 0 mod {p}")
    dec = quartic_decomposition(n)
    u, v = dec.u, dec.v
    q = p ** m
    in_c0 = build_classes(n, 4).class_of(q % n) == 0
    if kind == "s1":
        if n % 8 == 1:
            res = (v // 2) % p
            cond = {"v/2 mod p": res}
            case, sub = 1, (1 if res else 2)
        else:
            res = ((u * u + 3) // 4) % p
            cond = {"(u^2+3)/4 mod p": res}
            case, sub = 2, (1 if res else 2)
        if sub == 2 and not in_c0:
            raise OutOfHypothesis(f"q={q} is not in C0 mod {n}")
        cond["q in C0"] = in_c0
        return TheoremCase("T4", case, f"subcase {sub}", n, p, m, kind, 0, u, v, cond, _t4_branches(case, sub))
    if kind != "s2":
        raise ValueError(f"unknown sequence kind {kind!r}")
    if rho not in (0, 1):
        raise OutOfHypothesis("rho must be 0 or 1")
    if not in_c0:
        raise OutOfHypothesis(f"q={q} is not in C0 mod {n}")
    if n % 8 == 1:
        a, b = ((n + 1 - 2 * u) // 16) % p, ((n - 3 + 2 * u) // 16) % p
        cond = {"(n+1-2u)/16 mod p": a, "(n-3+2u)/16 mod p": b, "p parity": "even" if p == 2 else "odd"}
        case = _s2_case(a, b, p, 1 % p)
        sub = ("p=2" if p == 2 else "p odd") if case in (3, 4) else None
        return TheoremCase("T5", case, sub, n, p, m, kind, rho, u, v, cond, _s2_branches(case, rho, p == 2))
    a, b = ((3 * n - 1 + 2 * u) // 16) % p, ((3 * n + 3 - 2 * u) // 16) % p
    cond = {"(3n-1+2u)/16 mod p": a, "(3n+3-2u)/16 mod p": b}
    case = _s2_case(a, b, p, (p - 1) % p)
    return TheoremCase("T6", case, None, n, p, m, kind, rho, u, v, cond, _s2_branches(case, rho, False))


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationOutcome:
    case: TheoremCase
    measured: dict
    computed_factors: frozenset[str]
    minimal_poly: Poly
    linear_span: int
    predicted: frozenset[str] | None
    verdict: str
    note: str = ""

    def to_json(self) -> dict:
        return {"case": self.case.to_json(), "measured": dict(self.measured),
                "computed_gcd_factors": sorted(self.computed_factors),
                "minimal_poly": str(self.minimal_poly), "linear_span": self.linear_span,
                "predicted_gcd_factors": None if self.predicted is None else sorted(self.predicted),
                "verdict": self.verdict, "note": self.note}


def _small(F: FieldCtx, x: int) -> int | None:
    if x == 0:
        return 0
    # in characteristic 2 the tables write 1 as -1
    if x == F.neg(1):
        return -1
    if x == 1:
        return 1
    return None


def measure(spec: SequenceSpec, om: OmegaFactors) -> dict:
    F = spec.field
    eta = om.periods
    out = {"eta0": _small(F, eta[0]), "eta1": _small(F, eta[1]),
           "eta2": _small(F, eta[2]), "eta3": _small(F, eta[3]), "rho": spec.rho}
    if spec.kind == "s1":
        # Lambda(eta) over C0 u C1, Gamma(eta) over C1 u C2
        out["Lambda"] = _small(F, F.add(eta[0], eta[1]))
        out["Gamma"] = _small(F, F.add(eta[1], eta[2]))
    return out


def gcd_factors(g: Poly, om: OmegaFactors) -> frozenset[str]:
    F = g.ctx
    rest = g
    found = []
    for lab, f in zip(LABELS, [Poly.x(F) - 1, *om.omegas]):
        q, r = rest.divrem(f)
        if r.is_zero():
            found.append(lab)
            rest = q
    if rest.deg != 0:
        raise CycloError(f"gcd has a factor {rest} outside x-1 and the Omega_i")
    return frozenset(found)


def predicted_minimal_poly(D: Iterable[str], om: OmegaFactors) -> Poly:
    F = om.field
    prod = Poly.one(F)
    for lab in D:
        prod = prod * (Poly.x(F) - 1 if lab == "x-1" else om.omegas[int(lab[1])])
    return Poly.x_n_minus_1(F, om.n) // prod


def verify_prediction(case: TheoremCase, spec: SequenceSpec) -> VerificationOutcome:
    an = analyze(spec)
    try:
        om = omega_polynomials(spec.n, spec.field, normalize=True)
    except NormalizationUnavailable as exc:
        # no eta with eta_0 + eta_2 = 0: report the computed polynomial, force no case
        return VerificationOutcome(case, {}, frozenset(), an.minimal_poly, an.linear_span, None,
                                   "out-of-hypothesis", f"normalization unavailable: {exc}")
    measured = measure(spec, om)
    got = gcd_factors(an.gcd, om)
    live = [b for b in case.branches if b.matches(measured)]
    if not live:
        return VerificationOutcome(case, measured, got, an.minimal_poly, an.linear_span, None, "mismatch",
                                   "measured branch variables fit no branch")
    for b in live:
        if b.D == got:
            assert predicted_minimal_poly(b.D, om) == an.minimal_poly
            return VerificationOutcome(case, measured, got, an.minimal_poly, an.linear_span, b.D, "exact-match")
    for b in live:
        if swap13(b.D) == got:
            return VerificationOutcome(case, measured, got, an.minimal_poly, an.linear_span, b.D, "swap-match")
    return VerificationOutcome(case, measured, got, an.minimal_poly, an.linear_span, live[0].D, "mismatch")


def check(p: int, m: int, n: int, kind: str, rho: int = 0) -> VerificationOutcome | str:
    """classify + verify; returns the string "out-of-hypothesis" when no table applies."""
    try:
        case = classify_case(p, m, n, kind, rho)
    except OutOfHypothesis:
        return "out-of-hypothesis"
    return verify_prediction(case, SequenceSpec(kind, n, gf(p ** m), rho))


def minimal_c0_degree(p: int, n: int) -> int | None:
    C = build_classes(n, 4)
    for m in (1, 2, 4):
        if C.class_of(pow(p, m, n)) == 0:
            return m
    return None


def sweep_pairs(primes: Iterable[int] = (2, 3, 5, 7), n_max: int = 500) -> list[tuple[int, int, int]]:
    """(p, m, n) with n < n_max prime, n = 1 mod 4, (n-1)/4 = 0 mod p, m minimal with p^m in C0."""
    from sympy import primerange

    out = []
    for p in primes:
        for n in primerange(5, n_max):
            if n % 4 != 1 or n == p or ((n - 1) // 4) % p:
                continue
            m = minimal_c0_degree(p, n)
            if m is not None:
                out.append((p, m, n))
    return out


def theorem_sweep(primes: Iterable[int] = (2, 3, 5, 7), n_max: int = 500):
    """Yield ((p, m, n, kind, rho), outcome) over the sweep pairs, for S1 and both S2 variants."""
    for p, m, n in sweep_pairs(primes, n_max):
        for kind, rho in (("s1", 0), ("s2", 0), ("s2", 1)):
            yield (p, m, n, kind, rho), check(p, m, n, kind, rho)


# ---------------------------------------------------------------------------
# registry of worked examples


@dataclass(frozen=True)
class RegistryRow:
    id: str
    p: int
    m: int
    n: int
    kind: str
    rho: int
    generator: str
    k: int
    d: int
    tier: str  # direct, dual, extended, upper
    theorem: str
    case: int

    def spec(self) -> SequenceSpec:
        return SequenceSpec(self.kind, self.n, gf(self.p ** self.m), self.rho)

    @property
    def params(self) -> str:
        base = f"({self.p},{self.m},{self.n},{self.kind.upper()}"
        return base + (f",rho={self.rho})" if self.kind == "s2" else ")")


def _g(*exps: int) -> str:
    return format_poly([1 if i in exps else 0 for i in range(max(exps) + 1)])


REGISTRY: tuple[RegistryRow, ...] = (
    RegistryRow("s1-73", 2, 1, 73, "s1", 0,
                _g(36, 35, 34, 32, 31, 29, 28, 27, 25, 23, 18, 13, 11, 9, 8, 7, 5, 4, 2, 1, 0),
                37, 12, "extended", "T4", 1),
    RegistryRow("s1-89", 2, 1, 89, "s1", 0,
                _g(44, 43, 42, 41, 40, 35, 34, 33, 31, 26, 24, 23, 22, 21, 20, 18, 13, 11, 10, 9, 4, 3, 2, 1, 0),
                45, 15, "extended", "T4", 1),
    RegistryRow("s1-13", 3, 1, 13, "s1", 0, "x^9 + x^7 + x^6 + 2x^4 + x^2 + 2x + 2", 4, 7, "direct", "T4", 2),
    RegistryRow("s1-29", 7, 1, 29, "s1", 0,
                "x^21 + 2x^20 + 2x^19 + 6x^18 + x^17 + 4x^16 + 4x^15 + 4x^13 + 2x^12 + 6x^11 + 5x^10"
                " + x^9 + 2x^8 + 3x^7 + 3x^6 + x^5 + 4x^3 + 2x^2 + x + 6",
                8, 15, "direct", "T4", 2),
    RegistryRow("s2-113-1", 2, 1, 113, "s2", 1, _g(29, 27, 26, 22, 21, 18, 16, 13, 11, 8, 7, 3, 2, 0),
                84, 8, "dual", "T5", 1),
    RegistryRow("s2-113-0", 2, 1, 113, "s2", 0,
                _g(84, 82, 81, 80, 76, 75, 74, 73, 72, 70, 68, 66, 65, 64, 63, 62, 60, 59, 58, 57, 56, 55, 53,
                   47, 46, 43, 42, 41, 38, 37, 31, 29, 28, 27, 26, 25, 24, 22, 21, 20, 19, 18, 16, 14, 12, 11,
                   10, 9, 8, 4, 3, 2, 0),
                29, 28, "direct", "T5", 1),
    RegistryRow("s2-41-0", 2, 2, 41, "s2", 0, format_poly([1] * 41), 1, 41, "direct", "T5", 2),
    RegistryRow("s2-41-1", 2, 2, 41, "s2", 1, _g(21, 19, 18, 16, 15, 14, 12, 9, 7, 6, 5, 3, 2, 0),
                20, 10, "upper", "T5", 2),
    RegistryRow("s2-73-0", 2, 1, 73, "s2", 0, _g(18, 16, 15, 14, 11, 10, 9, 8, 7, 4, 3, 2, 0),
                55, 6, "dual", "T5", 3),
    RegistryRow("s2-89-0", 2, 1, 89, "s2", 0, _g(22, 19, 17, 15, 12, 11, 10, 7, 5, 3, 0),
                67, 7, "dual", "T5", 3),
    RegistryRow("s2-73-1", 2, 1, 73, "s2", 1,
                _g(55, 53, 52, 47, 43, 41, 40, 39, 38, 37, 35, 34, 32, 31, 30, 25, 24, 23, 21, 20, 18, 17, 16,
                   15, 14, 12, 8, 3, 2, 0),
                18, 24, "direct", "T5", 3),
    RegistryRow("s2-89-1", 2, 1, 89, "s2", 1,
                _g(67, 64, 62, 61, 60, 58, 53, 52, 51, 50, 48, 47, 45, 44, 41, 39, 36, 31, 28, 26, 23, 22, 20,
                   19, 17, 16, 15, 14, 9, 7, 6, 5, 3, 0),
                22, 28, "direct", "T5", 3),
    RegistryRow("s2-17-0", 2, 2, 17, "s2", 0, "x^8 + x^7 + x^6 + x^4 + x^2 + x + 1", 9, 5, "direct", "T5", 4),
    RegistryRow("s2-61-1", 3, 2, 61, "s2", 1,
                "x^31 + x^29 + 2x^28 + 2x^27 + 2x^26 + x^25 + 2x^22 + x^19 + 2x^16 + x^15 + 2x^12 + x^9"
                " + 2x^6 + x^5 + x^4 + x^3 + 2x^2 + 2",
                30, 12, "upper", "T6", 2),
    RegistryRow("s2-13-0", 3, 1, 13, "s2", 0, "x^6 + 2x^5 + x^4 + 2x^3 + 2x^2 + 2x + 1", 7, 4, "direct", "T6", 3),
    RegistryRow("s2-13-1", 3, 1, 13, "s2", 1, "x^10 + x^8 + x^7 + x^6 + 2x^5 + 2x^4 + x^2 + 2x + 1",
                3, 9, "direct", "T6", 3),
    RegistryRow("s2-109-1", 3, 1, 109, "s2", 1,
                "x^82 + 2x^80 + 2x^79 + x^78 + x^77 + 2x^76 + 2x^75 + x^74 + x^73 + 2x^72 + 2x^70 + 2x^69"
                " + 2x^66 + 2x^65 + 2x^64 + 2x^63 + 2x^62 + 2x^58 + x^57 + x^56 + 2x^55 + x^53 + 2x^52"
                " + 2x^51 + 2x^50 + x^49 + 2x^48 + 2x^46 + 2x^45 + x^44 + 2x^42 + x^40 + 2x^39 + 2x^38"
                " + 2x^35 + 2x^32 + x^31 + x^29 + 2x^28 + 2x^27 + x^26 + x^25 + x^24 + x^22 + x^21 + x^20"
                " + 2x^16 + 2x^15 + 2x^14 + x^12 + x^11 + 2x^8 + x^7 + 2x^5 + x^3 + 2x + 1",
                27, 42, "upper", "T6", 3),
    RegistryRow("s2-29-0", 7, 1, 29, "s2", 0,
                "x^21 + 3x^19 + 2x^18 + 5x^17 + 5x^16 + 6x^15 + 5x^14 + 4x^13 + 4x^12 + x^11 + 3x^10 + x^9"
                " + 4x^8 + 5x^7 + x^6 + x^5 + 6x^4 + 3x^3 + 4x^2 + 5x + 6",
                8, 15, "direct", "T6", 4),
)


def registry_row(row_id: str) -> RegistryRow:
    for r in REGISTRY:
        if r.id == row_id or r.params == row_id:
            return r
    raise KeyError(row_id)


def swapped_code(spec: SequenceSpec) -> CyclicCode:
    """Code from the same sequence built on g^3 instead of g, which exchanges C1 and C3."""
    C = build_classes(spec.n, 4).classes
    period = np.zeros(spec.n, dtype=np.int64)
    if spec.kind == "s1":
        period[list(C[0]) + list(C[3])] = 1
    else:
        period[list(C[1]) + list(C[2]) + list(C[3])] = 1
        period[0] = spec.rho
    a = analyze_period(spec.field, period, kind=spec.kind, rho=spec.rho)
    return CyclicCode(spec.n, spec.field, a.minimal_poly, name=spec.label() + "'")


@dataclass
class RowOutcome:
    row: RegistryRow
    generator: str
    generator_ok: bool
    swapped: bool
    n: int
    k: int
    d: object
    d_ok: bool | None
    p_rank: int
    case: str
    case_ok: bool
    seconds: float
    weights: dict | None = None

    @property
    def ok(self) -> bool:
        return self.generator_ok and self.k == self.row.k and self.d_ok is not False and self.case_ok \
            and self.p_rank == self.n - self.k

    def to_json(self) -> dict:
        r = self.row
        return {"id": r.id, "params": r.params,
                "expected": {"generator": r.generator, "n": r.n, "k": r.k, "d": r.d, "tier": r.tier,
                             "case": f"{r.theorem} case {r.case}"},
                "computed": {"generator": self.generator, "swapped_labels": self.swapped, "n": self.n,
                             "k": self.k, "d": self.d, "p_rank": self.p_rank, "case": self.case},
                "verdict": "pass" if self.ok else "fail",
                "checks": {"generator": self.generator_ok, "k": self.k == r.k, "d": self.d_ok,
                           "case": self.case_ok, "p_rank": self.p_rank == self.n - self.k},
                "time": round(self.seconds, 3)}


def _check_d(row: RegistryRow, rep) -> tuple[object, bool | None]:
    from .weights.report import WeightReport

    assert isinstance(rep, WeightReport)
    if rep.exact:
        return rep.d, rep.d == row.d
    lo, hi = rep.d
    # the interval must contain the expected value and the search must reach it
    ok = (lo is None or lo <= row.d) and hi == row.d
    return [lo, hi], ok


def run_row(row: RegistryRow, *, weights: bool = True, tier: str = "fast", seed: int = 0,
            threads: int | None = None) -> RowOutcome:
    from .weights.report import min_weight

    t0 = time.perf_counter()
    spec = row.spec()
    code = code_from_sequence(spec)
    gen = str(code.generator)
    swapped = False
    ok = gen == row.generator
    if not ok:
        alt = swapped_code(spec)
        if str(alt.generator) == row.generator:
            code, gen, ok, swapped = alt, str(alt.generator), True, True
    case = classify_case(row.p, row.m, row.n, row.kind, row.rho)
    case_txt = f"{case.theorem} case {case.case}"
    pr = p_rank(support(spec), row.n, row.p)
    d, d_ok, rep_json = None, None, None
    if weights:
        wtier = "extended" if tier == "extended" else "fast"
        rep = min_weight(code, wtier, seed=seed, threads=threads)
        d, d_ok = _check_d(row, rep)
        rep_json = rep.to_json()
        rep_json.pop("distribution", None)
    return RowOutcome(row, gen, ok, swapped, code.n, code.k, d, d_ok, pr, case_txt,
                      (case.theorem, case.case) == (row.theorem, row.case), time.perf_counter() - t0, rep_json)


def reproduce_examples(ids: Iterable[str] | None = None, *, weights: bool = True, tier: str = "fast",
                       seed: int = 0, threads: int | None = None) -> list[RowOutcome]:
    rows = REGISTRY if ids is None else [registry_row(i) for i in ids]
    return [run_row(r, weights=weights, tier=tier, seed=seed, threads=threads) for r in rows]


def outcomes_json(outcomes: list[RowOutcome]) -> str:
    return json.dumps([o.to_json() for o in outcomes], indent=2)


def outcomes_csv(outcomes: list[RowOutcome]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "params", "expected_nkd", "computed_nk", "computed_d", "p_rank", "case", "swapped",
                "verdict", "time"])
    for o in outcomes:
        r = o.row
        w.writerow([r.id, r.params, f"[{r.n},{r.k},{r.d}]", f"[{o.n},{o.k}]", json.dumps(o.d), o.p_rank,
                    o.case, int(o.swapped), "pass" if o.ok else "fail", f"{o.seconds:.3f}"])
    return buf.getvalue()
