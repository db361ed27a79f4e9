"""Cyclic codes: construction from sequences, irreducible trace codes, Omega factors, shapes."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .cyclotomy import build_classes, multiplicative_order
from .errors import (DegreeTooHigh, FieldDividesN, NormalizationUnavailable, NotADivisor,
                     NotBiquadraticResidue, NotFactorable, NotOneModFour)
from .field import (FieldCtx, build_extension, embedding, format_poly, gf, trace_matrix)
from .poly import Poly, gcd, product_over_roots
from .sequences import SequenceSpec, analyze


@dataclass(frozen=True, eq=False)
class CyclicCode:
    n: int
    field: FieldCtx
    generator: Poly
    name: str | None = None

    def __post_init__(self):
        if self.generator.ctx != self.field:
            raise NotADivisor("generator polynomial is over a different field")
        if self.n % self.field.p == 0:
            raise FieldDividesN(f"gcd({self.n}, {self.field.size}) != 1")
        if self.generator.is_zero():
            raise NotADivisor("zero generator")
        g = self.generator.monic()
        object.__setattr__(self, "generator", g)
        h, r = Poly.x_n_minus_1(self.field, self.n).divrem(g)
        if not r.is_zero():
            raise NotADivisor(f"{g} does not divide x^{self.n} - 1")
        object.__setattr__(self, "_check", h)

    @property
    def q(self) -> int:
        return self.field.size

    @property
    def k(self) -> int:
        return self.n - self.generator.deg

    @property
    def check_poly(self) -> Poly:
        return self._check

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicCode) and self.n == other.n and self.generator == other.generator

    def __hash__(self) -> int:
        return hash((self.n, self.generator))

    def __repr__(self) -> str:
        return f"CyclicCode([{self.n},{self.k}] over GF({self.q}), g={self.generator})"

    def dual(self) -> "CyclicCode":
        """Generator of the dual: the reciprocal of h, made monic."""
        h = self.check_poly
        return CyclicCode(self.n, self.field, h.reciprocal().monic(), name=None)

    def generator_matrix(self) -> np.ndarray:
        """Rows x^i g(x), i < k."""
        G = np.zeros((self.k, self.n), dtype=np.int64)
        g = self.generator.c.astype(np.int64)
        for i in range(self.k):
            G[i, i: i + g.size] = g
        return G

    def to_json(self) -> dict:
        out = {"n": self.n, "q": self.q, "generator": str(self.generator), "k": self.k}
        if self.field.degree > 1:
            out["modulus"] = self.field.modulus_str()
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "CyclicCode":
        if isinstance(data, str):
            data = json.loads(data)
        F = gf(int(data["q"]))
        if "modulus" in data and data["modulus"] != F.modulus_str():
            F = FieldCtx(F.p, _parse_modulus(data["modulus"], F.p))
        code = cls.from_generator_string(int(data["n"]), F, data["generator"], name=data.get("name"))
        if "k" in data and int(data["k"]) != code.k:
            raise NotADivisor(f"declared k={data['k']} but generator gives k={code.k}")
        return code

    @classmethod
    def from_generator_string(cls, n: int, field: FieldCtx, text: str, name: str | None = None) -> "CyclicCode":
        return cls(n, field, Poly.parse(field, text), name=name)


def _parse_modulus(text: str, p: int) -> list[int]:
    from .field import parse_poly

    return [c % p for c in parse_poly(text)]


def code_from_sequence(spec: SequenceSpec) -> CyclicCode:
    a = analyze(spec)
    return CyclicCode(spec.n, spec.field, a.minimal_poly, name=spec.label())


def encode(code: CyclicCode, message: Poly) -> np.ndarray:
    if message.ctx != code.field:
        raise NotADivisor("message over a different field")
    if message.deg >= code.k:
        raise DegreeTooHigh(f"message degree {message.deg} >= k={code.k}")
    c = (message * code.generator).c
    out = np.zeros(code.n, dtype=np.int64)
    out[: c.size] = c
    return out


# ---------------------------------------------------------------------------
# Omega factors


@dataclass(frozen=True, eq=False)
class OmegaFactors:
    n: int
    field: FieldCtx
    ext: FieldCtx
    eta: int  # the chosen primitive n-th root of unity (code in ext)
    shift: int  # eta = eta_base^shift
    omegas: tuple[Poly, Poly, Poly, Poly]
    periods: tuple[int, int, int, int]  # sum over C_i of eta^j, as codes in GF(q)
    normalized: bool | None  # None when normalization was not requested or does not apply

    def factor_of(self, i: int) -> Poly:
        return self.omegas[i % 4]

    def powers(self) -> np.ndarray:
        return _eta_powers(self.ext, self.eta, self.n)


def _eta_powers(E: FieldCtx, eta: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=object if not E._small else np.int64)
    cur = 1
    for i in range(n):
        out[i] = cur
        cur = E.mul(cur, eta)
    return out


@lru_cache(maxsize=256)
def _omega_base(n: int, qfield: FieldCtx):
    C = build_classes(n, 4)
    if C.class_of(qfield.size) != 0:
        raise NotBiquadraticResidue(f"q={qfield.size} is not in C_0 mod {n}")
    k = multiplicative_order(qfield.size, n)
    E = build_extension(qfield, k, max_size=None)
    eta = E.root_of_unity(n)
    pw = _eta_powers(E, eta, n)
    emb = embedding(qfield, E)
    periods = []
    omegas = []
    for c in range(4):
        acc = 0
        for i in C.classes[c]:
            acc = E.add(acc, int(pw[i]))
        pre = emb.preimage(acc)
        if pre is None:
            raise NotBiquadraticResidue("period outside GF(q)")  # unreachable for q in C_0
        periods.append(pre)
        poly, ok = product_over_roots(E, qfield, [int(pw[i]) for i in C.classes[c]])
        if not ok:
            raise NotBiquadraticResidue("Omega factor not defined over GF(q)")
        omegas.append(poly)
    return E, eta, tuple(periods), tuple(omegas)


def omega_polynomials(n: int, qfield: FieldCtx, *, normalize: bool = False) -> OmegaFactors:
    """Omega_i(x) = prod over j in C_i of (x - eta^j), i = 0..3.

    With ``normalize`` and (n-1)/4 = 0 mod p, eta is replaced by the first eta^j
    (j running through C_0, C_1, C_2, C_3, each ascending) whose periods satisfy
    eta_0 + eta_2 = 0.
    """
    if n % 4 != 1:
        raise NotOneModFour(f"{n} is not 1 mod 4")
    E, eta, periods, omegas = _omega_base(n, qfield)
    C = build_classes(n, 4)
    F = qfield
    shift, t, normalized = 1, 0, None
    if normalize and ((n - 1) // 4) % F.p == 0:
        normalized = False
        for cls in range(4):
            if F.add(periods[cls], periods[(cls + 2) % 4]) == 0:
                t, shift, normalized = cls, min(C.classes[cls]), True
                break
        if not normalized:
            raise NormalizationUnavailable(f"no eta with eta_0 + eta_2 = 0 for n={n}, q={F.size}")
    # sum over C_c of (eta^j)^i = period of class c + t
    rot = lambda seq: tuple(seq[(c + t) % 4] for c in range(4))  # noqa: E731
    return OmegaFactors(n, F, E, E.pow(eta, shift), shift, rot(omegas), rot(periods), normalized)


# ---------------------------------------------------------------------------
# irreducible cyclic codes


def irreducible_cyclic_code(qfield: FieldCtx, k: int, N: int, with_b: bool = False) -> CyclicCode:
    """Trace code {(Tr(a theta^i) + b)_i} with theta = alpha^N, n = (q^k - 1)/N.

    The generator is the gcd of x^n - 1 with the codeword polynomials of a spanning set.
    """
    F = qfield
    E = build_extension(F, k)
    r = E.size
    if (r - 1) % N:
        raise ValueError(f"{N} does not divide {r - 1}")
    n = (r - 1) // N
    if n <= 1:
        raise ValueError("length must exceed 1")
    alpha = E.primitive_element
    theta = E.pow(alpha, N)
    words = trace_words(F, E, theta, n)
    g = Poly.x_n_minus_1(F, n)
    for w in words:
        g = gcd(g, Poly(F, w))
    if with_b:
        g = gcd(g, Poly(F, np.ones(n, dtype=np.int64)))
    tag = "Cbar" if with_b else "C"
    return CyclicCode(n, F, g, name=f"{tag}({r},{N})")


def trace_words(F: FieldCtx, E: FieldCtx, theta: int, n: int) -> list[np.ndarray]:
    """(Tr_{E/F}(a theta^i))_i for a over a GF(p)-basis of E."""
    T = trace_matrix(E, F)  # m x K
    pw = _eta_powers(E, theta, n)
    out = []
    for j in range(E.degree):
        a = E.pow(E.p, j) if E.degree > 1 else 1
        vals = E.vscale(a, np.asarray(pw, dtype=np.int64))
        D = E.digits_array(vals)
        out.append(F.from_digits_array((D @ T.T) % F.p))
    return out


# ---------------------------------------------------------------------------
# structure


TAGS = ("Trivial-(x-1)-complement", "QuadraticResidue-shape", "Duadic-shape",
        "IrreducibleCheck", "IrreduciblePlusOneCheck", "Other")


@dataclass(frozen=True)
class StructureTag:
    tag: str
    factors: tuple[str, ...]  # subset of "x-1", "O0".."O3" in the check polynomial

    def to_json(self) -> dict:
        return {"tag": self.tag, "factors": list(self.factors)}


def tag_for_factors(factors: frozenset[str] | set[str]) -> str:
    f = set(factors)
    om = sorted(int(s[1]) for s in f if s.startswith("O"))
    one = "x-1" in f
    if one and not om:
        return "Trivial-(x-1)-complement"
    if not one and len(om) == 1:
        return "IrreducibleCheck"
    if one and len(om) == 1:
        return "IrreduciblePlusOneCheck"
    if one and len(om) == 2:
        if om in ([0, 2], [1, 3]):
            return "QuadraticResidue-shape"
        return "Duadic-shape"
    return "Other"


def factor_check(code: CyclicCode, omegas: OmegaFactors | None = None) -> tuple[str, ...]:
    """Factor labels of the check polynomial over {x-1, Omega_0..Omega_3}."""
    if omegas is None:
        omegas = omega_polynomials(code.n, code.field)
    h = code.check_poly
    found = []
    one = Poly.x(code.field) - 1
    cands = [("x-1", one)] + [(f"O{i}", omegas.omegas[i]) for i in range(4)]
    for label, f in cands:
        q, r = h.divrem(f)
        if r.is_zero():
            found.append(label)
            h = q
    if h.deg != 0:
        raise NotFactorable(f"check polynomial has a factor {h} outside x-1, Omega_i")
    return tuple(found)


def classify_structure(code: CyclicCode, omegas: OmegaFactors | None = None) -> StructureTag:
    factors = factor_check(code, omegas)
    return StructureTag(tag_for_factors(set(factors)), factors)


def factor_product(field: FieldCtx, omegas: OmegaFactors, labels) -> Poly:
    out = Poly.one(field)
    for lab in labels:
        out = out * (Poly.x(field) - 1 if lab == "x-1" else omegas.omegas[int(lab[1])])
    return out
