"""Finite fields GF(p^K) with a fixed, reproducible representation.

Elements are plain Python ints holding the base-p digits of the coefficient
vector, so ``a = sum(d_i * p**i)`` stands for ``sum(d_i * y**i)`` modulo the
field modulus.  Prime fields use the residue itself.  Fields up to
``DEFAULT_TABLE_LIMIT`` elements get exp/log tables; larger ones fall back to
digit-vector multiplication, which is slower but has no size ceiling beyond
the caller-supplied ``max_size``.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np
import sympy

from ._accel import HAVE_NUMBA, njit
from .errors import FieldMismatch, NotPrime, NotSubfield, ParseError, SizeLimit, ZeroElement

DEFAULT_ARITH_LIMIT = 1 << 40
DEFAULT_TABLE_LIMIT = 1 << 24
# above this the primitive element is not searched for eagerly by helpers that
# only need a root of unity (factoring q-1 gets expensive)
PRIMITIVE_SEARCH_LIMIT = 1 << 128
_BLOCK = 1 << 16


def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    f = sympy.factorint(q)
    if len(f) != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, m), = f.items()
    return int(p), int(m)


# ---------------------------------------------------------------------------
# polynomial strings


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Descending-power string, e.g. ``x^9 + 2x^4 + x + 2``; coefficients low to high."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[e])
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        mono = var if e == 1 else f"{var}^{e}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_poly(text: str, var: str = "x") -> list[int]:
    """Inverse of :func:`format_poly`. Signs are accepted; coefficients are returned unreduced."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial string")
    mono = re.compile(r"^(\d*)\*?(?:(%s)(?:\^(\d+))?)?$" % re.escape(var))
    out: dict[int, int] = {}
    pos = 0
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2)
        t = mono.match(body)
        if not t or (not t.group(1) and not t.group(2)):
            raise ParseError(f"bad term {body!r} in {text!r}")
        coef = int(t.group(1)) if t.group(1) else 1
        if t.group(2):
            e = int(t.group(3)) if t.group(3) else 1
        else:
            e = 0
        out[e] = out.get(e, 0) + (-coef if sign == "-" else coef)
    if pos != len(s):
        raise ParseError(f"trailing garbage in {text!r}")
    deg = max(out)
    return [out.get(i, 0) for i in range(deg + 1)]


# ---------------------------------------------------------------------------
# GF(p)[y] helpers on int64 coefficient arrays, low to high


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _gfp_rem(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = _trim(a % p).copy()
    db = b.size - 1
    inv = pow(int(b[-1]), p - 2, p)
    while a.size - 1 >= db:
        c = int(a[-1]) * inv % p
        s = a.size - 1 - db
        a[s:] = (a[s:] - c * b) % p
        a = _trim(a)
    return a


def _gfp_gcd_np(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = _trim(np.asarray(a, dtype=np.int64) % p)
    b = _trim(np.asarray(b, dtype=np.int64) % p)
    while b.size:
        a, b = b, _gfp_rem(a, b, p)
    if a.size:
        a = a * pow(int(a[-1]), p - 2, p) % p
    return a


@njit(cache=True)
def _gfp_gcd_nb(a, b, p):
    u = a.copy() % p
    v = b.copy() % p
    du = u.size - 1
    while du >= 0 and u[du] == 0:
        du -= 1
    dv = v.size - 1
    while dv >= 0 and v[dv] == 0:
        dv -= 1
    while dv >= 0:
        # u <- u mod v
        inv = 1
        e, base = p - 2, v[dv]
        while e:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        while du >= dv:
            c = u[du] * inv % p
            s = du - dv
            for i in range(dv + 1):
                u[s + i] = (u[s + i] - c * v[i]) % p
            while du >= 0 and u[du] == 0:
                du -= 1
        u, v = v, u
        du, dv = dv, du
    out = u[: du + 1].copy()
    if du >= 0:
        inv = 1
        e, base = p - 2, out[du]
        while e:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for i in range(du + 1):
            out[i] = out[i] * inv % p
    return out


def _gfp_gcd(a, b, p: int) -> np.ndarray:
    if HAVE_NUMBA:
        return _gfp_gcd_nb(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64), np.int64(p))
    return _gfp_gcd_np(a, b, p)


def _reduction_matrix(f_low: np.ndarray, p: int) -> np.ndarray:
    """Row i holds y^(K+i) mod f for i < K-1."""
    K = f_low.size
    R = np.zeros((max(K - 1, 0), K), dtype=np.int64)
    cur = (-f_low) % p
    for i in range(K - 1):
        R[i] = cur
        top = cur[-1]
        cur = np.concatenate(([0], cur[:-1]))
        if top:
            cur = (cur - top * f_low) % p
    return R


def _mulmod(a: np.ndarray, b: np.ndarray, R: np.ndarray, p: int) -> np.ndarray:
    K = a.size
    c = np.convolve(a, b)
    if K == 1:
        return c % p
    return (c[:K] + c[K:] @ R) % p


def _powmod(a: np.ndarray, e: int, R: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros_like(a)
    out[0] = 1
    base = a
    while e:
        if e & 1:
            out = _mulmod(out, base, R, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, R, p)
    return out


def _is_irreducible(f_low: np.ndarray, p: int) -> bool:
    """Ben-Or test for the monic polynomial y^K + sum f_low[i] y^i."""
    K = f_low.size
    if K == 1:
        return True
    if f_low[0] == 0:
        return False
    f = np.concatenate((f_low, [1])).astype(np.int64)
    # roots in GF(p)
    for t in range(p):
        if int(np.polyval(f[::-1], t)) % p == 0:
            return False
    R = _reduction_matrix(f_low, p)
    x = np.zeros(K, dtype=np.int64)
    x[1] = 1
    xp = _powmod(x, p, R, p)
    # cheap small-degree factor screen before building the Frobenius matrix
    h = xp
    for j in range(1, min(12, K // 2) + 1):
        if j > 1:
            h = _powmod(h, p, R, p)
        if _gfp_gcd(f, (h - x) % p, p).size > 1:
            return False
    # Frobenius matrix: row i = y^(p i) mod f
    Q = np.zeros((K, K), dtype=np.int64)
    Q[0, 0] = 1
    for i in range(1, K):
        Q[i] = _mulmod(Q[i - 1], xp, R, p)
    h = xp
    for j in range(1, K // 2 + 1):
        if j > 1:
            h = (h @ Q) % p
        g = _gfp_gcd(f, (h - x) % p, p)
        if g.size > 1:
            return False
    return True


@lru_cache(maxsize=None)
def first_irreducible(p: int, K: int) -> tuple[int, ...]:
    """First monic irreducible of degree K over GF(p), low coefficients varying fastest."""
    for t in itertools.count():
        low = []
        v = t
        for _ in range(K):
            low.append(v % p)
            v //= p
        if v:
            break
        f_low = np.array(low, dtype=np.int64)
        if _is_irreducible(f_low, p):
            return tuple(low) + (1,)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def _factor_keys(n: int) -> tuple[int, ...]:
    return tuple(sorted(int(k) for k in sympy.factorint(n)))


# ---------------------------------------------------------------------------


class FieldCtx:
    """GF(p^K).  Build through :func:`build_prime_field` / :func:`build_extension`."""

    def __init__(self, p: int, modulus: Sequence[int] | None = None, *,
                 table_limit: int = DEFAULT_TABLE_LIMIT, check: bool = True):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = int(p)
        if modulus is None or len(modulus) <= 2:
            self.degree = 1
            self.modulus: tuple[int, ...] | None = None
        else:
            mod = tuple(int(c) % p for c in modulus)
            if mod[-1] != 1:
                raise ParseError("modulus must be monic")
            self.degree = len(mod) - 1
            self.modulus = mod
        self.size = self.p ** self.degree
        self.order = self.size
        K = self.degree
        if self.modulus is not None:
            self._f_low = np.array(self.modulus[:-1], dtype=np.int64)
            if check and not _is_irreducible(self._f_low, self.p):
                raise ParseError(f"modulus {self.modulus_str()} is reducible over GF({p})")
            self._R = _reduction_matrix(self._f_low, self.p)
        self._pw = [self.p ** i for i in range(K)]
        self._small = self.size < (1 << 62)
        self._pw_np = np.array(self._pw, dtype=np.int64 if self._small else object)
        self.table_limit = table_limit
        self.kind = "prime" if K == 1 else ("table" if self.size <= table_limit else "digits")

    # identity -------------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree}; {self.modulus_str()})"

    def modulus_str(self, var: str = "x") -> str:
        if self.modulus is None:
            return format_poly([0, 1], var)
        return format_poly(self.modulus, var)

    # digits ---------------------------------------------------------------

    def digits(self, a: int) -> np.ndarray:
        out = np.zeros(self.degree, dtype=np.int64)
        for i in range(self.degree):
            a, out[i] = divmod(a, self.p)
        return out

    def from_digits(self, d) -> int:
        return int(sum(int(c) * w for c, w in zip(d, self._pw)))

    def digits_array(self, A: np.ndarray) -> np.ndarray:
        """Vectorised digits, shape (..., K)."""
        A = np.asarray(A)
        return (A[..., None] // self._pw_np) % self.p

    def from_digits_array(self, D: np.ndarray) -> np.ndarray:
        return (np.asarray(D) * self._pw_np).sum(axis=-1)

    def dmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return (a * b) % self.p
        return _mulmod(a, b, self._R, self.p)

    def dpow(self, a: np.ndarray, e: int) -> np.ndarray:
        if self.degree == 1:
            return np.array([pow(int(a[0]), e, self.p)], dtype=np.int64)
        return _powmod(a, e, self._R, self.p)

    def mul_matrix(self, a: int) -> np.ndarray:
        """Matrix M with digits(a*b) = M @ digits(b) mod p."""
        K = self.degree
        M = np.zeros((K, K), dtype=np.int64)
        col = self.digits(a)
        for i in range(K):
            M[:, i] = col
            if i + 1 < K:
                top = col[-1]
                col = np.concatenate(([0], col[:-1]))
                if top:
                    col = (col - top * self._f_low) % self.p
        return M

    # scalar arithmetic ----------------------------------------------------

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.size:
            raise ValueError(f"{a} is not an element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.degree == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        r, w = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            r += ((da + db) % p) * w
            w *= p
        return r

    def neg(self, a: int) -> int:
        p = self.p
        if self.degree == 1:
            return (-a) % p
        if p == 2:
            return a
        r, w = 0, 1
        while a:
            a, da = divmod(a, p)
            r += ((-da) % p) * w
            w *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.degree == 1:
            return a * b % self.p
        if self.kind == "table":
            exp, log = self._tables
            return int(exp[(int(log[a]) + int(log[b])) % (self.size - 1)])
        return self.from_digits(self.dmul(self.digits(a), self.digits(b)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.degree == 1:
            return pow(a, e, self.p)
        if self.kind == "table":
            exp, log = self._tables
            return int(exp[(int(log[a]) * e) % (self.size - 1)])
        return self.from_digits(self.dpow(self.digits(a), e % (self.size - 1)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("zero has no inverse")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elem(self, a: int) -> "FieldElement":
        return FieldElement(self, self._check(a))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        """The class of y (a root of the modulus)."""
        return FieldElement(self, self.p if self.degree > 1 else 0)

    def from_int(self, c: int) -> int:
        """Image of the integer c in the prime subfield."""
        return int(c) % self.p

    # vector arithmetic (numpy arrays of element codes) ---------------------

    def _arr(self, A) -> np.ndarray:
        return np.asarray(A, dtype=np.int64 if self._small else object)

    def vadd(self, A, B) -> np.ndarray:
        A, B = self._arr(A), self._arr(B)
        p = self.p
        if self.degree == 1:
            return (A + B) % p
        if p == 2:
            return A ^ B
        out = np.zeros(np.broadcast(A, B).shape, dtype=A.dtype)
        for w in self._pw:
            out = out + ((A // w + B // w) % p) * w
        return out

    def vneg(self, A) -> np.ndarray:
        A = self._arr(A)
        p = self.p
        if self.degree == 1:
            return (-A) % p
        if p == 2:
            return A.copy()
        out = np.zeros_like(A)
        for w in self._pw:
            out = out + ((-(A // w)) % p) * w
        return out

    def vsub(self, A, B) -> np.ndarray:
        return self.vadd(A, self.vneg(B))

    def vmul(self, A, B) -> np.ndarray:
        A, B = self._arr(A), self._arr(B)
        if self.degree == 1:
            if self.p < (1 << 31):
                return (A * B) % self.p
            return np.array([a * b % self.p for a, b in np.broadcast(A, B)], dtype=object).reshape(
                np.broadcast(A, B).shape)
        if self.kind == "table":
            exp, log = self._tables
            A, B = np.broadcast_arrays(A, B)
            nz = (A != 0) & (B != 0)
            out = np.zeros(A.shape, dtype=np.int64)
            out[nz] = exp[(log[A[nz]] + log[B[nz]]) % (self.size - 1)]
            return out
        A, B = np.broadcast_arrays(A, B)
        flat = [self.mul(int(a), int(b)) for a, b in zip(A.ravel(), B.ravel())]
        return np.array(flat, dtype=A.dtype).reshape(A.shape)

    def vscale(self, c: int, A) -> np.ndarray:
        A = self._arr(A)
        if c == 0:
            return np.zeros_like(A)
        if c == 1:
            return A.copy()
        if self.kind == "digits":
            M = self.mul_matrix(c)
            D = self.digits_array(A)
            return self.from_digits_array((D @ M.T) % self.p)
        return self.vmul(np.full(A.shape, c, dtype=A.dtype), A)

    # structure ------------------------------------------------------------

    @cached_property
    def primitive_element(self) -> int:
        """First element (in code order) of full multiplicative order."""
        if self.degree == 1:
            return int(sympy.primitive_root(self.p))
        n = self.size - 1
        qs = _factor_keys(n)
        for c in range(2, self.size):
            if all(self._pow_digits(c, n // l) != 1 for l in qs):
                return c
        raise RuntimeError("no primitive element")  # unreachable

    def _pow_digits(self, a: int, e: int) -> int:
        if self.degree == 1:
            return pow(a, e, self.p)
        return self.from_digits(self.dpow(self.digits(a), e))

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self.size > self.table_limit:
            raise SizeLimit(f"{self!r} exceeds the log-table limit {self.table_limit}")
        return _build_tables(self)

    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    def log_table(self) -> np.ndarray:
        return self._tables[1]

    def root_of_unity(self, n: int) -> int:
        """An element of order exactly n.

        Uses alpha^((q-1)/n) with alpha the primitive element when q-1 is cheap
        to factor, otherwise the first c^((q-1)/n) of exact order n.
        """
        Q = self.size - 1
        if Q % n:
            raise ValueError(f"{n} does not divide {Q}")
        if self.size <= PRIMITIVE_SEARCH_LIMIT:
            return self.pow(self.primitive_element, Q // n)
        ls = _factor_keys(n) if n > 1 else ()
        for c in range(2, self.size):
            h = self.pow(c, Q // n)
            if h != 1 and all(self.pow(h, n // l) != 1 for l in ls):
                return h
            if n == 1:
                return 1
        raise RuntimeError("no root of unity")  # unreachable

    @cached_property
    def trace_vector(self) -> np.ndarray:
        """t_i = Tr_{F/GF(p)}(y^i); Tr(a) = digits(a) . t mod p."""
        K, p = self.degree, self.p
        t = np.zeros(K, dtype=np.int64)
        for i in range(K):
            x = self.pow(self.p, i) if K > 1 else 1
            acc, cur = 0, x
            for _ in range(K):
                acc = self.add(acc, cur)
                cur = self.pow(cur, p)
            t[i] = acc
        return t

    def absolute_trace(self, A) -> np.ndarray:
        return (self.digits_array(A) @ self.trace_vector) % self.p

    def embedding_from(self, sub: "FieldCtx") -> "Embedding":
        return embedding(sub, self)

    def elements(self) -> Iterable["FieldElement"]:
        return (FieldElement(self, a) for a in range(self.size))


def _matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """(A @ B) mod p through float64 BLAS; exact while entries stay below 2^53."""
    C = np.asarray(A, dtype=np.float64) @ np.asarray(B, dtype=np.float64)
    return np.fmod(C, p).astype(np.int64)


def _build_tables(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    q, p, K = ctx.size, ctx.p, ctx.degree
    n = q - 1
    dt = np.int32 if q < (1 << 31) else np.int64
    alpha = ctx.primitive_element
    exp = np.empty(n, dtype=dt)
    L = min(n, _BLOCK)
    # first block by doubling on digit rows
    D = np.zeros((L, K), dtype=np.int64)
    D[0, 0] = 1
    s = 1
    a_s = ctx.digits(alpha) if K > 1 else np.array([alpha], dtype=np.int64)
    while s < L:
        t = min(s, L - s)
        if K == 1:
            D[s:s + t] = (D[:t] * int(a_s[0])) % p
        else:
            M = ctx.mul_matrix(ctx.from_digits(a_s))
            D[s:s + t] = _matmul_mod(D[:t], M.T, p)
        a_s = ctx.dmul(a_s, a_s)
        s += t
    Df = D.astype(np.float64)
    base = (D * np.array(ctx._pw, dtype=np.int64)).sum(axis=1)
    exp[:L] = base
    step = ctx.dpow(ctx.digits(alpha) if K > 1 else np.array([alpha], dtype=np.int64), L)
    cur = step.copy()
    pos = L
    while pos < n:
        t = min(L, n - pos)
        if K == 1:
            blk = (D[:t, 0] * int(cur[0])) % p
        else:
            M = ctx.mul_matrix(ctx.from_digits(cur))
            blk = _matmul_mod(Df[:t], M.T, p) @ np.array(ctx._pw, dtype=np.int64)
        exp[pos:pos + t] = blk
        cur = ctx.dmul(cur, step)
        pos += t
    log = np.full(q, -1, dtype=dt)
    log[exp] = np.arange(n, dtype=dt)
    if (log[1:] < 0).any():
        raise RuntimeError(f"primitive element check failed for {ctx!r}")
    return exp, log


@dataclass(frozen=True, eq=True)
class FieldElement:
    ctx: FieldCtx
    value: int

    def _same(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldMismatch(f"{self.ctx!r} vs {other.ctx!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.ctx.from_int(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._same(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._same(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._same(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._same(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._same(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, int(e)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    @property
    def coeffs(self) -> np.ndarray:
        return self.ctx.digits(self.value)

    def __str__(self) -> str:
        return format_poly(self.coeffs.tolist())

    def __repr__(self) -> str:
        return f"FieldElement({self.ctx!r}, {self})"

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "FieldElement":
        cs = parse_poly(text)
        if len(cs) > ctx.degree:
            # reduce through the field arithmetic
            acc, y = 0, (ctx.p if ctx.degree > 1 else 0)
            for c in reversed(cs):
                acc = ctx.add(ctx.mul(acc, y), ctx.from_int(c))
            return FieldElement(ctx, acc)
        return FieldElement(ctx, ctx.from_digits([c % ctx.p for c in cs]))


# ---------------------------------------------------------------------------
# builders


@lru_cache(maxsize=None)
def build_prime_field(p: int) -> FieldCtx:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldCtx(p)


@lru_cache(maxsize=None)
def _absolute_field(p: int, K: int) -> FieldCtx:
    if K == 1:
        return build_prime_field(p)
    return FieldCtx(p, first_irreducible(p, K), check=False)


def build_extension(base: FieldCtx, k: int, *, max_size: int | None = DEFAULT_ARITH_LIMIT) -> FieldCtx:
    """GF(|base|^k) with the first irreducible modulus of degree m*k over GF(p)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return base
    size = base.size ** k
    if max_size is not None and size > max_size:
        raise SizeLimit(f"GF({base.size}^{k}) has {size} elements, above the limit {max_size}")
    return _absolute_field(base.p, base.degree * k)


def gf(q: int, *, max_size: int | None = DEFAULT_ARITH_LIMIT) -> FieldCtx:
    """GF(q) for a prime power q."""
    p, m = prime_power(q)
    return build_extension(build_prime_field(p), m, max_size=max_size)


def element_order(ctx: FieldCtx, x) -> int:
    a = int(x.value if isinstance(x, FieldElement) else x)
    if isinstance(x, FieldElement) and x.ctx != ctx:
        raise FieldMismatch("element from a different field")
    if a == 0:
        raise ZeroElement("zero has no multiplicative order")
    order = ctx.size - 1
    for l, e in sympy.factorint(order).items():
        for _ in range(e):
            if ctx.pow(a, order // l) == 1:
                order //= l
            else:
                break
    return order


def _solve_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over GF(p)."""
    m = A.shape[0]
    M = np.concatenate((A % p, np.eye(m, dtype=np.int64)), axis=1)
    for c in range(m):
        piv = next(r for r in range(c, m) if M[r, c] % p)
        M[[c, piv]] = M[[piv, c]]
        M[c] = M[c] * pow(int(M[c, c]), p - 2, p) % p
        for r in range(m):
            if r != c and M[r, c]:
                M[r] = (M[r] - M[r, c] * M[c]) % p
    return M[:, m:]


class Embedding:
    """Field embedding sub -> ext given by a root of sub's modulus in ext."""

    def __init__(self, sub: FieldCtx, ext: FieldCtx):
        if sub.p != ext.p or ext.degree % sub.degree:
            raise NotSubfield(f"{sub!r} is not a subfield of {ext!r}")
        self.sub, self.ext = sub, ext
        m, K, p = sub.degree, ext.degree, ext.p
        if sub == ext:
            images = [ext.p ** i for i in range(m)] if m > 1 else [1]
        elif m == 1:
            images = [1]
        else:
            rho = _subfield_root(sub, ext)
            images = [ext.pow(rho, i) for i in range(m)]
        self.root = images[1] if m > 1 else None
        self._B = np.stack([ext.digits(v) for v in images], axis=1)  # K x m
        # choose m independent rows of B
        rows, basis = [], np.zeros((0, m), dtype=np.int64)
        for r in range(K):
            cand = np.vstack((basis, self._B[r]))
            if _rank_mod_p(cand, p) > basis.shape[0]:
                basis, rows = cand, rows + [r]
            if len(rows) == m:
                break
        self._rows = np.array(rows)
        self._Binv = _solve_mod_p(self._B[self._rows], p)

    def __call__(self, a: int) -> int:
        if self.sub.degree == 1:
            return int(a)
        d = self.sub.digits(int(a))
        return self.ext.from_digits((self._B @ d) % self.ext.p)

    def map_array(self, A) -> np.ndarray:
        D = self.sub.digits_array(np.asarray(A, dtype=np.int64))
        return self.ext.from_digits_array((D @ self._B.T) % self.ext.p)

    def preimage_digits(self, D: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """For ext digit rows D (..., K): sub codes and a mask of rows lying in the image."""
        p = self.ext.p
        D = np.asarray(D, dtype=np.int64)
        c = (D[..., self._rows] @ self._Binv.T) % p
        back = (c @ self._B.T) % p
        ok = (back == D).all(axis=-1)
        return self.sub.from_digits_array(c), ok

    def preimage(self, b: int) -> int | None:
        vals, ok = self.preimage_digits(self.ext.digits(int(b)))
        return int(vals) if bool(ok) else None


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    M = A.copy() % p
    rank = 0
    rows, cols = M.shape
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if M[r, c]), None)
        if piv is None:
            continue
        M[[rank, piv]] = M[[piv, rank]]
        M[rank] = M[rank] * pow(int(M[rank, c]), p - 2, p) % p
        for r in range(rows):
            if r != rank and M[r, c]:
                M[r] = (M[r] - M[r, c] * M[rank]) % p
        rank += 1
    return rank


def _subfield_root(sub: FieldCtx, ext: FieldCtx) -> int:
    s, S = sub.size, ext.size
    qs = _factor_keys(s - 1)
    cof = (S - 1) // (s - 1)
    gamma = None
    for c in range(2, S):
        g = ext.pow(c, cof)
        if all(ext.pow(g, (s - 1) // l) != 1 for l in qs):
            gamma = g
            break
    mod = sub.modulus
    h = 1
    for _ in range(s - 1):
        acc = 0
        for c in reversed(mod):
            acc = ext.add(ext.mul(acc, h), c)
        if acc == 0:
            return h
        h = ext.mul(h, gamma)
    raise RuntimeError("subfield root not found")  # unreachable


@lru_cache(maxsize=None)
def embedding(sub: FieldCtx, ext: FieldCtx) -> Embedding:
    return Embedding(sub, ext)


def is_subfield(sub: FieldCtx, ext: FieldCtx) -> bool:
    return sub.p == ext.p and ext.degree % sub.degree == 0


def trace(src: FieldCtx, dst: FieldCtx, x) -> FieldElement:
    """Tr_{src/dst}(x) = sum_j x^(|dst|^j)."""
    if not is_subfield(dst, src):
        raise NotSubfield(f"{dst!r} is not a subfield of {src!r}")
    a = int(x.value if isinstance(x, FieldElement) else x)
    if isinstance(x, FieldElement) and x.ctx != src:
        raise FieldMismatch("element does not belong to the source field")
    s = src.degree // dst.degree
    acc, cur = 0, a
    for _ in range(s):
        acc = src.add(acc, cur)
        cur = src.pow(cur, dst.size)
    b = embedding(dst, src).preimage(acc)
    if b is None:
        raise RuntimeError("trace left the subfield")  # unreachable
    return FieldElement(dst, b)


def trace_matrix(src: FieldCtx, dst: FieldCtx) -> np.ndarray:
    """Matrix T (m x K) with digits_dst(Tr(a)) = T @ digits_src(a) mod p."""
    cols = []
    for i in range(src.degree):
        y_i = src.pow(src.p, i) if src.degree > 1 else 1
        cols.append(dst.digits(trace(src, dst, y_i).value))
    return np.stack(cols, axis=1)


def multiplicative_order_mod(a: int, n: int) -> int:
    return int(sympy.n_order(a, n))


__all__ = [
    "DEFAULT_ARITH_LIMIT", "DEFAULT_TABLE_LIMIT", "Embedding", "FieldCtx", "FieldElement",
    "build_extension", "build_prime_field", "element_order", "embedding", "first_irreducible",
    "format_poly", "gf", "is_prime", "is_subfield", "multiplicative_order_mod", "parse_poly",
    "prime_power", "trace", "trace_matrix",
]
