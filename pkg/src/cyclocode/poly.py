"""Dense univariate polynomials over a :class:`FieldCtx`."""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import BothZero, DivisionByZeroPoly, FieldMismatch, NotSubfield
from .field import _matmul_mod, FieldCtx, FieldElement, embedding, format_poly, is_subfield, parse_poly


def _dtype(ctx: FieldCtx):
    return np.int64 if ctx._small else object


class Poly:
    """Coefficients low to high, no trailing zeros; the zero polynomial is empty."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int] = ()):
        self.ctx = ctx
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=_dtype(ctx))
        if c.ndim != 1:
            c = c.reshape(-1)
        nz = np.flatnonzero(c)
        self.c = c[: nz[-1] + 1] if nz.size else c[:0]

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [1])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [0, 1])

    @classmethod
    def monomial(cls, ctx: FieldCtx, deg: int, coef: int = 1) -> "Poly":
        c = np.zeros(deg + 1, dtype=_dtype(ctx))
        c[deg] = coef
        return cls(ctx, c)

    @classmethod
    def x_n_minus_1(cls, ctx: FieldCtx, n: int) -> "Poly":
        c = np.zeros(n + 1, dtype=_dtype(ctx))
        c[0] = ctx.neg(1)
        c[n] = 1
        return cls(ctx, c)

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Sequence[int]) -> "Poly":
        """Integers interpreted in the prime subfield (reduced mod p)."""
        return cls(ctx, [ctx.from_int(v) for v in ints])

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str, var: str = "x") -> "Poly":
        """Parse the descending format; coefficients are element codes, '-' means field negation."""
        raw = parse_poly(text, var)
        out = []
        for v in raw:
            if v < 0:
                out.append(ctx.neg(_code(ctx, -v)))
            else:
                out.append(_code(ctx, v))
        return cls(ctx, out)

    # basic properties -----------------------------------------------------

    @property
    def deg(self) -> int:
        return self.c.size - 1

    degree = deg

    def is_zero(self) -> bool:
        return self.c.size == 0

    @property
    def lead(self) -> int:
        return int(self.c[-1]) if self.c.size else 0

    def coeff(self, i: int) -> int:
        return int(self.c[i]) if 0 <= i < self.c.size else 0

    def coeffs(self) -> list[int]:
        return [int(v) for v in self.c]

    def __len__(self) -> int:
        return self.c.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.c.size == other.c.size and bool(np.all(self.c == other.c))

    def __hash__(self) -> int:
        return hash((self.ctx.key, tuple(self.coeffs())))

    def __str__(self) -> str:
        return format_poly(self.coeffs())

    def __repr__(self) -> str:
        return f"Poly({self.ctx!r}, {self})"

    def to_json(self) -> str:
        return str(self)

    # arithmetic -----------------------------------------------------------

    def _peer(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise FieldMismatch(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldMismatch(f"{self.ctx!r} vs {other.ctx!r}")
            return Poly(self.ctx, [other.value])
        if isinstance(other, (int, np.integer)):
            return Poly(self.ctx, [self.ctx.from_int(int(other))])
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        o = self._peer(other)
        a, b = self.c, o.c
        if a.size < b.size:
            a, b = b, a
        out = a.copy()
        if b.size:
            out[: b.size] = self.ctx.vadd(a[: b.size], b)
        return Poly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, self.ctx.vneg(self.c))

    def __sub__(self, other) -> "Poly":
        return self + (-self._peer(other))

    def __rsub__(self, other) -> "Poly":
        return self._peer(other) - self

    def scale(self, a: int) -> "Poly":
        return Poly(self.ctx, self.ctx.vscale(int(a), self.c))

    def __mul__(self, other) -> "Poly":
        o = self._peer(other)
        if self.is_zero() or o.is_zero():
            return Poly(self.ctx)
        ctx = self.ctx
        if ctx.degree == 1 and ctx.p < (1 << 20) and min(self.c.size, o.c.size) * (ctx.p - 1) ** 2 < (1 << 62):
            return Poly(ctx, np.convolve(self.c, o.c) % ctx.p)
        a, b = (self.c, o.c) if self.c.size <= o.c.size else (o.c, self.c)
        out = np.zeros(a.size + b.size - 1, dtype=_dtype(ctx))
        for i, ai in enumerate(a):
            ai = int(ai)
            if ai:
                out[i: i + b.size] = ctx.vadd(out[i: i + b.size], ctx.vscale(ai, b))
        return Poly(ctx, out)

    __rmul__ = __mul__

    def divrem(self, other) -> tuple["Poly", "Poly"]:
        b = self._peer(other)
        if b.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        ctx = self.ctx
        db = b.deg
        if self.deg < db:
            return Poly(ctx), Poly(ctx, self.c)
        r = self.c.copy()
        q = np.zeros(self.deg - db + 1, dtype=r.dtype)
        inv = ctx.inv(b.lead)
        prime = ctx.degree == 1 and ctx.p < (1 << 31)
        bc = b.c
        for i in range(self.deg - db, -1, -1):
            lead = int(r[i + db])
            if not lead:
                continue
            f = lead * inv % ctx.p if prime else ctx.mul(lead, inv)
            q[i] = f
            if prime:
                r[i: i + db + 1] = (r[i: i + db + 1] - f * bc) % ctx.p
            else:
                r[i: i + db + 1] = ctx.vsub(r[i: i + db + 1], ctx.vscale(f, bc))
        return Poly(ctx, q), Poly(ctx, r[:db])

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other) -> "Poly":
        return self.divrem(other)[0]

    def __mod__(self, other) -> "Poly":
        return self.divrem(other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.ctx.inv(self.lead))

    def __pow__(self, e: int) -> "Poly":
        out, base = Poly.one(self.ctx), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def reciprocal(self, degree: int | None = None) -> "Poly":
        """x^d f(1/x) with d = deg f unless given."""
        d = self.deg if degree is None else degree
        c = np.zeros(d + 1, dtype=self.c.dtype)
        c[d - self.deg:] = self.c[::-1] if self.c.size else c[d - self.deg:]
        return Poly(self.ctx, c)

    def eval(self, x):
        return poly_eval(self, x)

    __call__ = eval

    def lift(self, ext: FieldCtx) -> "Poly":
        """Same polynomial with coefficients embedded into ext."""
        if ext == self.ctx:
            return self
        emb = embedding(self.ctx, ext)
        return Poly(ext, emb.map_array(self.c) if self.c.size else [])

    def mod_xn1_power(self, n: int, e: int) -> "Poly":
        """f(x^e) mod x^n - 1 (e coprime to n permutes the exponents)."""
        c = np.zeros(n, dtype=self.c.dtype)
        for i, v in enumerate(self.c):
            j = (i * e) % n
            c[j] = self.ctx.add(int(c[j]), int(v))
        return Poly(self.ctx, c)


def _code(ctx: FieldCtx, v: int) -> int:
    if v >= ctx.size:
        return ctx.from_int(v)
    return int(v)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid."""
    if a.ctx != b.ctx:
        raise FieldMismatch(f"{a.ctx!r} vs {b.ctx!r}")
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    ctx = a.ctx
    if ctx.degree == 1 and ctx.p < (1 << 31):
        from .field import _gfp_gcd

        return Poly(ctx, _gfp_gcd(a.c, b.c, ctx.p))
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_eval(f: Poly, x) -> FieldElement:
    """Horner evaluation; x may live in any extension of f's field."""
    if isinstance(x, FieldElement):
        ext, v = x.ctx, x.value
    else:
        ext, v = f.ctx, int(x)
    if not is_subfield(f.ctx, ext):
        raise NotSubfield(f"{f.ctx!r} is not a subfield of {ext!r}")
    coeffs = f.c
    if ext != f.ctx and coeffs.size:
        coeffs = embedding(f.ctx, ext).map_array(coeffs)
    acc = 0
    for c in coeffs[::-1]:
        acc = ext.add(ext.mul(acc, v), int(c))
    return FieldElement(ext, acc)


def product_over_roots(ext: FieldCtx, sub: FieldCtx, roots: Sequence) -> tuple[Poly, bool]:
    """Expand prod (x - r) in ext.

    Returns (poly, in_subfield). When every coefficient lies in sub the polynomial
    is returned over sub, otherwise over ext with the flag False.
    """
    if not is_subfield(sub, ext):
        raise NotSubfield(f"{sub!r} is not a subfield of {ext!r}")
    vals = []
    for r in roots:
        if isinstance(r, FieldElement):
            if r.ctx != ext:
                raise FieldMismatch("root outside the extension field")
            vals.append(r.value)
        else:
            vals.append(int(r))
    K, p = ext.degree, ext.p
    # coefficient digit rows, low to high
    P = np.zeros((len(vals) + 1, K), dtype=np.int64)
    P[0, 0] = 1
    for j, r in enumerate(vals):
        # P <- x P - r P
        M = ext.mul_matrix(r) if K > 1 else np.array([[r]], dtype=np.int64)
        rP = _matmul_mod(P[: j + 1], M.T, p)
        new = np.zeros_like(P)
        new[1: j + 2] = P[: j + 1]
        new[: j + 1] = (new[: j + 1] - rP) % p
        P = new
    codes, ok = embedding(sub, ext).preimage_digits(P)
    if bool(np.all(ok)):
        return Poly(sub, [int(v) for v in codes]), True
    return Poly(ext, [ext.from_digits(row) for row in P]), False


def lcm(a: Poly, b: Poly) -> Poly:
    return (a * b // gcd(a, b)).monic()
