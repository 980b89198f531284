"""Exact arithmetic in the golden field Q(phi) and polynomials over it.

Elements are written a + b*phi with phi = (1 + sqrt 5)/2, phi**2 = phi + 1.
Internally a scalar is a triple of integers (p, q, d) meaning (p + q*phi)/d
with d > 0 and gcd(p, q, d) = 1, which keeps the hot paths (icosian
products, trace polynomials) on plain Python ints.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

PHI_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0


class ZeroPolynomial(ValueError):
    pass


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot use {v!r} as an exact rational")


class GoldenScalar:
    """Exact element a + b*phi of Q(sqrt 5)."""

    __slots__ = ("_p", "_q", "_d", "_hash")

    def __init__(self, a=0, b=0):
        a = _as_fraction(a)
        b = _as_fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d)

    def _set(self, p: int, q: int, d: int) -> None:
        if d < 0:
            p, q, d = -p, -q, -d
        g = math.gcd(p, q, d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        self._p, self._q, self._d = p, q, d
        self._hash = None

    @classmethod
    def _raw(cls, p: int, q: int, d: int = 1) -> "GoldenScalar":
        s = object.__new__(cls)
        s._set(p, q, d)
        return s

    @classmethod
    def coerce(cls, v) -> "GoldenScalar":
        if isinstance(v, GoldenScalar):
            return v
        if isinstance(v, int):
            return cls._raw(v, 0, 1)
        return cls(v, 0)

    # -- views ------------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._q, self._d)

    def is_zero(self) -> bool:
        return self._p == 0 and self._q == 0

    def is_rational(self) -> bool:
        return self._q == 0

    def conjugate(self) -> "GoldenScalar":
        """Galois conjugate, phi -> 1 - phi."""
        return GoldenScalar._raw(self._p + self._q, -self._q, self._d)

    def norm(self) -> Fraction:
        """Field norm a^2 + ab - b^2."""
        p, q = self._p, self._q
        return Fraction(p * p + p * q - q * q, self._d * self._d)

    def is_algebraic_integer(self) -> bool:
        return self._d == 1

    def __float__(self) -> float:
        return (self._p + self._q * PHI_FLOAT) / self._d

    def __complex__(self) -> complex:
        return complex(float(self))

    def sign(self) -> int:
        """Sign of the real number a + b*phi, decided exactly."""
        p, q = self._p, self._q
        # sign of p + q*phi, with 2p + q + q*sqrt5 = 2(p + q*phi)
        u, v = 2 * p + q, q
        su = (u > 0) - (u < 0)
        sv = (v > 0) - (v < 0)
        if su == 0 or sv == 0 or su == sv:
            return su or sv
        # opposite signs: compare u^2 with 5 v^2
        c = u * u - 5 * v * v
        return su if c > 0 else sv

    def __abs__(self) -> "GoldenScalar":
        return -self if self.sign() < 0 else self

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GoldenScalar._raw(self._p + o._p, self._q + o._q, self._d)
        return GoldenScalar._raw(self._p * o._d + o._p * self._d,
                                 self._q * o._d + o._q * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return GoldenScalar._raw(-self._p, -self._q, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        p1, q1, p2, q2 = self._p, self._q, o._p, o._q
        qq = q1 * q2
        return GoldenScalar._raw(p1 * p2 + qq, p1 * q2 + q1 * p2 + qq, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GoldenScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        p, q, d = self._p, self._q, self._d
        n = p * p + p * q - q * q
        # (p + q phi)^-1 = (p + q - q phi)/n, then times d
        return GoldenScalar._raw((p + q) * d, -q * d, n)

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self._p == o._p and self._q == o._q and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._p, self._q, self._d))
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    # -- text -------------------------------------------------------------
    def __str__(self):
        return f"{self.a}+{self.b}*phi"

    def __repr__(self):
        return f"GoldenScalar({str(self)!r})"

    def pretty(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        bs = "phi" if b == 1 else "-phi" if b == -1 else f"{b}*phi"
        if a == 0:
            return bs
        return f"{a}{'' if bs.startswith('-') else '+'}{bs}"

    @classmethod
    def parse(cls, text: str) -> "GoldenScalar":
        """Inverse of ``str``: accepts ``"a+b*phi"`` with rational a, b."""
        m = _SCALAR_RE.fullmatch(text.replace(" ", ""))
        if not m:
            raise ValueError(f"not a golden scalar: {text!r}")
        return cls(Fraction(m.group(1)), Fraction(m.group(2)))


_SCALAR_RE = re.compile(r"(-?\d+(?:/\d+)?)\+(-?\d+(?:/\d+)?)\*phi")


def _coerce_or_none(v):
    if isinstance(v, GoldenScalar):
        return v
    if isinstance(v, int):
        return GoldenScalar._raw(v, 0, 1)
    if isinstance(v, Fraction):
        return GoldenScalar._raw(v.numerator, 0, v.denominator)
    return None


ZERO = GoldenScalar._raw(0, 0)
ONE = GoldenScalar._raw(1, 0)
PHI = GoldenScalar._raw(0, 1)
SQRT5 = GoldenScalar._raw(-1, 2)


def gs(a=0, b=0) -> GoldenScalar:
    return GoldenScalar(a, b)


class GfPoly:
    """Univariate polynomial in lambda over Q(sqrt 5), lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GoldenScalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[GoldenScalar, ...] = tuple(cs)

    @classmethod
    def lam(cls) -> "GfPoly":
        return cls([ZERO, ONE])

    @classmethod
    def constant(cls, c) -> "GfPoly":
        return cls([c])

    @classmethod
    def linear_factor(cls, alpha) -> "GfPoly":
        """lambda - alpha."""
        return cls([-GoldenScalar.coerce(alpha), ONE])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GoldenScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other):
        if isinstance(other, GfPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GoldenScalar)):
            return self == GfPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return GfPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return GfPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (GoldenScalar, int, Fraction)):
            c = GoldenScalar.coerce(other)
            return GfPoly(x * c for x in self.coeffs)
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return GfPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return GfPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = GfPoly([ONE])
        for _ in range(n):
            out = out * self
        return out

    def divrem(self, g: "GfPoly") -> tuple["GfPoly", "GfPoly"]:
        return poly_divrem(self, g)

    def __call__(self, alpha) -> GoldenScalar:
        return poly_eval(self, alpha)

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def __repr__(self):
        return f"GfPoly({self.to_json()!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = c.pretty()
            if i == 0:
                terms.append(cs)
                continue
            mon = "lambda" if i == 1 else f"lambda^{i}"
            if cs == "1":
                terms.append(mon)
            elif cs == "-1":
                terms.append("-" + mon)
            elif "+" in cs or "-" in cs[1:]:
                terms.append(f"({cs})*{mon}")
            else:
                terms.append(f"{cs}*{mon}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "GfPoly":
        return cls(GoldenScalar.parse(s) for s in data)


def _poly(v) -> GfPoly:
    if isinstance(v, GfPoly):
        return v
    return GfPoly([v])


def poly_divrem(f: GfPoly, g: GfPoly) -> tuple[GfPoly, GfPoly]:
    """Exact long division: f = q*g + r with deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    lead_inv = g.leading().inverse()
    q = [ZERO] * max(len(r) - dg, 0)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c.is_zero():
            continue
        t = c * lead_inv
        q[i - dg] = t
        for j, gc in enumerate(g.coeffs):
            r[i - dg + j] = r[i - dg + j] - t * gc
    return GfPoly(q), GfPoly(r[:dg])


def poly_eval(f: GfPoly, alpha) -> GoldenScalar:
    alpha = GoldenScalar.coerce(alpha)
    acc = ZERO
    for c in reversed(f.coeffs):
        acc = acc * alpha + c
    return acc


def poly_derivative(f: GfPoly) -> GfPoly:
    return GfPoly(c * i for i, c in enumerate(f.coeffs) if i > 0)


def root_multiplicity(f: GfPoly, alpha) -> int:
    """Largest m such that (lambda - alpha)**m divides f."""
    if f.is_zero():
        raise ZeroPolynomial("root multiplicity of the zero polynomial")
    lin = GfPoly.linear_factor(alpha)
    m = 0
    while f.degree > 0:
        q, r = poly_divrem(f, lin)
        if not r.is_zero():
            break
        f, m = q, m + 1
    return m
