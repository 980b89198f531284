"""Trace polynomials tau_W(lambda) for the (3,5,2) specialisation.

For X, Y in SL(2) every product of X^{+-1}, Y^{+-1} lies in the span of
I, X, Y, XY with coefficients polynomial in s = tr X, t = tr Y and
lambda = tr XY.  Right multiplication by a generator is a fixed linear map
on those four coefficients (Cayley-Hamilton: g^2 = tr(g) g - I, and
YX = tX + sY + (lambda - st) I - XY), so the trace of a word is obtained
without ever writing down matrix entries.

Syllable exponents are lifted to SL(2) by their balanced representatives:
x^2 -> X^-1, y^3 -> Y^-2, y^4 -> Y^-1.  Other lifts change tau_W only by a
sign, which is invisible in PSL(2).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .exact import ONE, PHI, ZERO, GfPoly, GoldenScalar, PHI_FLOAT
from .words import P_ORDER, Q_ORDER, GroupWord, balanced

TR_X = ONE  # 2 cos(pi/3)
TR_Y = PHI  # 2 cos(pi/5)


class DegenerateParameter(ValueError):
    pass


def sl2_letters(w: GroupWord) -> list[tuple[str, int]]:
    """The word as a sequence of (generator, +-1) letters in SL(2)."""
    out = []
    for a, b in w.syllables:
        for g, e, n in (("x", a, P_ORDER), ("y", b, Q_ORDER)):
            e = balanced(e, n)
            out.extend([(g, 1 if e > 0 else -1)] * abs(e))
    return out


@dataclass(frozen=True)
class _Elt:
    """c_I I + c_X X + c_Y Y + c_XY XY, coefficients in Q(phi)[lambda]."""
    i: GfPoly
    x: GfPoly
    y: GfPoly
    xy: GfPoly

    def scale(self, c) -> "_Elt":
        return _Elt(self.i * c, self.x * c, self.y * c, self.xy * c)

    def __sub__(self, o: "_Elt") -> "_Elt":
        return _Elt(self.i - o.i, self.x - o.x, self.y - o.y, self.xy - o.xy)


class TraceExpression:
    """Trace of a word under tr X = s, tr Y = t, tr XY = lambda."""

    def __init__(self, s: GoldenScalar = TR_X, t: GoldenScalar = TR_Y):
        self.s, self.t = s, t
        lam = GfPoly.lam()
        self._lam = lam
        self._l_st = lam - s * t
        self._memo: dict[tuple, _Elt] = {}

    def times_x(self, e: _Elt) -> _Elt:
        s, t = self.s, self.t
        return _Elt(
            i=-e.x + e.y * self._l_st - e.xy * t,
            x=e.i + e.x * s + e.y * t + e.xy * self._lam,
            y=e.y * s + e.xy,
            xy=-e.y,
        )

    def times_y(self, e: _Elt) -> _Elt:
        t = self.t
        return _Elt(i=-e.y, x=-e.xy, y=e.i + e.y * t, xy=e.x + e.xy * t)

    def times(self, e: _Elt, g: str, sign: int) -> _Elt:
        step = self.times_x if g == "x" else self.times_y
        if sign > 0:
            return step(e)
        # g^-1 = tr(g) I - g
        return e.scale(self.s if g == "x" else self.t) - step(e)

    def element(self, letters) -> _Elt:
        letters = tuple(letters)
        n = len(letters)
        while n and letters[:n] not in self._memo:
            n -= 1
        e = self._memo.get(letters[:n]) or _Elt(GfPoly([ONE]), GfPoly(), GfPoly(), GfPoly())
        for j in range(n, len(letters)):
            e = self.times(e, *letters[j])
            self._memo[letters[:j + 1]] = e
        return e

    def trace(self, letters) -> GfPoly:
        e = self.element(letters)
        return e.i * 2 + e.x * self.s + e.y * self.t + e.xy * self._lam


def trace_polynomial(w: GroupWord) -> GfPoly:
    """tau_W(lambda), exact, of degree k."""
    return TraceExpression().trace(sl2_letters(w))


# -- floating point oracle ----------------------------------------------------

def _random_conjugator(rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, _ = np.linalg.qr(z)
    d = np.diag(rng.uniform(0.5, 2.0, size=2))
    upper = np.array([[1.0, rng.uniform(-1, 1)], [0.0, 1.0]])
    return q @ d @ upper


def base_matrices(lam0: complex) -> tuple[np.ndarray, np.ndarray]:
    """X, Y in SL(2, C) with tr X = 1, tr Y = phi, tr XY = lam0."""
    lam0 = complex(lam0)
    if not cmath.isfinite(lam0):
        raise DegenerateParameter(f"non-finite trace parameter {lam0}")
    X = np.array([[0, -1], [1, 1]], dtype=complex)
    # Y = [[0, q], [r, phi]] with q r = -1 and q - r = lam0 - phi
    d = lam0 - PHI_FLOAT
    q = (d + cmath.sqrt(d * d - 4)) / 2
    r = q - d
    Y = np.array([[0, q], [r, PHI_FLOAT]], dtype=complex)
    if (abs(np.linalg.det(Y) - 1) > 1e-9 or abs(np.trace(X @ Y) - lam0) > 1e-9 * max(1, abs(lam0))):
        raise DegenerateParameter(f"trace constraints not solvable at lambda={lam0}")
    return X, Y


def _sl2_inv(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])


def evaluate_matrices(w: GroupWord, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    mats = {("x", 1): X, ("x", -1): _sl2_inv(X), ("y", 1): Y, ("y", -1): _sl2_inv(Y)}
    out = np.eye(2, dtype=complex)
    for letter in sl2_letters(w):
        out = out @ mats[letter]
    return out


def numeric_trace_oracle(w: GroupWord, lam0: complex, trials: int = 3,
                         rng: np.random.Generator | None = None) -> complex:
    """Mean trace of W(PXP^-1, PYP^-1) over random conjugators P."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if rng is None:
        rng = np.random.default_rng(0)
    X, Y = base_matrices(lam0)
    traces = []
    for _ in range(trials):
        P = _random_conjugator(rng)
        Pi = np.linalg.inv(P)
        traces.append(np.trace(evaluate_matrices(w, P @ X @ Pi, P @ Y @ Pi)))
    scale = max(1.0, max(abs(t) for t in traces))
    for t in traces[1:]:
        if abs(t - traces[0]) > 1e-9 * scale:
            raise AssertionError(f"conjugation changed the trace: {traces}")
    return complex(np.mean(traces))
