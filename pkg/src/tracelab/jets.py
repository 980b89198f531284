"""Dual numbers a + b*eps (eps^2 = 0) and 2x2 matrices over them.

C[lambda]/((lambda - alpha)^2) is modelled numerically: the class of
lambda - alpha is eps, so a jet records a value and a first derivative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact import GfPoly, GoldenScalar, PHI_FLOAT
from .trace import sl2_letters
from .words import GroupWord

TOL = 1e-9

SHIFTED = "shifted"    # tr XY = alpha + eps
VERBATIM = "verbatim"  # tr XY = eps, the class of lambda - alpha


class IdentityViolated(AssertionError):
    pass


@dataclass(frozen=True)
class DualComplex:
    value: complex
    slope: complex = 0j

    def __add__(self, o):
        o = _dual(o)
        return DualComplex(self.value + o.value, self.slope + o.slope)

    __radd__ = __add__

    def __neg__(self):
        return DualComplex(-self.value, -self.slope)

    def __sub__(self, o):
        return self + (-_dual(o))

    def __rsub__(self, o):
        return _dual(o) - self

    def __mul__(self, o):
        o = _dual(o)
        return DualComplex(self.value * o.value, self.value * o.slope + self.slope * o.value)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _dual(o)
        if o.value == 0:
            raise ZeroDivisionError("dual number with zero value part is not invertible")
        return DualComplex(self.value / o.value,
                           (self.slope * o.value - self.value * o.slope) / (o.value * o.value))

    def close_to(self, o, tol: float = TOL) -> bool:
        o = _dual(o)
        return abs(self.value - o.value) <= tol and abs(self.slope - o.slope) <= tol

    def __iter__(self):
        return iter((self.value, self.slope))


EPS = DualComplex(0j, 1 + 0j)


def _dual(v) -> DualComplex:
    if isinstance(v, DualComplex):
        return v
    return DualComplex(complex(v), 0j)


@dataclass(frozen=True)
class JetMatrix2:
    """[[a, b], [c, d]] with DualComplex entries."""
    a: DualComplex
    b: DualComplex
    c: DualComplex
    d: DualComplex

    @classmethod
    def of(cls, value: Sequence[Sequence[complex]], slope: Sequence[Sequence[complex]] | None = None):
        slope = slope if slope is not None else [[0, 0], [0, 0]]
        return cls(*(DualComplex(complex(value[i][j]), complex(slope[i][j]))
                     for i in range(2) for j in range(2)))

    @classmethod
    def identity(cls) -> "JetMatrix2":
        return cls.of([[1, 0], [0, 1]])

    def __matmul__(self, o: "JetMatrix2") -> "JetMatrix2":
        return JetMatrix2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                          self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __add__(self, o: "JetMatrix2") -> "JetMatrix2":
        return JetMatrix2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "JetMatrix2") -> "JetMatrix2":
        return JetMatrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def scale(self, s) -> "JetMatrix2":
        return JetMatrix2(self.a * s, self.b * s, self.c * s, self.d * s)

    @property
    def trace(self) -> DualComplex:
        return self.a + self.d

    @property
    def det(self) -> DualComplex:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "JetMatrix2":
        """Inverse for determinant 1."""
        return JetMatrix2(self.d, -self.b, -self.c, self.a)

    def value_part(self) -> np.ndarray:
        return np.array([[self.a.value, self.b.value], [self.c.value, self.d.value]])

    def slope_part(self) -> np.ndarray:
        return np.array([[self.a.slope, self.b.slope], [self.c.slope, self.d.slope]])

    def close_to(self, o: "JetMatrix2", tol: float = TOL) -> bool:
        return all(x.close_to(y, tol) for x, y in zip(self.entries(), o.entries()))

    def entries(self) -> tuple[DualComplex, ...]:
        return (self.a, self.b, self.c, self.d)


def jet_eval_poly(f: GfPoly, alpha) -> DualComplex:
    """f(alpha + eps) = f(alpha) + f'(alpha) eps, by Horner over dual numbers."""
    z = DualComplex(complex(float(GoldenScalar.coerce(alpha))), 1 + 0j)
    acc = DualComplex(0j)
    for c in reversed(f.coeffs):
        acc = acc * z + float(c)
    return acc


def base_jets(alpha, mode: str = SHIFTED) -> tuple[JetMatrix2, JetMatrix2]:
    """X lower-triangular with diagonal e^{+-i pi/3}, Y upper-triangular with e^{+-i pi/5}.

    The corner of Y is fixed by the trace of XY: tr XY = corner + 2 cos(8 pi/15).
    """
    if mode not in (SHIFTED, VERBATIM):
        raise ValueError(f"unknown mode {mode!r}")
    w3, w5 = cmath.exp(1j * math.pi / 3), cmath.exp(1j * math.pi / 5)
    X = JetMatrix2.of([[w3, 0], [1, 1 / w3]])
    target = DualComplex(float(GoldenScalar.coerce(alpha)) if mode == SHIFTED else 0.0, 1.0)
    corner = target - 2 * math.cos(8 * math.pi / 15)
    Y = JetMatrix2(DualComplex(w5), corner, DualComplex(0j), DualComplex(1 / w5))
    return X, Y


def evaluate_word(w: GroupWord, X: JetMatrix2, Y: JetMatrix2) -> JetMatrix2:
    """W(X, Y) with the same SL(2) lift of exponents as the trace polynomials."""
    mats = {("x", 1): X, ("x", -1): X.adjugate(), ("y", 1): Y, ("y", -1): Y.adjugate()}
    out = JetMatrix2.identity()
    for letter in sl2_letters(w):
        out = out @ mats[letter]
    return out


@dataclass(frozen=True)
class LambdaRepresentation:
    X: JetMatrix2
    Y: JetMatrix2
    trW: DualComplex
    mode: str

    def to_json(self) -> dict:
        return {"mode": self.mode,
                "trW": [_cjson(self.trW.value), _cjson(self.trW.slope)],
                "det_X": [_cjson(v) for v in self.X.det],
                "det_Y": [_cjson(v) for v in self.Y.det]}


def _cjson(z: complex) -> list[float]:
    return [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]


def lambda_representation(w: GroupWord, alpha, mode: str = SHIFTED) -> LambdaRepresentation:
    from .verdict import OMEGA

    if GoldenScalar.coerce(alpha) not in OMEGA:
        raise ValueError("alpha must be an exceptional trace")
    X, Y = base_jets(alpha, mode)
    return LambdaRepresentation(X, Y, evaluate_word(w, X, Y).trace, mode)


def nilpotent_square_identity(M: JetMatrix2, rng: np.random.Generator | None = None,
                              tol: float = TOL) -> tuple[JetMatrix2, bool]:
    """Check M^2 = -I + eps Z for a determinant-1 jet of trace eps.

    Z is the value part of M.  Also checks (-I + eps A)(-I + eps B) = I - eps (A + B)
    for random trace-zero A, B.
    """
    if not M.trace.close_to(EPS, tol):
        raise IdentityViolated(f"trace {tuple(M.trace)} is not eps")
    if not M.det.close_to(DualComplex(1), tol):
        raise IdentityViolated(f"determinant {tuple(M.det)} is not 1")
    Zv = M.value_part()
    Z = JetMatrix2.of(Zv)
    minus_i = JetMatrix2.identity().scale(-1)
    ok = (M @ M).close_to(minus_i + Z.scale(EPS), tol) and abs(np.trace(Zv)) <= tol
    rng = rng if rng is not None else np.random.default_rng(0)
    for _ in range(3):
        A, B = (_random_traceless(rng) for _ in range(2))
        lhs = (minus_i + JetMatrix2.of(A).scale(EPS)) @ (minus_i + JetMatrix2.of(B).scale(EPS))
        rhs = JetMatrix2.identity() - JetMatrix2.of(A + B).scale(EPS)
        ok = ok and lhs.close_to(rhs, tol)
    if not ok:
        raise IdentityViolated("M^2 differs from -I + eps Z")
    return Z, True


def _random_traceless(rng: np.random.Generator) -> np.ndarray:
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    return m - np.eye(2) * np.trace(m) / 2


def trace_eps_jet(Z: np.ndarray, slope: np.ndarray | None = None) -> JetMatrix2:
    """Jet with value part Z (Z^2 = -I) whose slope is corrected so tr = eps, det = 1.

    Needs tr S = 1 and tr(Z S) = 0, reached by adding a I + b Z to S.
    """
    Z = np.asarray(Z, dtype=complex)
    S = np.zeros((2, 2), complex) if slope is None else np.asarray(slope, dtype=complex)
    a = (1 - np.trace(S)) / 2
    b = np.trace(Z @ S) / 2  # tr(Z Z) = -2
    S = S + a * np.eye(2) + b * Z
    return JetMatrix2.of(Z, S)


def random_trace_eps_jet(rng: np.random.Generator) -> JetMatrix2:
    # conjugator with condition number <= 4 keeps entries O(1)
    q, _ = np.linalg.qr(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    P = q @ np.diag(rng.uniform(0.5, 2.0, size=2))
    Z = P @ np.diag([1j, -1j]) @ np.linalg.inv(P)
    S = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    return trace_eps_jet(Z, S)


def _numeric_closure(gens: Sequence[np.ndarray], limit: int = 1000, digits: int = 8) -> list[np.ndarray]:
    key = lambda m: tuple(np.round(m, digits).ravel().tolist())
    found = {key(g): g for g in gens}
    frontier = list(gens)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a @ g
                k = key(c)
                if k not in found:
                    found[k] = c
                    new.append(c)
        if len(found) > limit:
            raise AssertionError("numeric closure is not finite")
        frontier = new
    return list(found.values())


def z_conjugates(tol: float = 1e-8) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Conjugates M Z M^-1 of Z = (XY at eps = 0) over the lifted A5 = <X, Y>.

    Uses the verbatim jets, whose value parts have tr X = 1, tr Y = phi,
    tr XY = 0 and so generate the binary icosahedral group.
    Returns (distinct conjugates, group elements).
    """
    X, Y = base_jets(0, VERBATIM)
    Xv, Yv = X.value_part(), Y.value_part()
    group = _numeric_closure([Xv, Yv])
    Z = Xv @ Yv
    conj = []
    for M in group:
        c = M @ Z @ np.linalg.inv(M)
        if not any(np.abs(c - d).max() < tol for d in conj):
            conj.append(c)
    return conj, group


def conjugates_closed(conj: Sequence[np.ndarray], group: Sequence[np.ndarray], tol: float = 1e-8) -> bool:
    for M in group:
        Mi = np.linalg.inv(M)
        for c in conj:
            d = M @ c @ Mi
            if not any(np.abs(d - e).max() < tol for e in conj):
                return False
    return True


def jets_check(words: Sequence[GroupWord], rng: np.random.Generator) -> dict:
    """Report used by the command line: jet/exact agreement and the (XY)^2 identity."""
    from .exact import poly_derivative, poly_eval
    from .trace import trace_polynomial
    from .verdict import OMEGA, OMEGA_NAMES

    worst = 0.0
    for w in words:
        tau = trace_polynomial(w)
        dtau = poly_derivative(tau)
        for a in OMEGA:
            j = jet_eval_poly(tau, a)
            worst = max(worst, abs(j.value - float(poly_eval(tau, a))),
                        abs(j.slope - float(poly_eval(dtau, a))))
    nil_ok = all(nilpotent_square_identity(random_trace_eps_jet(rng), rng)[1] for _ in range(20))
    X, Y = base_jets(0, VERBATIM)
    verbatim_ok = nilpotent_square_identity(X @ Y, rng)[1]
    conj, group = z_conjugates()
    return {
        "words": len(words),
        "alphas": [OMEGA_NAMES[a] for a in OMEGA],
        "max_jet_error": worst,
        "jet_agreement": worst < TOL,
        "nilpotent_square_random": nil_ok,
        "nilpotent_square_XY_verbatim": verbatim_ok,
        "lifted_group_order": len(group),
        "z_conjugates": len(conj),
        "z_conjugates_closed": conjugates_closed(conj, group),
    }
