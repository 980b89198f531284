"""The binary icosahedral group 2I as unit quaternions over (1/2)Z[phi].

Elements are the 120 icosians: all (+-1, 0, 0, 0) up to position, all
(+-1/2, +-1/2, +-1/2, +-1/2), and the even permutations of
(0, +-1/2, +-(phi-1)/2, +-phi/2).  A5 = 2I/{+-1}; projective statements are
made on sign-normalised representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product

import numpy as np

from .exact import ONE, PHI, ZERO, GfPoly, GoldenScalar, poly_eval
from .trace import trace_polynomial
from .words import GroupWord

HALF = Fraction(1, 2)


class ClosureFailure(AssertionError):
    pass


class NoRepresentationFound(RuntimeError):
    pass


class PreconditionError(ValueError):
    pass


class BadOrder(ValueError):
    pass


@dataclass(frozen=True)
class Icosian:
    w: GoldenScalar
    x: GoldenScalar
    y: GoldenScalar
    z: GoldenScalar

    @property
    def coords(self) -> tuple[GoldenScalar, ...]:
        return (self.w, self.x, self.y, self.z)

    @property
    def trace(self) -> GoldenScalar:
        """Trace of the corresponding SU(2) matrix."""
        return self.w * 2

    def __mul__(self, o: "Icosian") -> "Icosian":
        w1, x1, y1, z1 = self.coords
        w2, x2, y2, z2 = o.coords
        return Icosian(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __neg__(self) -> "Icosian":
        return Icosian(-self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "Icosian":
        # unit quaternions: inverse = conjugate
        return Icosian(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> GoldenScalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def projective(self) -> "Icosian":
        """Sign-normalised representative: first non-zero coordinate positive."""
        for c in self.coords:
            if not c.is_zero():
                return self if c.sign() > 0 else -self
        raise ValueError("zero quaternion")

    def matrix(self) -> np.ndarray:
        w, x, y, z = (float(c) for c in self.coords)
        return np.array([[w + 1j * x, y + 1j * z], [-y + 1j * z, w - 1j * x]])

    def vector(self) -> tuple[GoldenScalar, GoldenScalar, GoldenScalar]:
        """Imaginary part, as a point of R^3."""
        return (self.x, self.y, self.z)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    def __str__(self):
        return "(" + ", ".join(c.pretty() for c in self.coords) + ")"


IDENTITY = Icosian(ONE, ZERO, ZERO, ZERO)
QI = Icosian(ZERO, ONE, ZERO, ZERO)
QJ = Icosian(ZERO, ZERO, ONE, ZERO)
QK = Icosian(ZERO, ZERO, ZERO, ONE)

# order 6 (trace 1) and order 10 (trace phi); together they generate 2I
GEN_S = Icosian(*(GoldenScalar(HALF),) * 4)
GEN_T = Icosian(PHI * HALF, (PHI - ONE) * HALF, GoldenScalar(HALF), ZERO)


def _is_even(p) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def icosian_coordinates() -> set[Icosian]:
    """The 120 icosians written down from their coordinates."""
    out = set()
    for i in range(4):
        for s in (1, -1):
            v = [ZERO] * 4
            v[i] = GoldenScalar(s)
            out.add(Icosian(*v))
    for signs in product((1, -1), repeat=4):
        out.add(Icosian(*(GoldenScalar(Fraction(s, 2)) for s in signs)))
    base = (ZERO, GoldenScalar(HALF), (PHI - ONE) * HALF, PHI * HALF)
    for p in permutations(range(4)):
        if not _is_even(p):
            continue
        for signs in product((1, -1), repeat=4):
            out.add(Icosian(*(base[p[i]] * signs[p[i]] for i in range(4))))
    return out


def mulclose(gens, mul=lambda a, b: a * b, max_rounds: int = 100) -> set:
    found = set(gens)
    frontier = list(found)
    for _ in range(max_rounds):
        new = []
        for a in frontier:
            for g in gens:
                for c in (mul(a, g), mul(g, a)):
                    if c not in found:
                        found.add(c)
                        new.append(c)
        if not new:
            return found
        frontier = new
    raise ClosureFailure("closure did not terminate")


class BinaryIcosahedral:
    """2I with a precomputed Cayley table on indices 0..119."""

    def __init__(self):
        gen = mulclose([GEN_S, GEN_T])
        if gen != icosian_coordinates():
            raise ClosureFailure("generated group differs from the icosian coordinates")
        if len(gen) != 120:
            raise ClosureFailure(f"expected 120 elements, got {len(gen)}")
        key = lambda q: tuple((c.a, c.b) for c in q.coords)
        self.elements: list[Icosian] = sorted(gen, key=key, reverse=True)
        self.index = {g: i for i, g in enumerate(self.elements)}
        assert self.elements[0] == IDENTITY
        self.traces = [g.trace for g in self.elements]
        self.neg = [self.index[-g] for g in self.elements]
        self.inv = [self.index[g.inverse()] for g in self.elements]

    @cached_property
    def table(self) -> list[list[int]]:
        els, idx = self.elements, self.index
        return [[idx[a * b] for b in els] for a in els]

    def __len__(self):
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, i: int, n: int) -> int:
        out = 0
        for _ in range(n):
            out = self.table[out][i]
        return out

    def evaluate(self, w: GroupWord, xi: int, yi: int) -> int:
        out = 0
        for a, b in w.syllables:
            out = self.table[out][self.power(xi, a)]
            out = self.table[out][self.power(yi, b)]
        return out

    def closure(self, gens) -> set[int]:
        return mulclose(list(gens), self.mul)

    def projective_class(self, i: int) -> frozenset[int]:
        return frozenset((i, self.neg[i]))

    def projective_order_of_subgroup(self, gens) -> int:
        sub = self.closure(gens)
        return len({self.projective_class(i) for i in sub})


@lru_cache(maxsize=None)
def binary_icosahedral() -> BinaryIcosahedral:
    return BinaryIcosahedral()


def build_binary_icosahedral() -> list[Icosian]:
    return list(binary_icosahedral().elements)


def projective_order(g: Icosian) -> int:
    """Order of the image of g in A5, read off |tr g|."""
    t = abs(g.trace)
    if t == 2:
        return 1
    if t.is_zero():
        return 2
    if t == 1:
        return 3
    if t == PHI or t == PHI - ONE:
        return 5
    raise ValueError(f"{g} is not an icosian")


def element_order(g: Icosian) -> int:
    n, p = 1, g
    while p != IDENTITY:
        p, n = p * g, n + 1
        if n > 10:
            raise ValueError(f"{g} has infinite order")
    return n


@dataclass(frozen=True)
class EssentialRep:
    word: GroupWord
    alpha: GoldenScalar
    X: Icosian
    Y: Icosian
    image_order: int

    @property
    def W(self) -> Icosian:
        grp = binary_icosahedral()
        return grp.elements[grp.evaluate(self.word, grp.index[self.X], grp.index[self.Y])]

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "X": self.X.to_json(),
            "Y": self.Y.to_json(),
            "W": self.W.to_json(),
            "image_order": self.image_order,
        }


def essential_representation(w: GroupWord, alpha) -> EssentialRep:
    from .verdict import OMEGA

    alpha = GoldenScalar.coerce(alpha)
    if alpha not in OMEGA:
        raise PreconditionError(f"{alpha.pretty()} is not an exceptional trace")
    if not poly_eval(trace_polynomial(w), alpha).is_zero():
        raise PreconditionError(f"{alpha.pretty()} is not a root of tau_W for W = {w}")
    grp = binary_icosahedral()
    tr = grp.traces
    xs = [i for i in range(len(grp)) if abs(tr[i]) == 1]
    ys = [i for i in range(len(grp)) if abs(tr[i]) == PHI]
    for xi in xs:
        for yi in ys:
            if abs(tr[grp.mul(xi, yi)]) != alpha:
                continue
            if not tr[grp.evaluate(w, xi, yi)].is_zero():
                continue
            order = grp.projective_order_of_subgroup([xi, yi])
            if order != 60:
                continue
            return EssentialRep(w, alpha, grp.elements[xi], grp.elements[yi], order)
    raise NoRepresentationFound(f"no essential representation onto A5 for {w} at {alpha.pretty()}")


def exceptional_representations(w: GroupWord) -> list[EssentialRep]:
    """One essential representation per exceptional root of tau_W."""
    from .verdict import OMEGA

    tau = trace_polynomial(w)
    return [essential_representation(w, a) for a in OMEGA if poly_eval(tau, a).is_zero()]


def commute_projectively(g: Icosian, h: Icosian) -> bool:
    gh, hg = g * h, h * g
    return gh == hg or gh == -hg


def centralizer_klein(c: Icosian) -> tuple[tuple[Icosian, ...], Icosian, Icosian]:
    """Centraliser V = {1, a, b, c} of the involution c in A5."""
    if not c.trace.is_zero():
        raise BadOrder(f"{c} does not have order 2 in A5")
    c = c.projective()
    others = sorted(
        {g.projective() for g in build_binary_icosahedral()
         if g.trace.is_zero() and commute_projectively(g, c)} - {c},
        key=lambda q: tuple((x.a, x.b) for x in q.coords), reverse=True)
    if len(others) != 2:
        raise AssertionError(f"centraliser of {c} has {len(others) + 2} elements")
    a, b = others
    return (IDENTITY, a, b, c), a, b


def trace_zero_elements() -> list[Icosian]:
    return [g for g in build_binary_icosahedral() if g.trace.is_zero()]
