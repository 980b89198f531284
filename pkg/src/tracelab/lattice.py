"""The Z-span of the edge midpoints of a regular icosahedron.

Vertices are the cyclic permutations of (0, +-1, +-phi), so the three
coordinate axes pass through pairs of antipodal edge midpoints and the
Klein group V = {1, a, b, c} consists of the half-turns about those axes.

Vectors of Q(sqrt5)^3 are flattened to Q^6 through the {1, phi} basis of
each coordinate; lattices are then ordinary integer row lattices with a
common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .exact import ONE, PHI, ZERO, GoldenScalar
from .intlinalg import (AbelianGroup, Matrix, SmithForm, hermite_normal_form, inverse,
                        smith_normal_form, solve_in_hnf)


class NotStable(ValueError):
    pass


@dataclass(frozen=True)
class GoldenVector3:
    x: GoldenScalar
    y: GoldenScalar
    z: GoldenScalar

    @classmethod
    def of(cls, *cs) -> "GoldenVector3":
        return cls(*(GoldenScalar.coerce(c) for c in cs))

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __add__(self, o):
        return GoldenVector3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o):
        return GoldenVector3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self):
        return GoldenVector3(-self.x, -self.y, -self.z)

    def scale(self, c) -> "GoldenVector3":
        return GoldenVector3(self.x * c, self.y * c, self.z * c)

    def dot(self, o) -> GoldenScalar:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def norm2(self) -> GoldenScalar:
        return self.dot(self)

    def flatten(self) -> list[Fraction]:
        out = []
        for c in self:
            out += [c.a, c.b]
        return out

    @classmethod
    def unflatten(cls, v: Sequence) -> "GoldenVector3":
        return cls(*(GoldenScalar(v[2 * i], v[2 * i + 1]) for i in range(3)))

    def __str__(self):
        return "(" + ", ".join(c.pretty() for c in self) + ")"


ZERO3 = GoldenVector3(ZERO, ZERO, ZERO)

Rotation = tuple[tuple[GoldenScalar, ...], ...]


def diagonal_rotation(*d: int) -> Rotation:
    return tuple(tuple(GoldenScalar(d[i] if i == j else 0) for j in range(3)) for i in range(3))


ROT_IDENTITY = diagonal_rotation(1, 1, 1)
ROT_A = diagonal_rotation(1, -1, -1)   # half-turn about the x-axis
ROT_B = diagonal_rotation(-1, 1, -1)   # half-turn about the y-axis
ROT_C = diagonal_rotation(-1, -1, 1)   # half-turn about the z-axis
ANTIPODAL = diagonal_rotation(-1, -1, -1)


def rotate(g: Rotation, v: GoldenVector3) -> GoldenVector3:
    return GoldenVector3(*(sum((g[i][j] * c for j, c in enumerate(v)), ZERO) for i in range(3)))


def compose(g: Rotation, h: Rotation) -> Rotation:
    return tuple(tuple(sum((g[i][k] * h[k][j] for k in range(3)), ZERO) for j in range(3))
                 for i in range(3))


# -- the icosahedron ----------------------------------------------------------

def icosahedron_vertices() -> list[GoldenVector3]:
    out = []
    for s in (1, -1):
        for t in (1, -1):
            base = (ZERO, GoldenScalar(s), PHI * t)
            for r in range(3):
                out.append(GoldenVector3(*(base[(i - r) % 3] for i in range(3))))
    return out


def icosahedron_edges() -> list[tuple[int, int]]:
    """Vertex index pairs at the minimal squared distance 4."""
    vs = icosahedron_vertices()
    return [(i, j) for i, j in combinations(range(len(vs)), 2) if (vs[i] - vs[j]).norm2() == 4]


def icosahedron_midpoints() -> list[GoldenVector3]:
    vs = icosahedron_vertices()
    return [(vs[i] + vs[j]).scale(Fraction(1, 2)) for i, j in icosahedron_edges()]


# -- lattices -----------------------------------------------------------------

@dataclass(frozen=True)
class IntegerLattice:
    """Row lattice (1/denominator) * basis inside Q^6."""
    basis: Matrix
    denominator: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def vector(self, row: Sequence[int]) -> GoldenVector3:
        return GoldenVector3.unflatten([Fraction(x, self.denominator) for x in row])

    def basis_vectors(self) -> list[GoldenVector3]:
        return [self.vector(r) for r in self.basis]

    def coordinates(self, v: GoldenVector3) -> list[int] | None:
        """Integer coordinates of v in the basis, None if v is not in the lattice."""
        scaled = [x * self.denominator for x in v.flatten()]
        if any(x.denominator != 1 for x in scaled):
            return None
        return solve_in_hnf(self.basis, [int(x) for x in scaled])

    def contains(self, v: GoldenVector3) -> bool:
        return self.coordinates(v) is not None

    def index_invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors of the scaled basis, i.e. of Z^6 / (denominator * M)."""
        return smith_normal_form(self.basis).diagonal


def lattice_from_vectors(vecs: Sequence[GoldenVector3]) -> IntegerLattice:
    if not vecs:
        raise ValueError("need at least one vector")
    flat = [v.flatten() for v in vecs]
    den = lcm(*(x.denominator for row in flat for x in row))
    rows = [[int(x * den) for x in row] for row in flat]
    return IntegerLattice(hermite_normal_form(rows), den)


def midpoint_lattice() -> IntegerLattice:
    return lattice_from_vectors(icosahedron_midpoints())


def _action_matrix(M: IntegerLattice, g: Rotation) -> Matrix:
    """Rows: coordinates of g(b_i) in the basis of M."""
    rows = []
    for b in M.basis_vectors():
        c = M.coordinates(rotate(g, b))
        if c is None:
            raise NotStable(f"rotation does not preserve the lattice (image of {b})")
        rows.append(c)
    return rows


def augmentation_matrix(M: IntegerLattice, g: Rotation) -> Matrix:
    """Matrix of 1 - g on M, rows indexed by basis vectors."""
    G = _action_matrix(M, g)
    n = M.rank
    return [[int(i == j) - G[i][j] for j in range(n)] for i in range(n)]


def coinvariants(M: IntegerLattice, g: Rotation) -> AbelianGroup:
    """Structure of M / (1 - g) M."""
    snf = smith_normal_form(augmentation_matrix(M, g))
    return AbelianGroup(snf.torsion, M.rank - snf.rank)


def coinvariant_smith_form(M: IntegerLattice, g: Rotation) -> SmithForm:
    return smith_normal_form(augmentation_matrix(M, g))


def free_quotient_action(M: IntegerLattice, c: Rotation, h: Rotation) -> Matrix:
    """Matrix of h on (M / (1 - c) M) / torsion, in a basis from the Smith form.

    With U A V = D for A the matrix of 1 - c, the rows f_j of V^-1 form a basis
    of M in which (1 - c) M is spanned by d_j f_j; the free quotient is spanned
    by the f_j with d_j = 0 and coordinates transform by v -> v V.
    """
    if compose(c, h) != compose(h, c):
        raise NotStable("h does not commute with c")
    snf = smith_normal_form(augmentation_matrix(M, c))
    r, n = snf.rank, M.rank
    F = inverse(snf.V)
    H = _action_matrix(M, h)
    out = []
    for j in range(r, n):
        image = [sum(F[j][k] * H[k][l] for k in range(n)) for l in range(n)]
        coords = [sum(image[k] * snf.V[k][l] for k in range(n)) for l in range(n)]
        out.append(coords[r:])
    return out


SQRT5_MINUS_2 = GoldenScalar(-3, 2)  # 2 phi - 3


def _neighbor_sums(midpoints, edges):
    for i, (u, v) in enumerate(edges):
        nbrs = [j for j, (p, q) in enumerate(edges) if j != i and {p, q} & {u, v}]
        total = ZERO3
        for j in nbrs:
            total = total + midpoints[j]
        yield i, nbrs, total


def neighbor_sum_identity_check(midpoints: Sequence[GoldenVector3] | None = None,
                                edges: Sequence[tuple[int, int]] | None = None,
                                factor: GoldenScalar = SQRT5_MINUS_2) -> bool:
    """Whether factor * e is the sum of the 8 midpoints on edges touching e's edge.

    The default factor is sqrt5 - 2; see :func:`neighbor_sum_factor` for the
    value the icosahedron actually produces.
    """
    edges = list(edges if edges is not None else icosahedron_edges())
    mids = list(midpoints if midpoints is not None else icosahedron_midpoints())
    for i, nbrs, total in _neighbor_sums(mids, edges):
        if len(nbrs) != 8 or total != mids[i].scale(factor):
            return False
    return True


def neighbor_sum_factor() -> GoldenScalar | None:
    """The scalar f with (sum of the 8 neighbouring midpoints) = f * e for every e.

    None if no single scalar works.
    """
    mids = icosahedron_midpoints()
    found = None
    for i, _, total in _neighbor_sums(mids, icosahedron_edges()):
        e = mids[i]
        j = next(n for n, c in enumerate(e) if not c.is_zero())
        f = list(total)[j] / list(e)[j]
        if e.scale(f) != total or (found is not None and f != found):
            return None
        found = f
    return found


def generator_invariant_factors(M: IntegerLattice, vecs: Sequence[GoldenVector3]) -> tuple[int, ...]:
    """Invariant factors of the generators written in the basis of M.

    All ones, rank(M) of them, exactly when the generators span M freely
    on that basis, i.e. M is Z^rank.
    """
    return smith_normal_form([M.coordinates(v) for v in vecs]).diagonal


def permutes(g: Rotation, points: Sequence[GoldenVector3]) -> bool:
    pts = set(points)
    return {rotate(g, p) for p in pts} == pts


def verify_midpoint_lattice() -> dict:
    """All midpoint-lattice checks, as a JSON-ready report."""
    mids = icosahedron_midpoints()
    M = lattice_from_vectors(mids)
    free = generator_invariant_factors(M, mids)
    snf_c = coinvariant_smith_form(M, ROT_C)
    H0 = coinvariants(M, ROT_C)
    acts = {name: free_quotient_action(M, ROT_C, h)
            for name, h in (("a", ROT_A), ("b", ROT_B), ("c", ROT_C))}
    checks = {
        "midpoint_count_30": len(mids) == 30,
        "rank_6": M.rank == 6,
        "free_abelian": all(d == 1 for d in free) and len(free) == 6,
        "coinvariants_Z2^4+Z^2": H0 == AbelianGroup((2, 2, 2, 2), 2),
        "a_acts_as_minus_one": acts["a"] == [[-1, 0], [0, -1]],
        "b_acts_as_minus_one": acts["b"] == [[-1, 0], [0, -1]],
        "c_acts_trivially": acts["c"] == [[1, 0], [0, 1]],
        "ab_equals_c": compose(ROT_A, ROT_B) == ROT_C,
        "V_permutes_midpoints": all(permutes(g, mids) for g in (ROT_A, ROT_B, ROT_C)),
        "neighbor_sum_identity": neighbor_sum_identity_check(mids),
    }
    nf = neighbor_sum_factor()
    return {
        "rank": M.rank,
        "denominator": M.denominator,
        "basis": M.basis,
        "invariant_factors": list(free),
        "coinvariants_c": H0.to_json(),
        "augmentation_smith_diagonal": list(snf_c.diagonal),
        "free_quotient_action": acts,
        "observed_neighbor_sum_factor": None if nf is None else str(nf),
        "checks": checks,
        "all_passed": all(checks.values()),
    }
