"""Presentation 2-complexes, finite abelian covers and mod-2 homology.

A finite cover with deck group Z/n x Z/n stands in for an infinite Z^2
cover: the numbers reported here are finite-level evidence, never a proof
of infinite-dimensionality.

Text format for complexes (``to_text`` / ``from_text``)::

    # tracelab 2-complex v1
    vertices <count>
    edge <index> <tail> <head> [label]
    face <index> <label> : <signed 1-based edge indices>
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .intlinalg import smith_normal_form
from .subgroups import Presentation

SQUARE_LABEL = "from_W2_square"


class RelatorNotKilled(ValueError):
    pass


class NonSurjectiveAssignment(UserWarning):
    """The cover exists but is disconnected."""


@dataclass(frozen=True)
class TwoComplex:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]  # closed edge paths, signed 1-based edge indices
    face_labels: tuple[str, ...] = ()
    edge_labels: tuple[str, ...] = ()
    # for covers: (base cell index, deck element) per edge and per face
    edge_lift: tuple = field(default=(), compare=False)
    face_lift: tuple = field(default=(), compare=False)

    def __post_init__(self):
        for f in self.faces:
            if not f:
                continue
            for s in f:
                if not 1 <= abs(s) <= len(self.edges):
                    raise ValueError(f"face references missing edge {s}")
            ends = [self._ends(s) for s in f]
            for (_, h), (t, _) in zip(ends, ends[1:] + ends[:1]):
                if h != t:
                    raise ValueError("face boundary is not a closed path")

    def _ends(self, s: int) -> tuple[int, int]:
        t, h = self.edges[abs(s) - 1]
        return (t, h) if s > 0 else (h, t)

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.n_vertices, len(self.edges), len(self.faces)

    def euler_characteristic(self) -> int:
        c0, c1, c2 = self.counts
        return c0 - c1 + c2

    def label(self, j: int) -> str:
        return self.face_labels[j] if self.face_labels else "relator"

    def drop_faces(self, label: str) -> "TwoComplex":
        keep = [j for j in range(len(self.faces)) if self.label(j) != label]
        return TwoComplex(self.n_vertices, self.edges, tuple(self.faces[j] for j in keep),
                          tuple(self.label(j) for j in keep), self.edge_labels, self.edge_lift,
                          tuple(self.face_lift[j] for j in keep) if self.face_lift else ())

    def boundary_1(self) -> list[int]:
        """Columns of d1 over F2, one bitmask over vertices per edge."""
        return [(1 << t) ^ (1 << h) for t, h in self.edges]

    def boundary_2(self) -> list[int]:
        """Columns of d2 over F2, one bitmask over edges per face."""
        out = []
        for f in self.faces:
            m = 0
            for s in f:
                m ^= 1 << (abs(s) - 1)
            out.append(m)
        return out

    def to_text(self) -> str:
        lines = ["# tracelab 2-complex v1", f"vertices {self.n_vertices}"]
        for i, (t, h) in enumerate(self.edges):
            lab = f" {self.edge_labels[i]}" if self.edge_labels else ""
            lines.append(f"edge {i + 1} {t} {h}{lab}")
        for j, f in enumerate(self.faces):
            lines.append(f"face {j + 1} {self.label(j)} : " + " ".join(str(s) for s in f))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TwoComplex":
        nv, edges, elabels, faces, flabels = 0, [], [], [], []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, *rest = line.split()
            if head == "vertices":
                nv = int(rest[0])
            elif head == "edge":
                edges.append((int(rest[1]), int(rest[2])))
                if len(rest) > 3:
                    elabels.append(rest[3])
            elif head == "face":
                lab, word = line.split(None, 2)[2].split(":", 1)
                flabels.append(lab.strip())
                faces.append(tuple(int(s) for s in word.split()))
            else:
                raise ValueError(f"unknown line: {raw!r}")
        return cls(nv, tuple(edges), tuple(faces), tuple(flabels),
                   tuple(elabels) if len(elabels) == len(edges) else ())


def presentation_complex(p: Presentation) -> TwoComplex:
    """One vertex, a loop per generator, a disc per relator."""
    return TwoComplex(1, tuple((0, 0) for _ in range(p.n_generators)),
                      tuple(tuple(r.word) for r in p.relators),
                      tuple(r.provenance for r in p.relators),
                      tuple(p.name(i + 1) for i in range(p.n_generators)))


def _rank_f2(columns: Sequence[int]) -> int:
    basis: dict[int, int] = {}
    for v in columns:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


@dataclass(frozen=True)
class ChainComplexF2:
    d1: tuple[int, ...]
    d2: tuple[int, ...]
    counts: tuple[int, int, int]

    @classmethod
    def of(cls, K: TwoComplex) -> "ChainComplexF2":
        return cls(tuple(K.boundary_1()), tuple(K.boundary_2()), K.counts)

    def composite_vanishes(self) -> bool:
        """d1 d2 = 0."""
        for col in self.d2:
            acc, i = 0, 0
            while col:
                if col & 1:
                    acc ^= self.d1[i]
                col >>= 1
                i += 1
            if acc:
                return False
        return True

    def betti(self) -> tuple[int, int, int]:
        c0, c1, c2 = self.counts
        r1, r2 = _rank_f2(self.d1), _rank_f2(self.d2)
        return c0 - r1, c1 - r1 - r2, c2 - r2


def homology_f2(K: TwoComplex) -> tuple[int, int, int]:
    return ChainComplexF2.of(K).betti()


# -- covers -------------------------------------------------------------------

Deck = tuple[int, int]


@dataclass(frozen=True)
class CoverSpec:
    """Homomorphism from the edge group onto Z/n x Z/n, one image per 1-cell."""
    n: int
    assignment: tuple[Deck, ...]

    @classmethod
    def of(cls, n: int, assignment: Mapping[int, Deck] | Sequence[Deck], n_edges: int | None = None):
        if isinstance(assignment, Mapping):
            size = n_edges if n_edges is not None else max(assignment, default=0)
            imgs = [tuple(assignment.get(i + 1, (0, 0))) for i in range(size)]
        else:
            imgs = [tuple(a) for a in assignment]
        return cls(n, tuple((a % n, b % n) for a, b in imgs))

    def image(self, word: Sequence[int]) -> Deck:
        u = v = 0
        for s in word:
            a, b = self.assignment[abs(s) - 1]
            sg = 1 if s > 0 else -1
            u, v = u + sg * a, v + sg * b
        return u % self.n, v % self.n

    def is_surjective(self) -> bool:
        n = self.n
        seen, todo = {(0, 0)}, [(0, 0)]
        while todo:
            a, b = todo.pop()
            for c, d in self.assignment:
                e = ((a + c) % n, (b + d) % n)
                if e not in seen:
                    seen.add(e)
                    todo.append(e)
        return len(seen) == n * n

    def to_text(self) -> str:
        return ";".join(f"{i + 1}:{a},{b}" for i, (a, b) in enumerate(self.assignment) if (a, b) != (0, 0))

    @classmethod
    def parse(cls, n: int, text: str, n_edges: int) -> "CoverSpec":
        """``"1:1,0;2:0,1"`` -> generator 1 to (1,0), generator 2 to (0,1), rest to 0."""
        amap = {}
        for item in filter(None, (s.strip() for s in text.split(";"))):
            g, val = item.split(":")
            a, b = val.split(",")
            amap[int(g)] = (int(a), int(b))
        return cls.of(n, amap, n_edges)


def build_finite_cover(K: TwoComplex, spec: CoverSpec) -> TwoComplex:
    """The regular Z/n x Z/n cover of K determined by ``spec``."""
    n = spec.n
    if len(spec.assignment) != len(K.edges):
        raise ValueError("assignment must give an image for every 1-cell")
    if n % 2 == 0 and any(K.label(j) == SQUARE_LABEL for j in range(len(K.faces))):
        raise ValueError("squared relators present: n must be odd")
    for j, f in enumerate(K.faces):
        if spec.image(f) != (0, 0):
            raise RelatorNotKilled(f"relator {j + 1} ({K.label(j)}) maps to {spec.image(f)}")
    if not spec.is_surjective():
        warnings.warn(f"assignment does not generate Z/{n} x Z/{n}; the cover is disconnected",
                      NonSurjectiveAssignment, stacklevel=2)
    decks = [(a, b) for a in range(n) for b in range(n)]
    dnum = {d: i for i, d in enumerate(decks)}
    nd = len(decks)

    def shift(d: Deck, e: Deck, sign: int = 1) -> Deck:
        return (d[0] + sign * e[0]) % n, (d[1] + sign * e[1]) % n

    # vertex (v, d) -> v * nd + dnum[d]; edge (e, d) -> e * nd + dnum[d]
    edges, edge_lift = [], []
    for e, (t, h) in enumerate(K.edges):
        for d in decks:
            edges.append((t * nd + dnum[d], h * nd + dnum[shift(d, spec.assignment[e])]))
            edge_lift.append((e, d))
    faces, labels, face_lift = [], [], []
    for j, f in enumerate(K.faces):
        for d in decks:
            path, cur = [], d
            for s in f:
                e = abs(s) - 1
                if s > 0:
                    path.append(e * nd + dnum[cur] + 1)
                    cur = shift(cur, spec.assignment[e])
                else:
                    cur = shift(cur, spec.assignment[e], -1)
                    path.append(-(e * nd + dnum[cur] + 1))
            assert cur == d
            faces.append(tuple(path))
            labels.append(K.label(j))
            face_lift.append((j, d))
    return TwoComplex(K.n_vertices * nd, tuple(edges), tuple(faces), tuple(labels),
                      (), tuple(edge_lift), tuple(face_lift))


def deck_translation(cover: TwoComplex, n: int, t: Deck) -> tuple[list[int], list[int]]:
    """Permutations of edges and faces induced by translating by t."""
    def move(lifts):
        where = {l: i for i, l in enumerate(lifts)}
        return [where[(c, ((d[0] + t[0]) % n, (d[1] + t[1]) % n))] for c, d in lifts]
    return move(cover.edge_lift), move(cover.face_lift)


def lifted_squares_are_squares(cover: TwoComplex) -> bool:
    """Every lift of a squared 2-cell is attached along a path traversed twice."""
    for j, f in enumerate(cover.faces):
        if cover.label(j) == SQUARE_LABEL:
            h = len(f) // 2
            if len(f) % 2 or f[:h] != f[h:]:
                return False
    return True


def free_abelian_cover_spec(p: Presentation, n: int) -> CoverSpec:
    """Reduce mod n the first two free coordinates of the abelianisation.

    Uses the Smith form U R V = D of the exponent-sum matrix: columns of V
    past the rank span the homomorphisms to Z that kill every relator.
    Generators map to 0 in a coordinate the abelianisation lacks.
    """
    R = p.exponent_matrix()
    snf = smith_normal_form(R) if R else None
    r = snf.rank if snf else 0
    V = snf.V if snf else [[int(i == j) for j in range(p.n_generators)] for i in range(p.n_generators)]
    free_cols = list(range(r, p.n_generators))[:2]
    imgs = []
    for g in range(p.n_generators):
        coords = [V[g][j] for j in free_cols] + [0] * (2 - len(free_cols))
        imgs.append((coords[0], coords[1]))
    return CoverSpec.of(n, imgs)


@dataclass
class GrowthRow:
    n: int
    h_L: tuple[int, int, int]
    h_K: tuple[int, int, int]
    surjective: bool
    squares_literal: bool

    def to_json(self) -> dict:
        return {"n": self.n, "h0_L": self.h_L[0], "h1_L": self.h_L[1], "h2_L": self.h_L[2],
                "h1_K": self.h_K[1], "h2_K": self.h_K[2], "surjective": self.surjective,
                "h1_L_equals_h1_K": self.h_L[1] == self.h_K[1],
                "squares_literal": self.squares_literal}


@dataclass
class GrowthTable:
    rows: list[GrowthRow]
    note: str = "finite covers only: evidence, not a proof of infinite H1"

    @property
    def h1_grows(self) -> bool:
        h = [r.h_L[1] for r in self.rows]
        return all(a < b for a, b in zip(h, h[1:])) and len(h) > 1

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "h1_grows": self.h1_grows, "note": self.note}

    def to_csv(self) -> str:
        buf = io.StringIO()
        rows = [r.to_json() for r in self.rows]
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()


def h1_growth_experiment(p: Presentation | TwoComplex,
                         spec_family: Callable[[int], CoverSpec] | Mapping[int, CoverSpec],
                         n_list: Sequence[int]) -> GrowthTable:
    """Mod-2 homology of the covers of K and of L = K minus its squared 2-cells."""
    K = p if isinstance(p, TwoComplex) else presentation_complex(p)
    L = K.drop_faces(SQUARE_LABEL)
    rows = []
    for n in n_list:
        spec = spec_family[n] if isinstance(spec_family, Mapping) else spec_family(n)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonSurjectiveAssignment)
            Kbar = build_finite_cover(K, spec)
            Lbar = build_finite_cover(L, spec)
        rows.append(GrowthRow(n, homology_f2(Lbar), homology_f2(Kbar), spec.is_surjective(),
                              lifted_squares_are_squares(Kbar)))
    return GrowthTable(rows)


# -- small fixtures -----------------------------------------------------------

def _named(n: int, rels: Sequence[Sequence[int]], names: Sequence[str]) -> Presentation:
    from .subgroups import Relator
    return Presentation(n, tuple(Relator(tuple(r), "relator") for r in rels), tuple(names))


def torus_presentation() -> Presentation:
    return _named(2, [(1, 2, -1, -2)], ("a", "b"))


def wedge_presentation(k: int = 2) -> Presentation:
    return _named(k, [], tuple(f"a{i + 1}" for i in range(k)))


def genus2_presentation() -> Presentation:
    return _named(4, [(1, 2, -1, -2, 3, 4, -3, -4)], ("a", "b", "c", "d"))


def projective_plane_presentation() -> Presentation:
    return _named(1, [(1, 1)], ("a",))


BUILTIN_PRESENTATIONS = {
    "torus": torus_presentation,
    "wedge2": wedge_presentation,
    "genus2": genus2_presentation,
    "rp2": projective_plane_presentation,
}
