"""Coset tables in A5 and Reidemeister-Schreier presentations.

Given an essential representation rho: G -> A5 with c = rho(W), the subgroup
Gamma = rho^-1(C), C = <c>, has index 30 in G.  Its presentation is read off
the coset action of rho(x), rho(y) on C\\A5 with a breadth-first Schreier
transversal.  Relators are conjugates t R t^-1 of x^3, y^5 and W^2, one per
orbit of the corresponding cyclic action; a coset fixed by W contributes the
square of the rewrite of W.

Words in Schreier generators are tuples of non-zero ints: +i is generator
g_i, -i its inverse (1-based).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .icosians import EssentialRep, binary_icosahedral, centralizer_klein, essential_representation
from .intlinalg import AbelianGroup, cokernel
from .words import GroupWord

PROVENANCES = ("from_x3", "from_y5", "from_W2_pair", "from_W2_square")

GENS = ("x", "y")
Letter = tuple[str, int]


class CensusMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class CosetTable:
    subgroup: str
    x_action: tuple[int, ...]
    y_action: tuple[int, ...]
    transversal: tuple[tuple[Letter, ...], ...]
    tree_edges: frozenset  # (coset, gen) pairs whose Schreier generator is trivial

    @property
    def index(self) -> int:
        return len(self.x_action)

    def act(self, coset: int, g: str, e: int = 1) -> int:
        perm = self.x_action if g == "x" else self.y_action
        if e > 0:
            for _ in range(e):
                coset = perm[coset]
        else:
            inv = _inverse_perm(perm)
            for _ in range(-e):
                coset = inv[coset]
        return coset

    def apply(self, coset: int, letters: Sequence[Letter]) -> int:
        for g, e in letters:
            coset = self.act(coset, g, e)
        return coset

    def permutation(self, letters: Sequence[Letter]) -> tuple[int, ...]:
        return tuple(self.apply(i, letters) for i in range(self.index))

    def is_transitive(self) -> bool:
        seen, todo = {0}, [0]
        while todo:
            i = todo.pop()
            for p in (self.x_action, self.y_action):
                if p[i] not in seen:
                    seen.add(p[i])
                    todo.append(p[i])
        return len(seen) == self.index


def _inverse_perm(p: Sequence[int]) -> list[int]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return out


def orbits(perm: Sequence[int]) -> list[list[int]]:
    """Cycles of a permutation, each starting at its least point, sorted."""
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def coset_table(rep: EssentialRep, sub: str = "C") -> CosetTable:
    """Right cosets of C = <rho(W)> (index 30) or of its centraliser V (index 15)."""
    grp = binary_icosahedral()
    c = rep.W
    if sub == "C":
        H = [0, grp.index[c]]
    elif sub == "V":
        V, _, _ = centralizer_klein(c)
        H = [grp.index[g] for g in V]
    else:
        raise ValueError(f"subgroup must be 'C' or 'V', not {sub!r}")
    H = sorted({j for i in H for j in (i, grp.neg[i])})

    def coset_of(g: int) -> frozenset:
        return frozenset(grp.mul(h, g) for h in H)

    gen_idx = {"x": grp.index[rep.X], "y": grp.index[rep.Y]}
    gen_inv = {g: grp.inv[i] for g, i in gen_idx.items()}
    reps = [0]
    number = {coset_of(0): 0}
    words: list[tuple[Letter, ...]] = [()]
    tree = set()
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for g in GENS:
            for e in (1, -1):
                h = grp.mul(reps[i], gen_idx[g] if e > 0 else gen_inv[g])
                key = coset_of(h)
                if key in number:
                    continue
                j = len(reps)
                number[key] = j
                reps.append(h)
                words.append(words[i] + ((g, e),))
                tree.add((i, g) if e > 0 else (j, g))
                queue.append(j)
    n = len(reps)
    acts = {g: tuple(number[coset_of(grp.mul(reps[i], gen_idx[g]))] for i in range(n)) for g in GENS}
    table = CosetTable(sub, acts["x"], acts["y"], tuple(words), frozenset(tree))
    if not table.is_transitive():
        raise AssertionError("coset action is not transitive")
    if table.permutation([("x", 3)]) != tuple(range(n)) or table.permutation([("y", 5)]) != tuple(range(n)):
        raise AssertionError("x^3 or y^5 does not act trivially on cosets")
    return table


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for s in word:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Relator:
    word: tuple[int, ...]
    provenance: str
    root: tuple[int, ...] | None = None  # set for squared relators: word == root + root
    coset: int = 0

    def is_literal_square(self) -> bool:
        return self.root is not None and self.word == self.root + self.root


@dataclass(frozen=True)
class Presentation:
    n_generators: int
    relators: tuple[Relator, ...]
    generator_names: tuple[str, ...] = ()
    notes: dict = field(default_factory=dict, compare=False)

    def census(self) -> tuple[int, ...]:
        c = Counter(r.provenance for r in self.relators)
        return tuple(c.get(p, 0) for p in PROVENANCES)

    @property
    def squared_roots(self) -> list[tuple[int, ...]]:
        return [r.root for r in self.relators if r.provenance == "from_W2_square"]

    def euler_characteristic(self) -> int:
        return 1 - self.n_generators + len(self.relators)

    def without(self, provenance: str) -> "Presentation":
        return Presentation(self.n_generators,
                            tuple(r for r in self.relators if r.provenance != provenance),
                            self.generator_names)

    def exponent_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.n_generators
            for s in r.word:
                row[abs(s) - 1] += 1 if s > 0 else -1
            rows.append(row)
        return rows

    def name(self, i: int) -> str:
        return self.generator_names[i - 1] if self.generator_names else f"g{i}"

    def word_text(self, word: Sequence[int]) -> str:
        return " ".join(self.name(abs(s)) + ("" if s > 0 else "^-1") for s in word) or "1"

    def to_json(self) -> dict:
        return {
            "generators": self.n_generators,
            "relators": [
                {"word": list(r.word), "provenance": r.provenance,
                 **({"root": list(r.root)} if r.root is not None else {})}
                for r in self.relators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        rels = tuple(Relator(tuple(r["word"]), r.get("provenance", "relator"),
                             tuple(r["root"]) if "root" in r else None)
                     for r in data["relators"])
        return cls(int(data["generators"]), rels)

    def to_text(self) -> str:
        lines = [f"generators {self.n_generators}"]
        for r in self.relators:
            lines.append(f"{r.provenance}: {self.word_text(r.word)}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        """Parse the ``to_text`` format; provenance prefixes are optional."""
        n, rels = None, []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("generators"):
                n = int(line.split()[1])
                continue
            prov = "relator"
            if ":" in line:
                prov, line = (s.strip() for s in line.split(":", 1))
            word = []
            for tok in line.split():
                if tok == "1":
                    continue
                inv = tok.endswith("^-1")
                tok = tok[:-3] if inv else tok
                i = int(tok.lstrip("g"))
                word.append(-i if inv else i)
            word = tuple(word)
            root = None
            if prov == "from_W2_square" and len(word) % 2 == 0 and word[:len(word) // 2] * 2 == word:
                root = word[:len(word) // 2]
            rels.append(Relator(word, prov, root))
        if n is None:
            raise ValueError("missing 'generators N' line")
        return cls(n, tuple(rels))


class _Rewriter:
    def __init__(self, table: CosetTable):
        self.table = table
        self.number: dict[tuple[int, str], int] = {}
        for i in range(table.index):
            for g in GENS:
                if (i, g) not in table.tree_edges:
                    self.number[(i, g)] = len(self.number) + 1

    def rewrite(self, start: int, letters: Sequence[Letter]) -> tuple[tuple[int, ...], int]:
        """Schreier rewrite of a word read from coset ``start``; returns (word, end coset)."""
        out, i = [], start
        for g, e in letters:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                if step > 0:
                    s = self.number.get((i, g))
                    if s:
                        out.append(s)
                    i = self.table.act(i, g, 1)
                else:
                    i = self.table.act(i, g, -1)
                    s = self.number.get((i, g))
                    if s:
                        out.append(-s)
        return free_reduce(out), i


def schreier_presentation(table: CosetTable, w: GroupWord) -> Presentation:
    rw = _Rewriter(table)
    n = table.index
    if len(rw.number) != n + 1:
        raise CensusMismatch(f"{len(rw.number)} Schreier generators, expected {n + 1}")
    W = tuple(w.free_letters())
    rels: list[Relator] = []
    for prov, g, e in (("from_x3", "x", 3), ("from_y5", "y", 5)):
        for orb in orbits(table.x_action if g == "x" else table.y_action):
            word, end = rw.rewrite(orb[0], [(g, e)])
            assert end == orb[0]
            rels.append(Relator(word, prov, coset=orb[0]))
    w_perm = table.permutation(W)
    for orb in orbits(w_perm):
        if len(orb) == 2:
            word, end = rw.rewrite(orb[0], W + W)
            assert end == orb[0]
            rels.append(Relator(word, "from_W2_pair", coset=orb[0]))
        elif len(orb) == 1:
            root, end = rw.rewrite(orb[0], W)
            assert end == orb[0]
            rels.append(Relator(root + root, "from_W2_square", root, coset=orb[0]))
        else:
            raise CensusMismatch(f"W acts with an orbit of length {len(orb)}")
    rels.sort(key=lambda r: PROVENANCES.index(r.provenance))
    p = Presentation(n + 1, tuple(rels), notes={"subgroup": table.subgroup, "index": n})
    expected = (len(orbits(table.x_action)), len(orbits(table.y_action)),
                sum(len(o) == 2 for o in orbits(w_perm)), sum(len(o) == 1 for o in orbits(w_perm)))
    if p.census() != expected:
        raise CensusMismatch(f"census {p.census()} differs from orbit counts {expected}")
    if table.subgroup == "C" and p.census() != (10, 6, 14, 2):
        raise CensusMismatch(f"index-30 census {p.census()} is not (10, 6, 14, 2)")
    return p


def square_root_cosets(table: CosetTable, w: GroupWord) -> list[int]:
    perm = table.permutation(tuple(w.free_letters()))
    return [i for i in range(table.index) if perm[i] == i]


def contains_no_conjugate_of_generators(table: CosetTable) -> bool:
    """No conjugate of x or y lies in the subgroup iff both actions are fixed-point free."""
    return all(table.x_action[i] != i and table.y_action[i] != i for i in range(table.index))


def abelianization(p: Presentation) -> AbelianGroup:
    return cokernel(p.exponent_matrix(), p.n_generators)


def eliminate_generator(p: Presentation, gen: int | None = None) -> Presentation:
    """Tietze move: drop a generator occurring exactly once in some relator.

    With ``gen=None`` the first eliminable generator is used.  Generators are
    renumbered to stay consecutive.
    """
    for ri, r in enumerate(p.relators):
        counts = Counter(abs(s) for s in r.word)
        cands = [g for g, c in counts.items() if c == 1 and (gen is None or g == gen)]
        if not cands:
            continue
        g = min(cands)
        pos = next(i for i, s in enumerate(r.word) if abs(s) == g)
        # r = u g^e v = 1  =>  g^e = u^-1 v^-1
        u, v = r.word[:pos], r.word[pos + 1:]
        expr = tuple(-s for s in reversed(u)) + tuple(-s for s in reversed(v))
        if r.word[pos] < 0:
            expr = tuple(-s for s in reversed(expr))
        inv_expr = tuple(-s for s in reversed(expr))

        def subst(word):
            out = []
            for s in word:
                if abs(s) == g:
                    out.extend(expr if s > 0 else inv_expr)
                else:
                    out.append(s - 1 if s > g else s + 1 if s < -g else s)
            return free_reduce(out)

        def renum(word):
            return tuple(s - 1 if s > g else s + 1 if s < -g else s for s in word)

        expr = renum(expr)
        inv_expr = renum(inv_expr)
        rels = []
        for rj, q in enumerate(p.relators):
            if rj == ri:
                continue
            root = subst(q.root) if q.root is not None else None
            word = root + root if root is not None else subst(q.word)
            rels.append(Relator(word, q.provenance, root, q.coset))
        return Presentation(p.n_generators - 1, tuple(rels))
    raise ValueError("no generator can be eliminated")


@dataclass(frozen=True)
class GammaData:
    rep: EssentialRep
    table: CosetTable
    presentation: Presentation

    def summary(self) -> dict:
        p = self.presentation
        fixed = square_root_cosets(self.table, self.rep.word)
        return {
            "alpha": str(self.rep.alpha),
            "index": self.table.index,
            "generators": p.n_generators,
            "relators": len(p.relators),
            "census": dict(zip(PROVENANCES, p.census())),
            "euler_characteristic_K": p.euler_characteristic(),
            "euler_characteristic_L": p.without("from_W2_square").euler_characteristic(),
            "squares_literal": all(r.is_literal_square() for r in p.relators
                                   if r.provenance == "from_W2_square"),
            "no_conjugate_of_x_or_y": contains_no_conjugate_of_generators(self.table),
            "a_hat": (" ".join(g if e > 0 else g + "^-1" for g, e in self.table.transversal[fixed[1]])
                      if len(fixed) > 1 else None),
            "abelianization": abelianization(p).to_json(),
        }


def gamma_presentation(w: GroupWord, alpha) -> GammaData:
    """Gamma = rho^-1(C) for the essential representation at the root alpha."""
    rep = essential_representation(w, alpha)
    table = coset_table(rep, "C")
    return GammaData(rep, table, schreier_presentation(table, w))
