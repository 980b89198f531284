"""Hermite and Smith normal forms over the integers, exact.

Matrices are lists of lists of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)]


def determinant(A: Matrix) -> Fraction:
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def inverse(A: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    out = [[x for x in row[n:]] for row in M]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def hermite_normal_form(rows: Matrix) -> Matrix:
    """Row-style HNF of the row span: echelon, positive pivots, reduced above."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: Matrix = []
    for col in range(ncols):
        live = [r for r in A if r[col] != 0]
        rest = [r for r in A if r[col] == 0]
        if not live:
            continue
        # repeated Euclid on the column until one row is left
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (nxt if r[col] != 0 else rest).append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for i, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[i] = [a - q * b for a, b in zip(r, piv)]
        out.append(piv)
        A = [r for r in rest if any(r)]
    return out


def hnf_pivots(H: Matrix) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in H]


def solve_in_hnf(H: Matrix, target: list[int]) -> list[int] | None:
    """Integer c with c . H = target, or None if target is not in the row span."""
    rem = list(target)
    coeffs = []
    for row, p in zip(H, hnf_pivots(H)):
        q, r = divmod(rem[p], row[p])
        if r:
            return None
        coeffs.append(q)
        if q:
            rem = [a - q * b for a, b in zip(rem, row)]
    return coeffs if not any(rem) else None


@dataclass(frozen=True)
class SmithForm:
    """U A V = D with D diagonal, d_1 | d_2 | ... | d_r and U, V unimodular."""
    diagonal: tuple[int, ...]
    U: Matrix
    V: Matrix
    D: Matrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(A: Matrix) -> SmithForm:
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(r) for r in A]
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst -= q * col src
        for M in (D, V):
            for r in M:
                r[dst] -= q * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // D[t][t])
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // D[t][t])
            line = [(abs(D[i][t]), i, None) for i in range(t + 1, m) if D[i][t]]
            line += [(abs(D[t][j]), None, j) for j in range(t + 1, n) if D[t][j]]
            if line:
                _, i, j = min(line, key=lambda e: e[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diag = tuple(D[i][i] for i in range(min(m, n)) if D[i][i])
    return SmithForm(diag, U, V, D)


def invariant_factors(A: Matrix) -> tuple[int, ...]:
    return smith_normal_form(A).diagonal


@dataclass(frozen=True)
class AbelianGroup:
    """Z/t_1 + ... + Z/t_s + Z^free_rank."""
    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self):
        parts = [f"Z_{t}" for t in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}


def cokernel(A: Matrix, ncols: int | None = None) -> AbelianGroup:
    """Z^ncols modulo the row span of A."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    snf = smith_normal_form(A) if A else SmithForm((), [], identity(n), [])
    return AbelianGroup(snf.torsion, n - snf.rank)
