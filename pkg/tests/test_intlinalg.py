import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from tracelab.intlinalg import (AbelianGroup, cokernel, determinant, hermite_normal_form, hnf_pivots,
                                identity, inverse, matmul, smith_normal_form, solve_in_hnf)

matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


def _oracle(A):
    return tuple(abs(int(d)) for d in sympy_invariant_factors(sympy.Matrix(A)) if d != 0)


@pytest.mark.parametrize("A, diag", [
    (identity(3), (1, 1, 1)),
    ([[2, 1], [0, 2]], (1, 4)),
    ([[0, 0], [0, 0]], ()),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
])
def test_snf_examples(A, diag):
    assert smith_normal_form(A).diagonal == diag


@given(matrices)
def test_snf_matches_sympy_and_transforms(A):
    s = smith_normal_form(A)
    assert s.diagonal == _oracle(A)
    assert matmul(matmul(s.U, A), s.V) == s.D
    assert abs(determinant(s.U)) == 1 and abs(determinant(s.V)) == 1
    assert all(b % a == 0 for a, b in zip(s.diagonal, s.diagonal[1:]))


@given(matrices)
def test_hnf_spans_same_lattice(A):
    H = hermite_normal_form(A)
    assert len(H) == np.linalg.matrix_rank(np.array(A, dtype=float))
    for row in A:
        assert solve_in_hnf(H, row) is not None
    piv = hnf_pivots(H)
    assert piv == sorted(piv)
    for i, p in enumerate(piv):
        assert H[i][p] > 0
        assert all(0 <= H[j][p] < H[i][p] for j in range(i))
    if H:
        # every row of H is an integer combination of A's rows: same invariant factors
        assert _oracle(H) == _oracle(A)


def test_solve_rejects_non_members():
    H = hermite_normal_form([[2, 0], [0, 3]])
    assert solve_in_hnf(H, [1, 0]) is None
    assert solve_in_hnf(H, [4, -3]) == [2, -1]


def test_inverse_unimodular():
    U = [[2, 1], [1, 1]]
    assert matmul(U, inverse(U)) == identity(2)
    with pytest.raises(ValueError):
        inverse([[2, 0], [0, 1]])


def test_cokernel():
    assert cokernel([[2, 0], [0, 0]]) == AbelianGroup((2,), 1)
    assert cokernel([], 2) == AbelianGroup((), 2)
    assert str(AbelianGroup((2, 2), 2)) == "Z_2 + Z_2 + Z^2"
