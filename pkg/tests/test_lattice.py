import itertools
import math

import numpy as np
import sympy
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from tracelab.exact import PHI, PHI_FLOAT, SQRT5, GoldenScalar
from tracelab.intlinalg import AbelianGroup, hermite_normal_form, hnf_pivots
from tracelab.lattice import (ANTIPODAL, ROT_A, ROT_B, ROT_C, ROT_IDENTITY, GoldenVector3,
                              augmentation_matrix, coinvariants, compose, free_quotient_action,
                              generator_invariant_factors, icosahedron_edges, icosahedron_midpoints,
                              icosahedron_vertices, lattice_from_vectors, midpoint_lattice,
                              neighbor_sum_factor, neighbor_sum_identity_check, permutes, verify_midpoint_lattice)


def _floats(v):
    return np.array([float(c) for c in v])


def test_icosahedron_combinatorics():
    assert len(icosahedron_vertices()) == 12
    assert len(icosahedron_edges()) == 30
    assert len(set(icosahedron_midpoints())) == 30


def test_midpoint_example():
    a, b = GoldenVector3.of(0, 1, PHI), GoldenVector3.of(0, -1, PHI)
    assert (a + b).scale(GoldenScalar(1, 0) / 2) == GoldenVector3.of(0, 0, PHI)
    assert GoldenVector3.of(0, 0, PHI) in icosahedron_midpoints()


def test_rank_examples():
    assert lattice_from_vectors([GoldenVector3.of(1, 0, 0)]).rank == 1
    e = icosahedron_midpoints()[0]
    assert lattice_from_vectors([e, e.scale(SQRT5)]).rank == 2
    assert midpoint_lattice().rank == 6


def test_midpoints_span_freely():
    M = midpoint_lattice()
    assert generator_invariant_factors(M, icosahedron_midpoints()) == (1,) * 6


def test_klein_group():
    mids = icosahedron_midpoints()
    assert compose(ROT_A, ROT_B) == ROT_C
    assert all(permutes(g, mids) for g in (ROT_A, ROT_B, ROT_C, ANTIPODAL))


def test_coinvariants_trivial_cases():
    M = midpoint_lattice()
    assert coinvariants(M, ROT_IDENTITY) == AbelianGroup((), 6)
    assert coinvariants(M, ANTIPODAL) == AbelianGroup((2,) * 6, 0)


def _sympy_coinvariants(M, g):
    A = augmentation_matrix(M, g)
    d = [abs(int(x)) for x in sympy_invariant_factors(sympy.Matrix(A)) if x != 0]
    return AbelianGroup(tuple(x for x in d if x > 1), M.rank - len(d))


def test_coinvariants_of_c_computed_value():
    M = midpoint_lattice()
    H0 = coinvariants(M, ROT_C)
    assert H0 == AbelianGroup((2, 2), 2)
    # oracles: an independent Smith form, and basis independence
    assert _sympy_coinvariants(M, ROT_C) == H0
    rng = np.random.default_rng(5)
    mids = icosahedron_midpoints()
    for _ in range(3):
        perm = rng.permutation(len(mids))
        assert coinvariants(lattice_from_vectors([mids[i] for i in perm]), ROT_C) == H0


def test_coinvariant_free_rank_is_fixed_space_dimension():
    # over Q, c = diag(-1, -1, 1) on Q(sqrt5)^3 fixes a 2-dimensional space
    assert coinvariants(midpoint_lattice(), ROT_C).free_rank == 2


def test_coinvariant_torsion_order_brute_force():
    """Torsion of M/(1-c)M is M_-/(1-c)M with M_- = M cap {z = 0}; count its classes.

    (1-c)M is twice the xy-projection of M.  Two lifts of a class differ by
    4m with m in M_-, which already lies in (1-c)M, so coefficients mod 4 suffice.
    """
    M = midpoint_lattice()
    B = np.array(M.basis)
    two_p = 2 * B[:, :4]
    classes = set()
    for coeffs in itertools.product(range(4), repeat=M.rank):
        v = np.array(coeffs) @ B
        if v[4] == 0 and v[5] == 0:
            classes.add(tuple(_reduce_mod(v[:4], two_p)))
    assert len(classes) == 4


def _reduce_mod(v, gens):
    """Canonical representative of v modulo the full-rank integer row span of gens."""
    H = hermite_normal_form([list(map(int, r)) for r in gens])
    v = [int(x) for x in v]
    for row, p in zip(H, hnf_pivots(H)):
        q = v[p] // row[p]
        v = [a - q * b for a, b in zip(v, row)]
    return v


def test_free_quotient_action():
    M = midpoint_lattice()
    assert free_quotient_action(M, ROT_C, ROT_C) == [[1, 0], [0, 1]]
    assert free_quotient_action(M, ROT_C, ROT_A) == [[-1, 0], [0, -1]]
    assert free_quotient_action(M, ROT_C, ROT_B) == [[-1, 0], [0, -1]]


def test_neighbor_sum_factor_numeric_oracle():
    mids = [_floats(v) for v in icosahedron_midpoints()]
    edges = icosahedron_edges()
    for i, (u, v) in enumerate(edges):
        nbrs = [j for j, (p, q) in enumerate(edges) if j != i and {p, q} & {u, v}]
        assert len(nbrs) == 8
        total = sum(mids[j] for j in nbrs)
        assert np.allclose(total, (3 + math.sqrt(5)) * mids[i])
    f = neighbor_sum_factor()
    assert f == 3 + SQRT5 and f == 2 + 2 * PHI


def test_neighbor_sum_identity_default_and_negative_control():
    assert neighbor_sum_identity_check(factor=3 + SQRT5)
    assert not neighbor_sum_identity_check()  # sqrt5 - 2 is not the factor
    mids = icosahedron_midpoints()
    mids[0] = mids[0].scale(2)
    assert not neighbor_sum_identity_check(mids, factor=3 + SQRT5)


def test_report_shape():
    rep = verify_midpoint_lattice()
    assert rep["rank"] == 6
    assert rep["coinvariants_c"] == {"torsion": [2, 2], "free_rank": 2}
    assert rep["observed_neighbor_sum_factor"] == "2+2*phi"
    failing = {k for k, ok in rep["checks"].items() if not ok}
    assert failing == {"coinvariants_Z2^4+Z^2", "neighbor_sum_identity"}
