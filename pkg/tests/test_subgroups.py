import pytest

from tracelab.exact import ONE, PHI, ZERO
from tracelab.icosians import IDENTITY, essential_representation
from tracelab.intlinalg import AbelianGroup
from tracelab.subgroups import (PROVENANCES, CensusMismatch, Presentation, Relator, _Rewriter,
                                abelianization, coset_table, eliminate_generator, gamma_presentation,
                                orbits, schreier_presentation, square_root_cosets)
from tracelab.words import parse_word

XY = parse_word("x y")
WITNESS = parse_word("x^2 y^3 x^2 y^4 x y")


@pytest.fixture(scope="module")
def gamma_xy():
    return gamma_presentation(XY, ZERO)


def _evaluate(rep, letters):
    g = IDENTITY
    for name, e in letters:
        base = rep.X if name == "x" else rep.Y
        step = base if e > 0 else base.inverse()
        for _ in range(abs(e)):
            g = g * step
    return g


def test_indices():
    rep = essential_representation(XY, 0)
    assert coset_table(rep, "C").index == 30
    assert coset_table(rep, "V").index == 15
    with pytest.raises(ValueError):
        coset_table(rep, "Q")


def test_presentation_shape(gamma_xy):
    p = gamma_xy.presentation
    assert p.n_generators == 31
    assert p.census() == (10, 6, 14, 2)
    assert p.euler_characteristic() == 2
    assert p.without("from_W2_square").euler_characteristic() == 0
    assert [r.provenance for r in p.relators] == sorted(
        (r.provenance for r in p.relators), key=PROVENANCES.index)


def test_squares_are_literal(gamma_xy):
    squares = [r for r in gamma_xy.presentation.relators if r.provenance == "from_W2_square"]
    assert len(squares) == 2
    assert all(r.is_literal_square() for r in squares)
    assert len(square_root_cosets(gamma_xy.table, XY)) == 2


def test_schreier_generators_land_in_subgroup(gamma_xy):
    """Oracle: evaluate the Schreier data in the icosians directly."""
    rep, table = gamma_xy.rep, gamma_xy.table
    H = {IDENTITY, -IDENTITY, rep.W, -rep.W}
    reps = [_evaluate(rep, t) for t in table.transversal]
    rw = _Rewriter(table)
    images = {}
    for (i, g), num in rw.number.items():
        j = table.act(i, g, 1)
        k = reps[i] * (rep.X if g == "x" else rep.Y) * reps[j].inverse()
        assert k in H
        images[num] = k
    for i, g in table.tree_edges:
        j = table.act(i, g, 1)
        assert reps[i] * (rep.X if g == "x" else rep.Y) * reps[j].inverse() == IDENTITY
    for r in gamma_xy.presentation.relators:
        v = IDENTITY
        for s in r.word:
            v = v * (images[s] if s > 0 else images[-s].inverse())
        assert v in (IDENTITY, -IDENTITY)


def test_transversal_reaches_each_coset(gamma_xy):
    t = gamma_xy.table
    assert all(t.apply(0, word) == i for i, word in enumerate(t.transversal))


def test_gamma_for_xy_is_the_order_two_subgroup(gamma_xy):
    # <x, y | x^3, y^5, (xy)^2> is A5, so Gamma is C itself
    assert abelianization(gamma_xy.presentation) == AbelianGroup((2,), 0)
    assert abelianization(eliminate_generator(gamma_xy.presentation)) == AbelianGroup((2,), 0)


def test_summary_keys(gamma_xy):
    s = gamma_xy.summary()
    assert s["index"] == 30 and s["generators"] == 31
    assert s["census"] == dict(zip(PROVENANCES, (10, 6, 14, 2)))
    assert s["euler_characteristic_K"] == 2 and s["euler_characteristic_L"] == 0
    assert s["squares_literal"] and s["no_conjugate_of_x_or_y"]


def test_witness_has_free_abelian_part():
    g = gamma_presentation(WITNESS, PHI - ONE)
    assert g.presentation.census() == (10, 6, 14, 2)
    assert abelianization(g.presentation).free_rank == 2


def test_v_presentation():
    rep = essential_representation(XY, 0)
    table = coset_table(rep, "V")
    p = schreier_presentation(table, XY)
    assert p.n_generators == 16
    assert sum(p.census()[:2]) == len(orbits(table.x_action)) + len(orbits(table.y_action))


def test_abelianization_examples():
    assert abelianization(Presentation(2, ())) == AbelianGroup((), 2)
    assert abelianization(Presentation(1, (Relator((1, 1), "r"),))) == AbelianGroup((2,), 0)


def test_tietze_preserves_abelianization():
    g = gamma_presentation(WITNESS, PHI - ONE).presentation
    h = eliminate_generator(g)
    assert h.n_generators == g.n_generators - 1
    assert abelianization(h) == abelianization(g)


def test_serialisation_roundtrip(gamma_xy):
    p = gamma_xy.presentation
    q = Presentation.from_json(p.to_json())
    assert q.n_generators == p.n_generators and [r.word for r in q.relators] == [r.word for r in p.relators]
    t = Presentation.from_text(p.to_text())
    assert t.census() == p.census()
    assert all(r.is_literal_square() for r in t.relators if r.provenance == "from_W2_square")


def test_census_mismatch_is_an_assertion():
    assert issubclass(CensusMismatch, AssertionError)
