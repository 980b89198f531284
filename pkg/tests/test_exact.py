from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from tracelab.exact import (ONE, PHI, PHI_FLOAT, ZERO, GfPoly, GoldenScalar, ZeroPolynomial,
                            poly_derivative, poly_divrem, poly_eval, root_multiplicity)

fr = st.fractions(min_value=-50, max_value=50, max_denominator=20)
scalars = st.builds(GoldenScalar, fr, fr)
polys = st.lists(scalars, min_size=0, max_size=5).map(GfPoly)
LAM = GfPoly.lam()


def test_golden_relations():
    assert PHI * PHI == ONE + PHI
    assert PHI * (PHI - 1) == ONE
    assert (ONE + PHI) - PHI == ONE
    assert PHI.inverse() == PHI - 1


def test_parse_and_str():
    x = GoldenScalar(Fraction(1, 2), -3)
    assert GoldenScalar.parse(str(x)) == x
    with pytest.raises(ValueError):
        GoldenScalar.parse("phi plus one")


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_exact_sign():
    assert (PHI - GoldenScalar(Fraction(1618, 1000))).sign() == 1
    assert (PHI - GoldenScalar(Fraction(1619, 1000))).sign() == -1
    assert ZERO.sign() == 0


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    if not a.is_zero():
        assert a * a.inverse() == ONE


@given(scalars, scalars)
def test_float_agreement(a, b):
    for exact, approx in ((a + b, float(a) + float(b)), (a * b, float(a) * float(b))):
        assert abs(float(exact) - approx) <= 1e-9 * max(1.0, abs(approx))


@given(scalars, scalars)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert abs(float(a.conjugate()) - (float(a.a) + float(a.b) * (1 - PHI_FLOAT))) < 1e-9


@given(scalars, scalars)
def test_order_matches_float(a, b):
    assume(abs(float(a) - float(b)) > 1e-9)
    assert (a < b) == (float(a) < float(b))


def test_divrem_examples():
    q, r = poly_divrem(LAM ** 2 - 2, LAM - 1)
    assert q == LAM + 1 and r == GfPoly.constant(-1)
    q, r = poly_divrem(LAM ** 2 - 2, LAM ** 2 - 2)
    assert q == GfPoly.constant(1) and r.is_zero()
    q, r = poly_divrem(LAM * PHI - 1, LAM - (PHI - 1))
    assert q == GfPoly.constant(PHI) and r.is_zero()


def test_divide_by_zero_poly():
    with pytest.raises(ZeroDivisionError):
        poly_divrem(LAM, GfPoly())


@given(polys, polys)
def test_property_divrem(f, g):
    assume(not g.is_zero())
    q, r = poly_divrem(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_multiplicity_examples():
    assert root_multiplicity(LAM ** 2, 0) == 2
    assert root_multiplicity(LAM ** 2 - 2, 1) == 0
    f = (LAM - PHI) ** 2 * (LAM - 1)
    assert root_multiplicity(f, PHI) == 2
    assert root_multiplicity(f, 1) == 1
    with pytest.raises(ZeroPolynomial):
        root_multiplicity(GfPoly(), 0)


@given(st.integers(0, 4), st.integers(0, 3), polys)
def test_property_multiplicity_of_product(m, n, g):
    assume(not g.is_zero() and not poly_eval(g, PHI).is_zero())
    f = (LAM - PHI) ** m * (LAM - 1) ** n * g
    assert root_multiplicity(f, PHI) == m


def test_eval_and_derivative():
    assert poly_derivative(LAM ** 2 - 2) == LAM * 2
    assert poly_eval(LAM * PHI - 1, PHI - 1) == ZERO
    assert poly_eval(LAM, 0) == ZERO


@given(polys, scalars)
def test_property_eval_matches_complex(f, a):
    assert abs(complex(float(f(a))) - f.eval_complex(float(a))) <= 1e-6 * max(1.0, abs(f.eval_complex(float(a))))


@given(polys)
def test_json_roundtrip(f):
    assert GfPoly.from_json(f.to_json()) == f
