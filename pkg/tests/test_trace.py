import numpy as np
import pytest

from tracelab.exact import PHI, PHI_FLOAT, GfPoly
from tracelab.trace import (DegenerateParameter, TraceExpression, base_matrices, evaluate_matrices,
                            numeric_trace_oracle, sl2_letters, trace_polynomial)
from tracelab.words import GroupWord, parse_word

LAM = GfPoly.lam()


@pytest.mark.parametrize("text, expected", [
    ("x y", LAM),
    ("x y^4", GfPoly.constant(PHI) - LAM),
    ("x y^2", LAM * PHI - 1),
    ("x y x y", LAM ** 2 - 2),
])
def test_closed_forms(text, expected):
    assert trace_polynomial(parse_word(text)) == expected


@pytest.mark.parametrize("text, lam0, expected", [
    ("x y", 0.25, 0.25),
    ("x y x y", 2.0, 2.0),
    ("x y^4", 0.0, PHI_FLOAT),
])
def test_oracle_examples(text, lam0, expected):
    assert abs(numeric_trace_oracle(parse_word(text), lam0) - expected) < 1e-9


def test_base_matrices_have_prescribed_traces():
    X, Y = base_matrices(0.7)
    assert abs(np.trace(X) - 1) < 1e-12 and abs(np.trace(Y) - PHI_FLOAT) < 1e-12
    assert abs(np.trace(X @ Y) - 0.7) < 1e-12
    assert abs(np.linalg.det(X) - 1) < 1e-12 and abs(np.linalg.det(Y) - 1) < 1e-12
    assert np.allclose(np.linalg.matrix_power(X, 3), -np.eye(2))
    assert np.allclose(np.linalg.matrix_power(Y, 5), -np.eye(2))


def test_degenerate_parameter():
    with pytest.raises(DegenerateParameter):
        base_matrices(float("nan"))
    with pytest.raises(ValueError):
        numeric_trace_oracle(parse_word("x y"), 0.3, trials=0)


def test_complex_parameter():
    w = parse_word("x^2 y^3 x y^2")
    lam0 = 0.4 + 1.3j
    assert abs(numeric_trace_oracle(w, lam0) - trace_polynomial(w).eval_complex(lam0)) < 1e-8


def _random_word(rng, k):
    return GroupWord(tuple((int(rng.integers(1, 3)), int(rng.integers(1, 5))) for _ in range(k)))


def test_random_words_degree_and_oracle(rng):
    engine = TraceExpression()
    for _ in range(100):
        w = _random_word(rng, int(rng.integers(1, 9)))
        tau = engine.trace(sl2_letters(w))
        assert tau == trace_polynomial(w)
        assert tau.degree == w.k
        for lam0 in rng.uniform(-2, 2, size=3):
            got = numeric_trace_oracle(w, lam0, rng=rng)
            assert abs(got - tau.eval_complex(lam0)) < 1e-8 * max(1.0, abs(got))


def test_cyclic_rotation_invariance(rng):
    for _ in range(30):
        w = _random_word(rng, int(rng.integers(1, 7)))
        tau = trace_polynomial(w)
        for i in range(w.k):
            assert trace_polynomial(w.rotate(i)) == tau


def test_leading_coefficient_is_a_unit(rng):
    for _ in range(30):
        tau = trace_polynomial(_random_word(rng, int(rng.integers(1, 7))))
        assert tau.leading().norm() in (1, -1)


def test_matrix_evaluation_direct():
    X, Y = base_matrices(0.3)
    w = parse_word("x^2 y^3 x y")
    assert abs(np.trace(evaluate_matrices(w, X, Y)) - trace_polynomial(w).eval_complex(0.3)) < 1e-10
