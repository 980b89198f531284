import pytest
from hypothesis import given, strategies as st

from tracelab.words import (EmptyAfterReduction, GroupWord, NotAlternatingReducible, WordSyntaxError,
                            all_words, balanced, parse_word, word_inverse)


@pytest.mark.parametrize("text, sylls", [
    ("xy", ((1, 1),)),
    ("x^2 y^3 x y", ((2, 3), (1, 1))),
    ("x^4 y^6", ((1, 1),)),
    ("x y x y", ((1, 1), (1, 1))),
    ("xyxy", ((1, 1), (1, 1))),
    ("x^-1 y^-1", ((2, 4),)),
    ("x y y", ((1, 2),)),
])
def test_parse_normal_form(text, sylls):
    assert parse_word(text).syllables == sylls


def test_k_counts_syllables():
    assert parse_word("x^2 y^3 x y").k == 2


@pytest.mark.parametrize("text", ["x^3 y", "x^3", "y^5", "x y^5 x^2", "x^3 y^5"])
def test_empty_after_reduction(text):
    with pytest.raises(EmptyAfterReduction):
        parse_word(text)


@pytest.mark.parametrize("text", ["y x", "x y x", "y x y"])
def test_not_alternating(text):
    with pytest.raises(NotAlternatingReducible):
        parse_word(text)


@pytest.mark.parametrize("text", ["x z", "x^ y", "2x y", "x^a y", "", "   "])
def test_syntax_error(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text)


def test_cancellation_across_syllables():
    # x y y^4 x y collapses the middle y-power and merges the x's
    assert str(parse_word("x y y^4 x y")) == "x^2 y"


def test_inverse_strings():
    assert word_inverse(GroupWord(((1, 1),))) == "y^4 x^2"
    assert word_inverse(GroupWord(((2, 3),))) == "y^2 x"


def test_double_inverse():
    w = GroupWord(((1, 2), (2, 4)))
    assert word_inverse(word_inverse(w)) == w


def test_str_roundtrip():
    for w in all_words(2):
        assert parse_word(str(w)) == w


def test_all_words_counts_and_order():
    assert len(list(all_words(1))) == 8
    ws = list(all_words(2))
    assert len(ws) == 64
    assert ws == sorted(ws, key=lambda w: w.syllables)


def test_balanced():
    assert [balanced(e, 5) for e in range(1, 5)] == [1, 2, -2, -1]
    assert [balanced(e, 3) for e in range(1, 3)] == [1, -1]


syll = st.tuples(st.integers(1, 2), st.integers(1, 4))


@given(st.lists(syll, min_size=1, max_size=6))
def test_property_parse_str_identity(sylls):
    w = GroupWord(tuple(sylls))
    assert parse_word(str(w)) == w


@given(st.lists(syll, min_size=1, max_size=6))
def test_property_inverse_involution(sylls):
    w = GroupWord(tuple(sylls))
    assert parse_word(str(w)) == w
    inv = word_inverse(w)
    assert word_inverse(inv) == w


@given(st.lists(syll, min_size=1, max_size=6), st.integers(0, 5))
def test_property_rotation_keeps_k(sylls, i):
    w = GroupWord(tuple(sylls))
    assert w.rotate(i).k == w.k
