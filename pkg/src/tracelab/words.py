"""Relator words W(x, y) in Z/3 * Z/5.

A word is stored as its syllables ``((a_1, b_1), ..., (a_k, b_k))`` meaning
x^a_1 y^b_1 ... x^a_k y^b_k with 0 < a_i < 3 and 0 < b_i < 5.

Grammar accepted by :func:`parse_word`::

    word := syl+ ; syl := gen pow? ; gen := "x" | "y" ; pow := "^" "-"? digit+

Whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

P_ORDER = 3  # order of x
Q_ORDER = 5  # order of y
R_ORDER = 2  # order of W

_ORDERS = {"x": P_ORDER, "y": Q_ORDER}


class WordError(ValueError):
    """Base class for word parsing errors."""


class WordSyntaxError(WordError):
    pass


class EmptyAfterReduction(WordError):
    pass


class NotAlternatingReducible(WordError):
    pass


@dataclass(frozen=True)
class GroupWord:
    syllables: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.syllables:
            raise EmptyAfterReduction("a relator word needs at least one syllable")
        for a, b in self.syllables:
            if not (0 < a < P_ORDER and 0 < b < Q_ORDER):
                raise ValueError(f"syllable exponents out of range: {(a, b)}")

    @property
    def k(self) -> int:
        return len(self.syllables)

    def letters(self) -> list[tuple[str, int]]:
        """(generator, exponent) pairs in order, exponents as stored."""
        out = []
        for a, b in self.syllables:
            out.append(("x", a))
            out.append(("y", b))
        return out

    def free_letters(self) -> list[tuple[str, int]]:
        """Letters of W as a positive word: each entry is (gen, +1)."""
        out = []
        for g, e in self.letters():
            out.extend([(g, 1)] * e)
        return out

    def rotate(self, i: int) -> "GroupWord":
        i %= self.k
        return GroupWord(self.syllables[i:] + self.syllables[:i])

    def __str__(self) -> str:
        return serialise(self.letters())

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.syllables)


def balanced(e: int, order: int) -> int:
    """Representative of e mod order in (-order/2, order/2]."""
    e %= order
    return e - order if 2 * e > order else e


def serialise(letters) -> str:
    parts = []
    for g, e in letters:
        parts.append(g if e == 1 else f"{g}^{e}")
    return " ".join(parts)


_TOKEN = re.compile(r"([xy])(?:\^(-?\d+))?")


def _tokenise(text: str) -> list[tuple[str, int]]:
    s = "".join(text.split())
    if not s:
        raise WordSyntaxError("empty word")
    pos, out = 0, []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise WordSyntaxError(f"bad token at position {pos} in {text!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) is not None else 1))
        pos = m.end()
    return out


def reduce_letters(letters) -> list[tuple[str, int]]:
    """Merge adjacent same-generator syllables and drop exponents that vanish."""
    stack: list[tuple[str, int]] = []
    for g, e in letters:
        e %= _ORDERS[g]
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e2 = (stack[-1][1] + e) % _ORDERS[g]
            stack.pop()
            if e2:
                stack.append((g, e2))
        else:
            stack.append((g, e))
    return stack


def parse_word(text: str) -> GroupWord:
    letters = reduce_letters(_tokenise(text))
    gens = {g for g, _ in letters}
    if len(gens) < 2:
        raise EmptyAfterReduction(
            f"{text!r} reduces to {serialise(letters) or 'the identity'}, not an alternating word")
    if letters[0][0] != "x" or letters[-1][0] != "y":
        raise NotAlternatingReducible(
            f"{text!r} reduces to {serialise(letters)!r}, which does not start with x and end with y")
    sylls = tuple((letters[i][1], letters[i + 1][1]) for i in range(0, len(letters), 2))
    return GroupWord(sylls)


def word_inverse(w: GroupWord | str) -> GroupWord | str:
    """Inverse of w (a word or a raw generator string).

    The inverse of an x...y word starts with y, so the alternating shape is
    usually lost; then the canonical generator string is returned.
    """
    src = _tokenise(w) if isinstance(w, str) else w.letters()
    letters = reduce_letters([(g, -e) for g, e in reversed(src)])
    if letters and letters[0][0] == "x" and letters[-1][0] == "y":
        return GroupWord(tuple((letters[i][1], letters[i + 1][1])
                               for i in range(0, len(letters), 2)))
    return serialise(letters)


def all_words(k: int) -> Iterator[GroupWord]:
    """Every word with exactly k syllables, in lexicographic order."""
    from itertools import product

    choices = [(a, b) for a in range(1, P_ORDER) for b in range(1, Q_ORDER)]
    for sylls in product(choices, repeat=k):
        yield GroupWord(tuple(sylls))
