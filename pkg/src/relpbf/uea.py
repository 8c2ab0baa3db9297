"""PBW normal forms in the enveloping algebra of a color Lie algebra.

A word is a tuple of basis symbols. Straightening rewrites an adjacent
out-of-order pair y x (y after x in the basis order) to
theta(deg y, deg x) x y + <y, x>, and a repeated letter x x with
theta(deg x, deg x) = -1 to 1/2 <x, x>. Normal words are therefore
non-decreasing, strictly increasing on letters of self-color -1.
"""

from __future__ import annotations

import weakref
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

from .colorlie import ColorAlgebra, Element
from .core import G00, HALF, ONE, Coefficient, Grade

DEFAULT_WORD_CAP = 6

Word = tuple  # tuple[str, ...]


class WordTooLongError(ValueError):
    """A word exceeds the configured length cap."""


class UeaElement(Element):
    """Sparse map word -> Coefficient."""

    __slots__ = ()

    @classmethod
    def one(cls) -> "UeaElement":
        return cls({(): ONE})

    @classmethod
    def scalar(cls, c) -> "UeaElement":
        return cls({(): c})

    @classmethod
    def word(cls, *letters: str, coeff=1) -> "UeaElement":
        return cls({tuple(letters): coeff})

    @classmethod
    def from_lie(cls, x: Element) -> "UeaElement":
        return cls({(s,): c for s, c in x.terms.items()})

    def _key_str(self, key) -> str:
        return "*".join(key) if key else "1"

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)


def word_grade(alg: ColorAlgebra, word: Iterable[str]) -> Grade:
    g = G00
    for s in word:
        g = g + alg.grades[s]
    return g


class Straightener:
    """Memoized normal-form engine bound to one color algebra.

    ``strategy`` chooses the leftmost or rightmost reducible position; both
    must give the same answer when the bracket table satisfies Jacobi.
    """

    def __init__(self, alg: ColorAlgebra, word_cap: int = DEFAULT_WORD_CAP, strategy: str = "leftmost"):
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.alg = alg
        self.word_cap = word_cap
        self.strategy = strategy
        self._idx = alg.index
        self._self_odd = {s: alg.theta(g, g) == -1 for s, g in alg.grades.items()}
        self._cache: dict[Word, dict[Word, Coefficient]] = {}

    def _reducible(self, w: Word, i: int) -> bool:
        a, b = self._idx[w[i]], self._idx[w[i + 1]]
        return a > b or (a == b and self._self_odd[w[i]])

    def _find(self, w: Word) -> int:
        positions = range(len(w) - 1)
        if self.strategy == "rightmost":
            positions = reversed(positions)
        for i in positions:
            if self._reducible(w, i):
                return i
        return -1

    def is_normal(self, w: Word) -> bool:
        return self._find(tuple(w)) < 0

    def normal_word(self, w: Word) -> dict[Word, Coefficient]:
        w = tuple(w)
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        for s in w:
            if s not in self._idx:
                raise KeyError(f"symbol {s!r} is not in the algebra basis")
        i = self._find(w)
        if i < 0:
            result = {w: ONE}
        else:
            y, x = w[i], w[i + 1]
            head, tail = w[:i], w[i + 2 :]
            acc: dict[Word, Coefficient] = {}

            def add(word: Word, coeff: Coefficient) -> None:
                for nw, nc in self.normal_word(word).items():
                    acc[nw] = acc.get(nw, 0) + coeff * nc

            if x == y:
                for z, cz in self.alg.bracket_symbols(y, x).items():
                    add(head + (z,) + tail, HALF * cz)
            else:
                add(head + (x, y) + tail, self.alg.theta_of(y, x))
                for z, cz in self.alg.bracket_symbols(y, x).items():
                    add(head + (z,) + tail, cz)
            result = {k: v for k, v in acc.items() if v}
        self._cache[w] = result
        return result

    def normalize(self, e: UeaElement | Mapping[Word, object]) -> UeaElement:
        terms = e.terms if isinstance(e, Element) else e
        acc: dict[Word, Coefficient] = {}
        for w, c in terms.items():
            if len(w) > self.word_cap:
                raise WordTooLongError(f"word of length {len(w)} exceeds cap {self.word_cap}")
            c = Coefficient.coerce(c)
            for nw, nc in self.normal_word(w).items():
                acc[nw] = acc.get(nw, 0) + c * nc
        return UeaElement(acc)

    def multiply(self, e1: UeaElement, e2: UeaElement) -> UeaElement:
        acc: dict[Word, Coefficient] = {}
        for w1, c1 in e1.terms.items():
            for w2, c2 in e2.terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + c1 * c2
        return self.normalize(acc)

    def normal_words(self, max_len: int) -> Iterator[Word]:
        """All normal words of length 0..max_len in basis order."""
        for length in range(max_len + 1):
            for w in combinations_with_replacement(self.alg.basis, length):
                if self.is_normal(w):
                    yield w


_straighteners: "weakref.WeakKeyDictionary[ColorAlgebra, dict]" = weakref.WeakKeyDictionary()


def straightener(alg: ColorAlgebra, word_cap: int = DEFAULT_WORD_CAP, strategy: str = "leftmost") -> Straightener:
    """Shared engine per algebra, so normal forms are cached across calls."""
    per_alg = _straighteners.setdefault(alg, {})
    st = per_alg.get((word_cap, strategy))
    if st is None:
        st = per_alg[(word_cap, strategy)] = Straightener(alg, word_cap, strategy)
    return st


def normalize(alg: ColorAlgebra, e: UeaElement, word_cap: int = DEFAULT_WORD_CAP) -> UeaElement:
    return straightener(alg, word_cap).normalize(e)


def multiply(alg: ColorAlgebra, e1: UeaElement, e2: UeaElement, word_cap: int = DEFAULT_WORD_CAP) -> UeaElement:
    return straightener(alg, word_cap).multiply(e1, e2)


def defining_relation(alg: ColorAlgebra, x: str, y: str) -> UeaElement:
    """x y - theta(deg x, deg y) y x - <x, y> as an unreduced element."""
    terms: dict[Word, Coefficient] = {(x, y): ONE}
    terms[(y, x)] = terms.get((y, x), 0) - alg.theta_of(x, y)
    for z, c in alg.bracket_symbols(x, y).items():
        terms[(z,)] = terms.get((z,), 0) - c
    return UeaElement(terms)
