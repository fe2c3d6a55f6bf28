"""Quantum matrix bialgebra M_q: generators t[r,c], words, and normal forms.

Generators are ``(row, col)`` tuples ordered row-major lexicographically; a
word is a tuple of generators. A word is *normal* when it is nondecreasing.
The defining relations, oriented so that every rewrite strictly decreases a
word in degree-lexicographic order, are

* same row,    c1 > c2:  t[r,c1] t[r,c2] -> q^-1 t[r,c2] t[r,c1]
* same column, r1 > r2:  t[r1,c] t[r2,c] -> q^-1 t[r2,c] t[r1,c]
* r1 > r2, c1 > c2:      t[r1,c1] t[r2,c2] -> t[r2,c2] t[r1,c1]
                                              - (q - q^-1) t[r2,c1] t[r1,c2]
* r1 > r2, c1 < c2:      t[r1,c1] t[r2,c2] -> t[r2,c2] t[r1,c1]

Labels are arbitrary positive integers, so there is no fixed matrix size.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

from .laurent import ONE, ZERO, LaurentInt, q_power

__all__ = [
    "Generator",
    "Word",
    "NCPoly",
    "gen",
    "is_normal_word",
    "reduce_pair",
    "normal_form",
    "rewrite",
    "mul",
    "is_zero",
    "inversions",
    "redexes",
]

Generator = tuple  # (row, col)
Word = tuple  # tuple[Generator, ...]

Q_INV = q_power(-1)
Q_MINUS_QINV = LaurentInt({1: 1, -1: -1})


def gen(row: int, col: int) -> Generator:
    if row < 1 or col < 1:
        raise ValueError(f"generator labels must be positive, got t[{row},{col}]")
    return (row, col)


def is_normal_word(word: Word) -> bool:
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def redexes(word: Word) -> list[int]:
    """Positions ``i`` where ``word[i] > word[i+1]``."""
    return [i for i in range(len(word) - 1) if word[i] > word[i + 1]]


def inversions(word: Word) -> int:
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


class NCPoly:
    """Finite sum of words with LaurentInt coefficients.

    Construction does not normalize; use :func:`normal_form` (or the arithmetic
    helpers, which normalize) to reach the canonical representative.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, LaurentInt | int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, LaurentInt] = {}
        for w, c in items:
            c = LaurentInt.coerce(c)
            if not c:
                continue
            w = tuple(w)
            s = acc.get(w, ZERO) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        self._terms = acc

    @classmethod
    def _raw(cls, terms: dict) -> "NCPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def word(cls, *gens: Generator, coeff: LaurentInt | int = 1) -> "NCPoly":
        return cls({tuple(gens): coeff})

    @classmethod
    def unit(cls) -> "NCPoly":
        return cls._raw({(): ONE})

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls._raw({})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coeff(self, word: Word) -> LaurentInt:
        return self._terms.get(tuple(word), ZERO)

    def is_normal(self) -> bool:
        return all(is_normal_word(w) for w in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self._terms)
        _accumulate(out, other._terms.items())
        return NCPoly._raw(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, c: LaurentInt | int) -> "NCPoly":
        c = LaurentInt.coerce(c)
        if not c:
            return NCPoly.zero()
        return NCPoly._raw({w: v * c for w, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentInt)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        if isinstance(other, NCPoly):
            return mul(self, other)
        return NotImplemented

    def relabel(self, rows: Mapping[int, int] | None = None, cols: Mapping[int, int] | None = None) -> "NCPoly":
        rows = rows or {}
        cols = cols or {}
        return NCPoly(
            (tuple((rows.get(r, r), cols.get(c, c)) for r, c in w), v) for w, v in self._terms.items()
        )

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def render(self) -> str:
        from .textio import render_ncpoly

        return render_ncpoly(self)

    def __repr__(self) -> str:
        return f"NCPoly({self.render()!r})"


def _accumulate(out: dict, items) -> None:
    for w, c in items:
        s = out.get(w, ZERO) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)


@lru_cache(maxsize=None)
def _pair_rule(g1: Generator, g2: Generator) -> tuple:
    # returns ((word, coeff), ...) for the rewrite of the out-of-order pair g1 g2
    (r1, c1), (r2, c2) = g1, g2
    if r1 == r2 or c1 == c2:
        return (((g2, g1), Q_INV),)
    if c1 > c2:
        return (((g2, g1), ONE), (((r2, c1), (r1, c2)), -Q_MINUS_QINV))
    return (((g2, g1), ONE),)


def reduce_pair(g1: Generator, g2: Generator) -> NCPoly:
    """One rewriting step for the two-letter word ``g1 g2`` with ``g1 > g2``."""
    g1, g2 = tuple(g1), tuple(g2)
    if not g1 > g2:
        raise ValueError(f"t[{g1[0]},{g1[1]}] t[{g2[0]},{g2[1]}] is already in normal order")
    return NCPoly(_pair_rule(g1, g2))


def _rewrite_at(word: Word, i: int):
    head, tail = word[:i], word[i + 2 :]
    for pair, c in _pair_rule(word[i], word[i + 1]):
        yield head + pair + tail, c


@lru_cache(maxsize=None)
def _nf_word(word: Word) -> tuple:
    # leftmost-redex normal form of a single word, memoized as ((word, coeff), ...)
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            break
    else:
        return ((word, ONE),)
    out: dict = {}
    for w, c in _rewrite_at(word, i):
        _accumulate(out, ((u, v * c) for u, v in _nf_word(w)))
    return tuple(out.items())


def normal_form(p: NCPoly) -> NCPoly:
    """Canonical representative of ``p``: every word nondecreasing."""
    out: dict = {}
    for w, c in p.items():
        if is_normal_word(w):
            _accumulate(out, ((w, c),))
        else:
            _accumulate(out, ((u, v * c) for u, v in _nf_word(w)))
    return NCPoly._raw(out)


Strategy = Union[str, Callable[[Word, list], int]]


def rewrite(
    p: NCPoly,
    strategy: Strategy = "leftmost",
    rng: random.Random | None = None,
    max_steps: int | None = None,
) -> tuple[NCPoly, int]:
    """Un-memoized worklist reduction with an explicit redex-selection rule.

    ``strategy`` is ``"leftmost"``, ``"rightmost"``, ``"random"`` or a callable
    ``(word, redex_positions) -> position``. Returns ``(normal_form, steps)``.
    Used to test that the result does not depend on how redexes are chosen.
    """
    if strategy == "random":
        rng = rng or random.Random()
        pick = lambda w, rs: rng.choice(rs)  # noqa: E731
    elif strategy == "leftmost":
        pick = lambda w, rs: rs[0]  # noqa: E731
    elif strategy == "rightmost":
        pick = lambda w, rs: rs[-1]  # noqa: E731
    elif callable(strategy):
        pick = strategy
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    pending = dict(p.items())
    done: dict = {}
    steps = 0
    while pending:
        if rng is not None and strategy == "random":
            w = rng.choice(list(pending))
        else:
            w = next(iter(pending))
        c = pending.pop(w)
        rs = redexes(w)
        if not rs:
            _accumulate(done, ((w, c),))
            continue
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise RuntimeError(f"reduction exceeded {max_steps} steps")
        _accumulate(pending, ((u, v * c) for u, v in _rewrite_at(w, pick(w, rs))))
    return NCPoly._raw(done), steps


def mul(p: NCPoly, r: NCPoly) -> NCPoly:
    """Product in M_q, returned in normal form."""
    out: dict = {}
    for w1, c1 in p.items():
        for w2, c2 in r.items():
            c = c1 * c2
            _accumulate(out, ((u, v * c) for u, v in _nf_word(w1 + w2)))
    return NCPoly._raw(out)


def is_zero(p: NCPoly) -> bool:
    return not normal_form(p)
