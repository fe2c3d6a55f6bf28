"""Quantum exterior algebra and the canonical M_q coactions on it.

Generators e_1..e_n satisfy e_i ^ e_j = -q^-1 e_j ^ e_i for i < j and
e_i ^ e_i = 0. Oriented as rewrites: e_j e_i -> (-q) e_i e_j for j > i, and
e_i e_i -> 0. Normal words are strictly increasing index tuples.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from . import mq
from .laurent import ONE, ZERO, LaurentInt, neg_q_power
from .mq import NCPoly

__all__ = [
    "ExtPoly",
    "TensorElement",
    "ext_normal_form",
    "ext_rewrite",
    "ext_mul",
    "coact_right",
    "coact_left",
    "extract_colike",
]

MINUS_Q = neg_q_power(1)


def _acc(out: dict, key, c: LaurentInt) -> None:
    s = out.get(key, ZERO) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class ExtPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, LaurentInt | int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for w, c in items:
            w = tuple(w)
            if any(i < 1 for i in w):
                raise ValueError(f"exterior indices must be positive: {w}")
            _acc(acc, w, LaurentInt.coerce(c))
        self._terms = acc

    @classmethod
    def e(cls, *indices: int) -> "ExtPoly":
        return cls({tuple(indices): ONE})

    @classmethod
    def unit(cls) -> "ExtPoly":
        return cls({(): ONE})

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ExtPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "ExtPoly") -> "ExtPoly":
        return ExtPoly(list(self._terms.items()) + list(other._terms.items()))

    def __repr__(self):
        body = " + ".join(f"({c})*e{list(w)}" for w, c in sorted(self._terms.items()))
        return f"ExtPoly({body or '0'})"


def _ext_sort(word: tuple) -> tuple[tuple, LaurentInt] | None:
    # closed form of the rewrite: (-q)^(number of inversions), or None if a repeat kills it
    if len(set(word)) != len(word):
        return None
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return tuple(sorted(word)), neg_q_power(inv)


def ext_normal_form(p: ExtPoly) -> ExtPoly:
    out: dict = {}
    for w, c in p.items():
        r = _ext_sort(w)
        if r is not None:
            _acc(out, r[0], r[1] * c)
    obj = ExtPoly.__new__(ExtPoly)
    obj._terms = out
    return obj


def ext_rewrite(p: ExtPoly, strategy: str = "leftmost", rng: random.Random | None = None) -> ExtPoly:
    """Step-by-step adjacent rewriting; agrees with :func:`ext_normal_form`."""
    rng = rng or random.Random(0)
    pending = dict(p.items())
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        rs = [i for i in range(len(w) - 1) if w[i] >= w[i + 1]]
        if not rs:
            _acc(done, w, c)
            continue
        if strategy == "random":
            i = rng.choice(rs)
        elif strategy == "rightmost":
            i = rs[-1]
        else:
            i = rs[0]
        if w[i] == w[i + 1]:
            continue
        _acc(pending, w[:i] + (w[i + 1], w[i]) + w[i + 2 :], c * MINUS_Q)
    obj = ExtPoly.__new__(ExtPoly)
    obj._terms = done
    return obj


def ext_mul(a: ExtPoly, b: ExtPoly) -> ExtPoly:
    return ext_normal_form(ExtPoly((wa + wb, ca * cb) for wa, ca in a.items() for wb, cb in b.items()))


class TensorElement:
    """Element of Λ_q ⊗ M_q (``ext_left=True``) or M_q ⊗ Λ_q.

    Keys are always stored as ``(ext_word, mq_word)``; ``ext_left`` only
    records which tensor factor the exterior part sits in.
    """

    __slots__ = ("_terms", "ext_left")

    def __init__(self, terms: Mapping | Iterable = (), ext_left: bool = True):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for k, c in items:
            _acc(acc, (tuple(k[0]), tuple(k[1])), LaurentInt.coerce(c))
        self._terms = acc
        self.ext_left = ext_left

    @classmethod
    def unit(cls, ext_left: bool = True) -> "TensorElement":
        return cls({((), ()): ONE}, ext_left)

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.ext_left == other.ext_left and self._terms == other._terms

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if self.ext_left != other.ext_left:
            raise ValueError("cannot multiply left- and right-coaction tensors")
        out: dict = {}
        for (ea, xa), ca in self._terms.items():
            for (eb, xb), cb in other._terms.items():
                r = _ext_sort(ea + eb)
                if r is None:
                    continue
                ew, sign = r
                c = ca * cb * sign
                for xw, v in mq.normal_form(NCPoly({xa + xb: ONE})).items():
                    _acc(out, (ew, xw), c * v)
        obj = TensorElement.__new__(TensorElement)
        obj._terms = out
        obj.ext_left = self.ext_left
        return obj

    def ext_words(self) -> set:
        return {e for e, _ in self._terms}

    def component(self, ext_word: tuple) -> NCPoly:
        """The M_q coefficient of the given exterior basis word."""
        ext_word = tuple(ext_word)
        return NCPoly((x, c) for (e, x), c in self._terms.items() if e == ext_word)

    def __repr__(self):
        side = "ext(x)mq" if self.ext_left else "mq(x)ext"
        return f"TensorElement[{side}]({len(self._terms)} terms)"


def _coact_generator(i: int, n: int, right: bool) -> TensorElement:
    if right:
        # e_i -> sum_j e_j (x) t[j,i]
        return TensorElement(((((j,), ((j, i),)), ONE) for j in range(1, n + 1)), ext_left=True)
    # e_i -> sum_j t[i,j] (x) e_j
    return TensorElement(((((j,), ((i, j),)), ONE) for j in range(1, n + 1)), ext_left=False)


def _coact(p: ExtPoly, n: int, right: bool) -> TensorElement:
    if n < 1:
        raise ValueError("n must be positive")
    out: dict = {}
    for w, c in p.items():
        if any(i > n for i in w):
            raise ValueError(f"index out of range 1..{n} in e{list(w)}")
        t = TensorElement.unit(ext_left=right)
        for i in w:
            t = t * _coact_generator(i, n, right)
        for k, v in t.items():
            _acc(out, k, v * c)
    obj = TensorElement.__new__(TensorElement)
    obj._terms = out
    obj.ext_left = right
    return obj


def coact_right(p: ExtPoly, n: int) -> TensorElement:
    """Right coaction Λ_q(n) -> Λ_q(n) ⊗ M_q(n), extended multiplicatively."""
    return _coact(p, n, right=True)


def coact_left(p: ExtPoly, n: int) -> TensorElement:
    """Left coaction Λ_q(n) -> M_q(n) ⊗ Λ_q(n), extended multiplicatively."""
    return _coact(p, n, right=False)


def extract_colike(n: int, side: str = "right") -> NCPoly:
    """Coefficient of the top form e_1^...^e_n under the chosen coaction.

    Raises ``RuntimeError`` if any other exterior word survives, which would
    mean the top form is not mapped to a multiple of itself.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    top = tuple(range(1, n + 1))
    t = _coact(ExtPoly.e(*top), n, right=(side == "right"))
    stray = t.ext_words() - {top}
    if stray:
        raise RuntimeError(f"coaction of the top form has non-top components {sorted(stray)}")
    return t.component(top)
