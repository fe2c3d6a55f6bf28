"""Exact Laurent polynomials in one variable ``q`` over the integers.

Every coefficient that shows up in quantum-minor computations is a sum of
terms ``c * q**k`` with ``c`` an integer and ``k`` possibly negative, so the
ring Z[q, q^-1] is all we need. Python ints give arbitrary precision for free.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = ["LaurentInt", "add", "mul", "neg_q_power", "q_power", "ZERO", "ONE", "Q"]

Coercible = Union["LaurentInt", int]


class LaurentInt:
    """An element of Z[q, q^-1], stored as ``{exponent: nonzero int}``.

    Instances are immutable and hashable. Zero coefficients are never stored,
    so ``not x`` is the zero test.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, c in items:
            if c:
                acc[exp] = acc.get(exp, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentInt":
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x: Coercible) -> "LaurentInt":
        if isinstance(x, LaurentInt):
            return x
        if isinstance(x, int):
            return cls._raw({0: x} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentInt")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentInt.coerce(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentInt":
        return LaurentInt._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other: Coercible) -> "LaurentInt":
        other = LaurentInt.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentInt._raw(out)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "LaurentInt":
        return self + (-LaurentInt.coerce(other))

    def __rsub__(self, other: Coercible) -> "LaurentInt":
        return LaurentInt.coerce(other) + (-self)

    def __mul__(self, other: Coercible) -> "LaurentInt":
        other = LaurentInt.coerce(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1 and len(b) == 1:
            (ea, ca), = a.items()
            (eb, cb), = b.items()
            return LaurentInt._raw({ea + eb: ca * cb})
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentInt._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentInt":
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units (±q^k) can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentInt._raw({-e * -k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        return f"LaurentInt({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Render in ascending powers of q, e.g. ``1 - q^2`` or ``-q^-1 + q``."""
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms)):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            body = _render_unsigned(abs(c), e)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def _render_unsigned(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    qpart = "q" if e == 1 else f"q^{e}"
    return qpart if c == 1 else f"{c}*{qpart}"


ZERO = LaurentInt._raw({})
ONE = LaurentInt._raw({0: 1})
Q = LaurentInt._raw({1: 1})


def add(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return LaurentInt.coerce(a) + b


def mul(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return LaurentInt.coerce(a) * b


def q_power(k: int, c: int = 1) -> LaurentInt:
    """``c * q**k``."""
    return LaurentInt._raw({k: c} if c else {})


def neg_q_power(k: int) -> LaurentInt:
    """``(-q)**k``; negative ``k`` allowed since (-q)^-1 = -q^-1."""
    return LaurentInt._raw({k: -1 if k % 2 else 1})
