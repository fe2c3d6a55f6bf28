"""The free algebra on (decorated) minor symbols and its projection to M_q.

A :class:`MinorSymbol` ``D[K;L]@i`` is a formal quantum minor with row
multilabel ``K``, column multilabel ``L`` and decoration ``i`` (0 for plain,
undecorated symbols). A :class:`FreeExpr` is a finite linear combination of
free monomials, i.e. tuples of symbols; nothing is ever reordered.

An *identity* is an expression whose image in M_q vanishes after erasing
decorations and replacing every symbol by its quantum minor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .laurent import ZERO, LaurentInt
from .minors import multiminor
from .mq import NCPoly, mul as mq_mul

__all__ = [
    "MinorSymbol",
    "FreeExpr",
    "ReplacementRule",
    "RuleSequence",
    "sym",
    "t",
    "multilabel",
    "iota0",
    "erase_decorations",
    "project_pi",
    "is_identity",
    "size_profile",
    "is_homogeneous",
    "injective_match",
    "phi_A",
    "sub_multiset",
    "replace_multi",
]


def multilabel(labels: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(labels))
    if not out:
        raise ValueError("multilabel must be nonempty")
    if any(x < 1 for x in out):
        raise ValueError(f"labels must be positive integers: {out}")
    return out


@dataclass(frozen=True, order=True)
class MinorSymbol:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    decoration: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rows", multilabel(self.rows))
        object.__setattr__(self, "cols", multilabel(self.cols))
        if len(self.rows) != len(self.cols):
            raise ValueError(f"|K| != |L| in D[{self.rows};{self.cols}]")
        if self.decoration < 0:
            raise ValueError("decoration must be nonnegative")

    @property
    def size(self) -> int:
        return len(self.rows)

    def decorate(self, i: int) -> "MinorSymbol":
        return MinorSymbol(self.rows, self.cols, i)

    def render(self) -> str:
        body = f"D[{','.join(map(str, self.rows))};{','.join(map(str, self.cols))}]"
        return body if self.decoration == 0 else f"{body}@{self.decoration}"

    def __str__(self) -> str:
        return self.render()


def sym(rows: Iterable[int] | int, cols: Iterable[int] | int, decoration: int = 0) -> MinorSymbol:
    if isinstance(rows, int):
        rows = (rows,)
    if isinstance(cols, int):
        cols = (cols,)
    return MinorSymbol(tuple(rows), tuple(cols), decoration)


def t(row: int, col: int, decoration: int = 0) -> MinorSymbol:
    """The 1x1 symbol f^row_col."""
    return MinorSymbol((row,), (col,), decoration)


Monomial = tuple  # tuple[MinorSymbol, ...]


def _acc(out: dict, key, c: LaurentInt) -> None:
    s = out.get(key, ZERO) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class FreeExpr:
    """Element of the decorated free algebra: ``{monomial: coefficient}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            m = tuple(m)
            if not all(isinstance(s, MinorSymbol) for s in m):
                raise TypeError("monomials must be sequences of MinorSymbol")
            _acc(acc, m, LaurentInt.coerce(c))
        self._terms = acc

    @classmethod
    def mono(cls, *symbols: MinorSymbol, coeff: LaurentInt | int = 1) -> "FreeExpr":
        return cls({tuple(symbols): coeff})

    @classmethod
    def zero(cls) -> "FreeExpr":
        return cls()

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, monomial: Sequence[MinorSymbol]) -> LaurentInt:
        return self._terms.get(tuple(monomial), ZERO)

    def symbols(self) -> set:
        return {s for m in self._terms for s in m}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FreeExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FreeExpr") -> "FreeExpr":
        return FreeExpr(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FreeExpr":
        return FreeExpr((m, -c) for m, c in self._terms.items())

    def __sub__(self, other: "FreeExpr") -> "FreeExpr":
        return self + (-other)

    def scale(self, c: LaurentInt | int) -> "FreeExpr":
        c = LaurentInt.coerce(c)
        return FreeExpr((m, v * c) for m, v in self._terms.items())

    def __mul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        if isinstance(other, MinorSymbol):
            other = FreeExpr.mono(other)
        if not isinstance(other, FreeExpr):
            return NotImplemented
        return FreeExpr(
            (m1 + m2, c1 * c2) for m1, c1 in self._terms.items() for m2, c2 in other._terms.items()
        )

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        if isinstance(other, MinorSymbol):
            return FreeExpr.mono(other) * self
        return NotImplemented

    def map_symbols(self, fn) -> "FreeExpr":
        """Apply ``fn`` to every symbol; coefficients of merged monomials add."""
        return FreeExpr((tuple(fn(s) for s in m), c) for m, c in self._terms.items())

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda mc: mc[0])

    def render(self) -> str:
        from .textio import render_expr

        return render_expr(self)

    def __repr__(self):
        return f"FreeExpr({self.render()!r})"


def iota0(f: FreeExpr) -> FreeExpr:
    """Inclusion of undecorated expressions as decoration-0 ones."""
    return f.map_symbols(lambda s: s.decorate(0))


def erase_decorations(f: FreeExpr) -> FreeExpr:
    return f.map_symbols(lambda s: s.decorate(0))


@lru_cache(maxsize=8192)
def _project_symbol(rows: tuple, cols: tuple) -> NCPoly:
    return multiminor(rows, cols)


def project_monomial(m: Sequence[MinorSymbol]) -> NCPoly:
    out = NCPoly.unit()
    for s in m:
        out = mq_mul(out, _project_symbol(s.rows, s.cols))
        if not out:
            break
    return out


def project_pi(f: FreeExpr) -> NCPoly:
    """Image of ``f`` in M_q (decorations erased), in normal form."""
    acc: dict = {}
    for m, c in f.items():
        for w, v in project_monomial(m).items():
            _acc(acc, w, v * c)
    return NCPoly(acc)


def is_identity(f: FreeExpr) -> bool:
    return not project_pi(f)


def size_profile(monomial: Sequence[MinorSymbol]) -> tuple:
    """Sorted ``(size, count)`` pairs for the factors of a monomial."""
    return tuple(sorted(Counter(s.size for s in monomial).items()))


def is_homogeneous(f: FreeExpr) -> bool:
    if not f:
        raise ValueError("homogeneity is undefined for the zero expression")
    return len({size_profile(m) for m in f.monomials()}) == 1


def sub_multiset(small: Sequence[int], big: Sequence[int]) -> bool:
    need = Counter(small)
    have = Counter(big)
    return all(have[x] >= k for x, k in need.items())


def replace_multi(labels: Sequence[int], old: Sequence[int], new: Sequence[int]) -> tuple[int, ...]:
    """Remove one occurrence of each label in ``old`` and add ``new`` (sorted)."""
    out = list(labels)
    for x in old:
        out.remove(x)
    return tuple(sorted(out + list(new)))


@dataclass(frozen=True)
class ReplacementRule:
    """``(K, L -> Kp, Lp)`` acting on symbols with the given decoration.

    Either side may be omitted (``None`` on both halves of the pair), which
    means no containment constraint and no change on that side.
    """

    index: int
    K: tuple | None = None
    Kp: tuple | None = None
    L: tuple | None = None
    Lp: tuple | None = None

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("rule index must be positive")
        for a, b, side in ((self.K, self.Kp, "row"), (self.L, self.Lp, "column")):
            if (a is None) != (b is None):
                raise ValueError(f"{side} part of the rule must give both old and new labels")
        if self.K is None and self.L is None:
            raise ValueError("a rule needs a row part, a column part, or both")
        for name in ("K", "Kp", "L", "Lp"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, multilabel(v))
        if self.K is not None and len(self.K) != len(self.Kp):
            raise ValueError("row replacement must keep the number of labels")
        if self.L is not None and len(self.L) != len(self.Lp):
            raise ValueError("column replacement must keep the number of labels")
        if self.K == self.Kp and self.L == self.Lp:
            raise ValueError("replacement rule is trivial")

    @classmethod
    def rows_only(cls, index: int, old: Iterable[int], new: Iterable[int]) -> "ReplacementRule":
        return cls(index, tuple(old), tuple(new), None, None)

    def matches(self, s: MinorSymbol) -> bool:
        if s.decoration != self.index:
            return False
        if self.K is not None and not sub_multiset(self.K, s.rows):
            return False
        if self.L is not None and not sub_multiset(self.L, s.cols):
            return False
        return True

    def apply(self, s: MinorSymbol) -> MinorSymbol:
        if not self.matches(s):
            return s
        rows = s.rows if self.K is None else replace_multi(s.rows, self.K, self.Kp)
        cols = s.cols if self.L is None else replace_multi(s.cols, self.L, self.Lp)
        return MinorSymbol(rows, cols, s.decoration)


class RuleSequence(tuple):
    """Rules ``A_1..A_r``; the i-th rule must carry index i."""

    def __new__(cls, rules: Iterable[ReplacementRule] = ()):
        rules = tuple(rules)
        for i, r in enumerate(rules, start=1):
            if r.index != i:
                raise ValueError(f"rule at position {i} has index {r.index}")
        return super().__new__(cls, rules)

    def rule(self, i: int) -> ReplacementRule | None:
        return self[i - 1] if 1 <= i <= len(self) else None


def _as_rules(A) -> RuleSequence:
    return A if isinstance(A, RuleSequence) else RuleSequence(A)


def injective_match(A: Iterable[ReplacementRule], f: FreeExpr) -> bool:
    """Every monomial has, for each rule index i, exactly one factor decorated i,
    and that factor satisfies the rule's containment condition."""
    A = _as_rules(A)
    for m in f.monomials():
        for rule in A:
            hits = [s for s in m if s.decoration == rule.index]
            if len(hits) != 1 or not rule.matches(hits[0]):
                return False
    return True


def phi_A(A: Iterable[ReplacementRule], f: FreeExpr) -> FreeExpr:
    """The substitution endomorphism: rewrite every matching symbol by its rule."""
    A = _as_rules(A)

    def act(s: MinorSymbol) -> MinorSymbol:
        rule = A.rule(s.decoration)
        return s if rule is None else rule.apply(s)

    return f.map_symbols(act)
