"""Quantum minors, permuted determinants and label replacement."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _perms
from typing import Iterable, Sequence

from .laurent import neg_q_power
from .mq import NCPoly, normal_form

__all__ = [
    "label_set",
    "permutations",
    "length",
    "minor",
    "det_q",
    "det_permuted",
    "det_repeated_rows",
    "multiminor",
    "replace_labels",
]


def label_set(labels: Iterable[int]) -> tuple[int, ...]:
    """Validate and sort a set of positive integer labels."""
    out = tuple(sorted(labels))
    if any(x < 1 for x in out):
        raise ValueError(f"labels must be positive integers: {out}")
    if len(set(out)) != len(out):
        raise ValueError(f"repeated label in {out}")
    return out


def permutations(m: int):
    """All permutations of 1..m as 1-based image tuples, identity first."""
    return _perms(range(1, m + 1))


def length(perm: Sequence[int]) -> int:
    """Number of inversions of a permutation given as its image sequence."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def _row_expansion(rows: Sequence[int], cols: Sequence[int]) -> NCPoly:
    # sum_rho (-q)^l(rho) t[rows[0], cols[rho(1)]] ... t[rows[m-1], cols[rho(m)]]
    m = len(rows)
    terms = []
    for rho in permutations(m):
        word = tuple((rows[i], cols[rho[i] - 1]) for i in range(m))
        terms.append((word, neg_q_power(length(rho))))
    return normal_form(NCPoly(terms))


def _col_expansion(rows: Sequence[int], cols: Sequence[int]) -> NCPoly:
    # sum_rho (-q)^l(rho) t[rows[rho(1)], cols[0]] ... t[rows[rho(m)], cols[m-1]]
    m = len(cols)
    terms = []
    for rho in permutations(m):
        word = tuple((rows[rho[i] - 1], cols[i]) for i in range(m))
        terms.append((word, neg_q_power(length(rho))))
    return normal_form(NCPoly(terms))


@lru_cache(maxsize=4096)
def _minor(K: tuple, L: tuple) -> NCPoly:
    return _row_expansion(K, L)


def minor(K: Iterable[int], L: Iterable[int]) -> NCPoly:
    """Quantum minor D^K_L: q-determinant of rows K, columns L (sorted sets)."""
    K, L = label_set(K), label_set(L)
    if len(K) != len(L):
        raise ValueError(f"minor needs |K| = |L|, got {len(K)} and {len(L)}")
    if not K:
        raise ValueError("minor of the empty label set is not defined")
    return _minor(K, L)


def det_q(n: int) -> NCPoly:
    if n < 1:
        raise ValueError("n must be positive")
    full = tuple(range(1, n + 1))
    return minor(full, full)


def _check_perm(p: Sequence[int], n: int, name: str) -> tuple:
    p = tuple(p)
    if len(p) != n:
        raise ValueError(f"{name} has length {len(p)}, expected {n}")
    length(p)
    return p


def det_permuted(
    kind: str,
    sigma: Sequence[int],
    tau: Sequence[int],
    rows: Sequence[int] | None = None,
    n: int | None = None,
) -> NCPoly:
    """Permuted determinant d^{r,sigma}_tau or d^{c,sigma}_tau of a row selection of T.

    The underlying square matrix G has entries ``g[i][j] = t[rows[i], j]``
    (``rows`` defaults to 1..n, repeats allowed), and the expanded matrix is
    ``h[i][j] = g[sigma(i)][tau(j)]``. ``kind`` is ``"r"``/``"row"`` for the
    row expansion with prefactor (-q)^(l(tau) - l(sigma)) or ``"c"``/``"col"``
    for the column expansion with prefactor (-q)^(l(sigma) - l(tau)).
    """
    if n is None:
        n = len(sigma)
    if n < 1:
        raise ValueError("n must be positive")
    sigma = _check_perm(sigma, n, "sigma")
    tau = _check_perm(tau, n, "tau")
    rows = tuple(range(1, n + 1)) if rows is None else tuple(rows)
    if len(rows) != n:
        raise ValueError(f"row selection has length {len(rows)}, expected {n}")
    if any(r < 1 for r in rows):
        raise ValueError(f"row labels must be positive: {rows}")

    h_rows = tuple(rows[s - 1] for s in sigma)
    h_cols = tau
    if kind in ("r", "row"):
        pre = neg_q_power(length(tau) - length(sigma))
        body = _row_expansion(h_rows, h_cols)
    elif kind in ("c", "col"):
        pre = neg_q_power(length(sigma) - length(tau))
        body = _col_expansion(h_rows, h_cols)
    else:
        raise ValueError(f"kind must be 'r' or 'c', got {kind!r}")
    return body.scale(pre)


def det_repeated_rows(phi: Sequence[int], n: int) -> NCPoly:
    """d^r of the n x n matrix whose i-th row is row phi(i) of T."""
    phi = tuple(phi)
    if len(phi) != n:
        raise ValueError(f"row map has length {len(phi)}, expected {n}")
    if any(not 1 <= x <= n for x in phi):
        raise ValueError(f"row map values must lie in 1..{n}: {phi}")
    ident = tuple(range(1, n + 1))
    return det_permuted("r", ident, ident, rows=phi, n=n)


@lru_cache(maxsize=4096)
def multiminor(K: tuple, L: tuple) -> NCPoly:
    """Minor for multilabels (nondecreasing, repeats allowed).

    Repeated rows go through the row expansion and repeated columns through
    the column expansion; both vanish identically in M_q.
    """
    if len(K) != len(L):
        raise ValueError(f"|K| = {len(K)} but |L| = {len(L)}")
    if not K:
        return NCPoly.unit()
    if len(set(K)) != len(K):
        return _row_expansion(K, L)
    if len(set(L)) != len(L):
        return _col_expansion(K, L)
    return minor(K, L)


def replace_labels(K: Iterable[int], moves: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Apply ``(old, new)`` label moves to ``K`` left to right and re-sort.

    >>> replace_labels((1, 2), [(1, 3), (2, 4)])
    (3, 4)
    """
    current = list(label_set(K))
    for old, new in moves:
        if old not in current:
            raise ValueError(f"label {old} is not in {tuple(sorted(current))}")
        if new in current:
            raise ValueError(f"label {new} is already in {tuple(sorted(current))}")
        if new < 1:
            raise ValueError(f"labels must be positive, got {new}")
        current[current.index(old)] = new
    return tuple(sorted(current))
