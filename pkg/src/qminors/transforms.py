"""Identity generators and identity-to-identity transforms.

* :func:`laplace_identity` builds the four q-Laplace expansions as free
  expressions that project to zero.
* :func:`muir_extend` adds fresh rows and columns to every minor of a
  homogeneous identity.
* :func:`exchange` moves the row of the single decorated 1x1 factor from
  ``k`` to ``k'`` when ``k``, ``k'`` and a column ``l0`` are included in every
  other factor; :func:`exchange_trace` replays and checks each step of the
  argument that the result is again an identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .identity import (
    FreeExpr,
    MinorSymbol,
    ReplacementRule,
    RuleSequence,
    injective_match,
    is_homogeneous,
    is_identity,
    phi_A,
    project_monomial,
    project_pi,
    t,
)
from .laurent import ONE, LaurentInt, neg_q_power, q_power
from .minors import label_set
from .mq import NCPoly

__all__ = [
    "LAPLACE_FORMS",
    "ExchangeSpec",
    "HypothesisError",
    "ExchangeReport",
    "TraceStep",
    "ExchangeTrace",
    "laplace_identity",
    "muir_extend",
    "erase_included",
    "check_exchange_hypotheses",
    "exchange_rule",
    "exchange",
    "split_coefficients",
    "exchange_trace",
    "coefficient_correspondence",
]

LAPLACE_FORMS = ("row-first", "col-first", "row-last", "col-last")


class HypothesisError(ValueError):
    """Input does not satisfy the preconditions of a transform."""


def _complement(S: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(x for x in range(1, n + 1) if x not in S)


def laplace_identity(n: int, K: Iterable[int], L: Iterable[int], form: str = "row-first") -> FreeExpr:
    """q-Laplace expansion of the determinant as an identity.

    With ``J`` running over the ``m``-subsets of 1..n, ``^`` the complement
    in 1..n and ``|S|`` the sum of labels in ``S``::

        row-first:  sum_J (-q)^(|J|-|L|) D[K;J] D[^L;^J]
        col-first:  sum_J (-q)^(|J|-|L|) D[J;K] D[^J;^L]
        row-last:   sum_J (-q)^(|L|-|J|) D[^L;^J] D[K;J]
        col-last:   sum_J (-q)^(|L|-|J|) D[^J;^L] D[J;K]

    each minus ``D[1..n;1..n]`` when ``K == L`` (and nothing otherwise).
    """
    K, L = label_set(K), label_set(L)
    m = len(K)
    if form not in LAPLACE_FORMS:
        raise ValueError(f"form must be one of {LAPLACE_FORMS}, got {form!r}")
    if len(L) != m:
        raise ValueError(f"|K| = {m} but |L| = {len(L)}")
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= |K| < n, got |K| = {m}, n = {n}")
    if K[-1] > n or L[-1] > n:
        raise ValueError(f"labels must lie in 1..{n}")

    Lc = _complement(L, n)
    sL = sum(L)
    terms = []
    for J in combinations(range(1, n + 1), m):
        Jc = _complement(J, n)
        if form == "row-first":
            mono = (MinorSymbol(K, J), MinorSymbol(Lc, Jc))
            e = sum(J) - sL
        elif form == "col-first":
            mono = (MinorSymbol(J, K), MinorSymbol(Jc, Lc))
            e = sum(J) - sL
        elif form == "row-last":
            mono = (MinorSymbol(Lc, Jc), MinorSymbol(K, J))
            e = sL - sum(J)
        else:
            mono = (MinorSymbol(Jc, Lc), MinorSymbol(J, K))
            e = sL - sum(J)
        terms.append((mono, neg_q_power(e)))
    if K == L:
        full = tuple(range(1, n + 1))
        terms.append(((MinorSymbol(full, full),), -ONE))
    return FreeExpr(terms)


def _labels_used(f: FreeExpr) -> tuple[set, set]:
    rows, cols = set(), set()
    for s in f.symbols():
        rows.update(s.rows)
        cols.update(s.cols)
    return rows, cols


def muir_extend(
    f: FreeExpr,
    I: Iterable[int] | None,
    J: Iterable[int] | None,
    Krows: Iterable[int],
    Lcols: Iterable[int],
    verify: bool = False,
) -> FreeExpr:
    """Replace every symbol ``D[U;V]@i`` by ``D[U+Krows;V+Lcols]@i``.

    ``I``/``J`` are the row/column labels of the submatrix the identity lives
    in (inferred from ``f`` when ``None``). The new labels must be disjoint
    from them. ``f`` must be a nonzero homogeneous expression. With
    ``verify=True`` both input and output are checked to be identities.
    """
    if not f:
        raise HypothesisError("cannot extend the zero expression (homogeneity undefined)")
    if not is_homogeneous(f):
        raise HypothesisError("Muir extension needs a homogeneous identity")
    used_rows, used_cols = _labels_used(f)
    I = set(used_rows) if I is None else set(label_set(I))
    J = set(used_cols) if J is None else set(label_set(J))
    Krows, Lcols = label_set(Krows), label_set(Lcols)
    if not used_rows <= I:
        raise HypothesisError(f"rows {sorted(used_rows - I)} are outside I = {sorted(I)}")
    if not used_cols <= J:
        raise HypothesisError(f"columns {sorted(used_cols - J)} are outside J = {sorted(J)}")
    if I & set(Krows):
        raise HypothesisError(f"new rows {sorted(I & set(Krows))} already in I")
    if J & set(Lcols):
        raise HypothesisError(f"new columns {sorted(J & set(Lcols))} already in J")
    if len(Krows) != len(Lcols):
        raise HypothesisError("need as many new rows as new columns")
    if verify and not is_identity(f):
        raise HypothesisError("input is not an identity")

    def extend(s: MinorSymbol) -> MinorSymbol:
        return MinorSymbol(s.rows + Krows, s.cols + Lcols, s.decoration)

    out = f.map_symbols(extend)
    if verify and not is_identity(out):
        raise RuntimeError("Muir extension produced a non-identity")
    return out


@dataclass(frozen=True)
class ExchangeSpec:
    k: int
    kprime: int
    l0: int

    def __post_init__(self):
        if self.k == self.kprime:
            raise ValueError("k and k' must differ")
        if min(self.k, self.kprime, self.l0) < 1:
            raise ValueError("labels must be positive")


def _remove_one(labels: tuple, x: int) -> tuple:
    i = labels.index(x)
    return labels[:i] + labels[i + 1 :]


def erase_included(f: FreeExpr, spec: ExchangeSpec) -> FreeExpr:
    """Drop row k' and column l0 from every decoration-0 factor.

    A 1x1 factor that loses both labels becomes the empty minor, i.e. 1, and
    is dropped from its monomial.
    """
    terms = []
    for m, c in f.items():
        new = []
        for s in m:
            if s.decoration != 0:
                new.append(s)
                continue
            if spec.kprime not in s.rows or spec.l0 not in s.cols:
                raise HypothesisError(f"{s.render()} lacks row {spec.kprime} or column {spec.l0}")
            rows = _remove_one(s.rows, spec.kprime)
            cols = _remove_one(s.cols, spec.l0)
            if rows:
                new.append(MinorSymbol(rows, cols, 0))
        terms.append((tuple(new), c))
    return FreeExpr(terms)


@dataclass
class ExchangeReport:
    linearity: bool
    included_rows: bool
    hierarchy: bool | None
    f_is_identity: bool
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.linearity and self.included_rows and bool(self.hierarchy) and self.f_is_identity

    def as_dict(self) -> dict:
        return {
            "linearity": self.linearity,
            "included_rows": self.included_rows,
            "hierarchy": self.hierarchy,
            "f_is_identity": self.f_is_identity,
            "passed": self.passed,
            "messages": list(self.messages),
        }


def _linearity_problem(m: tuple, spec: ExchangeSpec) -> str | None:
    decorated = [s for s in m if s.decoration != 0]
    if len(decorated) != 1:
        return f"monomial has {len(decorated)} decorated factors, expected exactly 1"
    s = decorated[0]
    if s.decoration != 1 or s.size != 1 or s.rows[0] != spec.k:
        return f"decorated factor {s.render()} is not of the form D[{spec.k};l]@1"
    if s.cols[0] == spec.l0:
        return f"decorated factor {s.render()} sits in column l0 = {spec.l0}"
    return None


def check_exchange_hypotheses(f: FreeExpr, spec: ExchangeSpec) -> ExchangeReport:
    """Evaluate linearity, the included-row condition, the hierarchy condition
    and whether ``f`` itself is an identity. Never raises on bad input."""
    msgs: list[str] = []
    linear = True
    included = True
    for m in f.monomials():
        problem = _linearity_problem(m, spec)
        if problem:
            linear = False
            msgs.append(f"linearity: {problem}")
        for s in m:
            if s.decoration == 0:
                missing = [f"row {r}" for r in (spec.k, spec.kprime) if r not in s.rows]
                if spec.l0 not in s.cols:
                    missing.append(f"column {spec.l0}")
                if missing:
                    included = False
                    msgs.append(f"included rows: {s.render()} lacks {', '.join(missing)}")
    if included:
        hierarchy = is_identity(erase_included(f, spec))
        if not hierarchy:
            msgs.append("hierarchy: erasing row k' and column l0 does not give an identity")
    else:
        hierarchy = None
        msgs.append("hierarchy: not evaluated (included-row condition fails)")
    f_ok = is_identity(f)
    if not f_ok:
        msgs.append("input is not an identity")
    return ExchangeReport(linear, included, hierarchy, f_ok, msgs)


def exchange_rule(spec: ExchangeSpec) -> RuleSequence:
    return RuleSequence([ReplacementRule.rows_only(1, (spec.k,), (spec.kprime,))])


def exchange(f: FreeExpr, spec: ExchangeSpec, verify: bool = True) -> FreeExpr:
    """Included-row exchange: move the decorated factor's row from k to k'."""
    report = check_exchange_hypotheses(f, spec)
    if not report.passed:
        raise HypothesisError("; ".join(report.messages))
    A = exchange_rule(spec)
    if not injective_match(A, f):
        raise RuntimeError("exchange rule does not injectively match a hypothesis-passing input")
    out = phi_A(A, f)
    if verify and not is_identity(out):
        raise RuntimeError("exchanged expression is not an identity")
    return out


def split_coefficients(k: int, kprime: int, l: int, l0: int) -> tuple[LaurentInt, LaurentInt]:
    """``(a, b)`` with D[k,k';l,l0] = a t[k,l] t[k',l0] + b t[k',l] t[k,l0] in M_q."""
    if k < kprime:
        return (ONE, neg_q_power(1)) if l < l0 else (-q_power(-1), ONE)
    return (neg_q_power(1), ONE) if l < l0 else (ONE, -q_power(-1))


@dataclass
class TraceStep:
    key: str
    description: str
    passed: bool
    residual: NCPoly | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        from .textio import render_ncpoly

        return {
            "step": self.key,
            "description": self.description,
            "passed": self.passed,
            "residual": None if self.residual is None else render_ncpoly(self.residual),
            "detail": self.detail,
        }


@dataclass
class ExchangeTrace:
    spec: ExchangeSpec
    f_vee: FreeExpr
    f_tilde: FreeExpr
    f_tilde_k: FreeExpr
    f_tilde_kprime: FreeExpr
    output: FreeExpr
    steps: list[TraceStep]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)


def _split_monomial(m: tuple, spec: ExchangeSpec) -> tuple[int, int]:
    # position and column l of the decoration-1 factor created by the Muir lift
    hits = [i for i, s in enumerate(m) if s.decoration == 1]
    if len(hits) != 1:
        raise RuntimeError(f"expected one decoration-1 factor, found {len(hits)}")
    i = hits[0]
    s = m[i]
    if s.rows != tuple(sorted((spec.k, spec.kprime))) or spec.l0 not in s.cols or s.size != 2:
        raise RuntimeError(f"lifted factor {s.render()} is not D[k,k';l,l0]@1")
    l = _remove_one(s.cols, spec.l0)[0]
    return i, l


def exchange_trace(f: FreeExpr, spec: ExchangeSpec) -> ExchangeTrace:
    """Replay the argument behind :func:`exchange`, checking every step exactly.

    Steps: (a) the erased expression f_vee is an identity; (b) its Muir lift
    f_tilde by row k' and column l0 is an identity; (c) f_tilde splits as
    f_tilde_k + f_tilde_k' by expanding the lifted 2x2 factor; (d) pushing
    t[k',l0] (resp. t[k,l0]) to the right gives f_tilde_k = a f t[k',l0] and
    f_tilde_k' = b phi_A(f) t[k,l0] exactly, monomial by monomial; (e) the
    exchanged expression is an identity.
    """
    report = check_exchange_hypotheses(f, spec)
    if not report.passed:
        raise HypothesisError("; ".join(report.messages))
    steps: list[TraceStep] = []
    k, kp, l0 = spec.k, spec.kprime, spec.l0

    f_vee = erase_included(f, spec)
    r = project_pi(f_vee)
    steps.append(TraceStep("a", "erased expression f_vee is an identity", not r, r))

    f_tilde = muir_extend(f_vee, None, None, (kp,), (l0,))
    r = project_pi(f_tilde)
    steps.append(TraceStep("b", "Muir lift f_tilde = f_vee extended by row k', column l0 is an identity", not r, r))

    tk_terms, tkp_terms = [], []
    coeffs = set()
    for m, c in f_tilde.items():
        i, l = _split_monomial(m, spec)
        a, b = split_coefficients(k, kp, l, l0)
        coeffs.add((l, a, b))
        head, tail = m[:i], m[i + 1 :]
        tk_terms.append((head + (t(k, l, 1), t(kp, l0, 0)) + tail, c * a))
        tkp_terms.append((head + (t(kp, l, 1), t(k, l0, 0)) + tail, c * b))
    f_tk = FreeExpr(tk_terms)
    f_tkp = FreeExpr(tkp_terms)
    r = project_pi(f_tilde - f_tk - f_tkp)
    detail = "; ".join(f"l={l}: a={a.render()}, b={b.render()}" for l, a, b in sorted(coeffs, key=lambda x: x[0]))
    steps.append(TraceStep("c", "f_tilde = f_tilde_k + f_tilde_k' after expanding D[k,k';l,l0]", not r, r, detail))

    A = exchange_rule(spec)
    out = phi_A(A, f)
    rhs_k, rhs_kp = [], []
    first_bad = None
    for m, c in f.items():
        i = next(j for j, s in enumerate(m) if s.decoration == 1)
        l = m[i].cols[0]
        a, b = split_coefficients(k, kp, l, l0)
        moved = phi_A(A, FreeExpr.mono(*m))
        (m_moved,) = list(moved.monomials())
        rhs_k.append((m + (t(kp, l0, 0),), c * a))
        rhs_kp.append((m_moved + (t(k, l0, 0),), c * b))
        # same claims for the single monomial, where nothing cancels
        head, tail = m[:i], m[i + 1 :]
        for lhs, rhs in (
            ((head + (t(k, l, 1), t(kp, l0, 0)) + tail), m + (t(kp, l0, 0),)),
            ((head + (t(kp, l, 1), t(k, l0, 0)) + tail), m_moved + (t(k, l0, 0),)),
        ):
            res = project_monomial(lhs) - project_monomial(rhs)
            if res and first_bad is None:
                first_bad = res
    r1 = project_pi(f_tk - FreeExpr(rhs_k))
    r2 = project_pi(f_tkp - FreeExpr(rhs_kp))
    ok = not r1 and not r2 and first_bad is None
    residual = next((x for x in (r1, r2, first_bad) if x), r1)
    steps.append(
        TraceStep(
            "d",
            "f_tilde_k - a f t[k',l0] and f_tilde_k' - b phi_A(f) t[k,l0] vanish, also monomial by monomial",
            ok,
            residual,
        )
    )

    r = project_pi(out)
    steps.append(TraceStep("e", "exchanged expression phi_A(f) is an identity", not r, r))
    return ExchangeTrace(spec, f_vee, f_tilde, f_tk, f_tkp, out, steps)


def coefficient_correspondence(f: FreeExpr, g: FreeExpr, A: RuleSequence) -> bool:
    """True when ``phi_A`` maps the monomials of ``f`` one-to-one onto those of
    ``g`` without changing any coefficient."""
    image: dict = {}
    for m, c in f.items():
        m2 = phi_A(A, FreeExpr.mono(*m)).monomials()
        (m2,) = list(m2)
        if m2 in image:
            return False
        image[m2] = c
    return image == g.terms

