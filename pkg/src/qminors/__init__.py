"""Exact symbolic computation with quantum minors in the quantum matrix bialgebra M_q(n)."""

__version__ = "0.1.0"

from .laurent import LaurentInt, neg_q_power, q_power
from .mq import NCPoly, is_zero, normal_form, reduce_pair
from .exterior import ExtPoly, coact_left, coact_right, extract_colike
from .minors import det_permuted, det_q, det_repeated_rows, minor, replace_labels
from .identity import (
    FreeExpr,
    MinorSymbol,
    ReplacementRule,
    RuleSequence,
    injective_match,
    is_homogeneous,
    is_identity,
    phi_A,
    project_pi,
)
from .transforms import (
    ExchangeSpec,
    check_exchange_hypotheses,
    erase_included,
    exchange,
    exchange_trace,
    laplace_identity,
    muir_extend,
)
from .textio import ParseError, parse_expr, render_expr

__all__ = [
    "LaurentInt", "neg_q_power", "q_power",
    "NCPoly", "is_zero", "normal_form", "reduce_pair",
    "ExtPoly", "coact_left", "coact_right", "extract_colike",
    "det_permuted", "det_q", "det_repeated_rows", "minor", "replace_labels",
    "FreeExpr", "MinorSymbol", "ReplacementRule", "RuleSequence",
    "injective_match", "is_homogeneous", "is_identity", "phi_A", "project_pi",
    "ExchangeSpec", "check_exchange_hypotheses", "erase_included", "exchange",
    "exchange_trace", "laplace_identity", "muir_extend",
    "ParseError", "parse_expr", "render_expr",
]
