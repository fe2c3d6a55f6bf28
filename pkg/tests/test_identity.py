import pytest
from hypothesis import given, settings, strategies as st

from qminors.identity import (
    FreeExpr,
    MinorSymbol,
    ReplacementRule,
    RuleSequence,
    erase_decorations,
    injective_match,
    iota0,
    is_homogeneous,
    is_identity,
    phi_A,
    project_pi,
    replace_multi,
    sub_multiset,
    sym,
    t,
)
from qminors.laurent import LaurentInt, q_power
from qminors.minors import det_q
from qminors.mq import NCPoly, mul
from qminors.textio import parse_expr

P = parse_expr

symbols = st.builds(
    lambda m, rows, cols, d: MinorSymbol(tuple(rows[:m]), tuple(cols[:m]), d),
    st.integers(1, 2),
    st.lists(st.integers(1, 3), min_size=2, max_size=2),
    st.lists(st.integers(1, 3), min_size=2, max_size=2),
    st.integers(0, 2),
)
monos = st.lists(symbols, max_size=3).map(tuple)
coeffs = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(LaurentInt)
exprs = st.lists(st.tuples(monos, coeffs), max_size=4).map(FreeExpr)


def test_symbol_basics():
    s = sym([2, 1], [3, 1], 2)
    assert s.rows == (1, 2) and s.cols == (1, 3)
    assert s.size == 2
    assert s.render() == "D[1,2;1,3]@2"
    assert t(1, 1).render() == "D[1;1]"
    assert s.decorate(0) == sym([1, 2], [1, 3])
    with pytest.raises(ValueError):
        MinorSymbol((1,), (1, 2))
    with pytest.raises(ValueError):
        MinorSymbol((), ())


def test_project_det_symbol():
    assert project_pi(P("D[1,2;1,2]")) == det_q(2)


def test_project_repeated_rows_is_zero():
    assert not project_pi(P("D[3,3;2,3]@2"))


def test_project_same_row_relation():
    assert is_identity(P("D[1;2]@1 D[1;1] - q^-1*D[1;1] D[1;2]@1"))


def test_project_product_and_unit():
    assert project_pi(P("D[1;2] D[2;1]")) == mul(NCPoly.word((1, 2)), NCPoly.word((2, 1)))
    assert project_pi(P("3")) == NCPoly.unit().scale(3)
    assert project_pi(FreeExpr.zero()) == NCPoly.zero()


def test_is_identity():
    assert is_identity(P("D[1;1] D[2;2] - q*D[1;2] D[2;1] - D[1,2;1,2]"))
    assert not is_identity(P("D[1;1]"))
    assert is_identity(FreeExpr.zero())


def test_is_homogeneous():
    assert is_homogeneous(P("D[1;2]@1 D[1,2;1,2] - D[1,2;1,2] D[1;2]@1"))
    assert not is_homogeneous(P("D[1;1] D[2;2] - D[1,2;1,2]"))
    with pytest.raises(ValueError):
        is_homogeneous(FreeExpr.zero())


def test_multiset_helpers():
    assert sub_multiset((3, 3), (2, 3, 3))
    assert not sub_multiset((3, 3), (2, 3))
    assert replace_multi((3, 3), (3, 3), (2, 3)) == (2, 3)


def test_rule_validation():
    with pytest.raises(ValueError):
        ReplacementRule(1, (1,), None, None, None)
    with pytest.raises(ValueError):
        ReplacementRule(1, (1,), (1,), None, None)
    with pytest.raises(ValueError):
        ReplacementRule(1, (1, 2), (3,), None, None)
    with pytest.raises(ValueError):
        ReplacementRule(0, (1,), (2,), None, None)
    with pytest.raises(ValueError):
        RuleSequence([ReplacementRule.rows_only(2, (1,), (2,))])


EXAMPLE_RULES = RuleSequence(
    [ReplacementRule(1, (2,), (3,), (1,), (1,)), ReplacementRule(2, (3, 3), (2, 3), (2, 3), (2, 3))]
)
EXAMPLE_F = P("D[3,3;2,3]@2 * D[3;3] * D[2;1]@1 * D[3;3]")


def test_injective_match_example():
    assert injective_match(EXAMPLE_RULES, EXAMPLE_F)


def test_injective_match_commutation_seed():
    f = P("D[1;2]@1 D[1,2;1,2] - D[1,2;1,2] D[1;2]@1")
    assert injective_match([ReplacementRule.rows_only(1, (1,), (2,))], f)


def test_injective_match_failures():
    A = [ReplacementRule.rows_only(1, (1,), (2,))]
    assert not injective_match(A, P("D[1;2]@1 D[1;2]@1"))  # two hits
    assert not injective_match(A, P("D[1;2] D[1;1]"))  # no hit
    assert not injective_match(A, P("D[2;2]@1"))  # hit fails containment


def test_phi_A_example():
    out = phi_A(EXAMPLE_RULES, EXAMPLE_F)
    # the rule (33,23 -> 23,23) yields D[2,3;2,3]@2, not D[2,3;3,3]@2
    assert out == P("D[2,3;2,3]@2 D[3;3] D[3;1]@1 D[3;3]")
    assert out != P("D[2,3;3,3]@2 D[3;3] D[3;1]@1 D[3;3]")


def test_phi_A_leaves_other_decorations():
    A = [ReplacementRule.rows_only(1, (1,), (2,))]
    f = P("D[1;2]@1 D[1,2;1,2] - q*D[1,2;1,2] D[1;2]@1 D[1;3]")
    assert phi_A(A, f) == P("D[2;2]@1 D[1,2;1,2] - q*D[1,2;1,2] D[2;2]@1 D[1;3]")


def test_phi_A_columns_only():
    A = [ReplacementRule(1, None, None, (2,), (4,))]
    assert phi_A(A, P("D[1,2;1,2]@1")) == P("D[1,2;1,4]@1")


@settings(max_examples=100, deadline=None)
@given(exprs)
def test_iota0_then_erase_is_identity_map(f):
    g = erase_decorations(f)
    assert erase_decorations(iota0(g)) == g
    assert iota0(g) == g


@settings(max_examples=60, deadline=None)
@given(exprs, exprs)
def test_projection_is_algebra_map(f, g):
    assert project_pi(f + g) == project_pi(f) + project_pi(g)
    assert project_pi(f * g) == mul(project_pi(f), project_pi(g))


@settings(max_examples=60, deadline=None)
@given(exprs, exprs, exprs)
def test_free_algebra_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == FreeExpr.zero()


def test_scalar_mul():
    f = P("D[1;1]")
    assert f.scale(q_power(1)) == P("q*D[1;1]")
    assert (2 * f) == P("2*D[1;1]")
