import itertools

import pytest

from qminors.identity import FreeExpr, is_identity
from qminors.textio import parse_expr as P
from qminors.transforms import (
    LAPLACE_FORMS,
    ExchangeSpec,
    HypothesisError,
    check_exchange_hypotheses,
    coefficient_correspondence,
    erase_included,
    exchange,
    exchange_rule,
    exchange_trace,
    laplace_identity,
    muir_extend,
)

from corpus import exchange_seeds, muir_extensions, muir_seeds

SEED = P("D[1;2]@1 D[1,2;1,2] - D[1,2;1,2] D[1;2]@1")
SPEC = ExchangeSpec(1, 2, 1)


# -- Laplace -----------------------------------------------------------------

def test_laplace_n2_row_first_rendering():
    f = laplace_identity(2, [1], [1], "row-first")
    assert f == P("D[1;1] D[2;2] - q*D[1;2] D[2;1] - D[1,2;1,2]")
    assert is_identity(f)


def test_laplace_offdiagonal_has_no_det_term():
    f = laplace_identity(3, [1], [2], "col-first")
    assert all(len(m) == 2 for m in f.monomials())
    assert is_identity(f)


@pytest.mark.parametrize("form", LAPLACE_FORMS)
def test_laplace_n3_all(form):
    for m in (1, 2):
        for K, L in itertools.product(itertools.combinations(range(1, 4), m), repeat=2):
            assert is_identity(laplace_identity(3, K, L, form)), (form, K, L)


def test_laplace_validation():
    with pytest.raises(ValueError):
        laplace_identity(3, [1], [1], "diagonal")
    with pytest.raises(ValueError):
        laplace_identity(2, [1, 2], [1, 2])
    with pytest.raises(ValueError):
        laplace_identity(2, [3], [1])
    with pytest.raises(ValueError):
        laplace_identity(3, [1], [1, 2])


# -- Muir --------------------------------------------------------------------

def test_muir_example():
    f = P("D[1;1] D[1;2] - q*D[1;2] D[1;1]")
    g = muir_extend(f, [1], [1, 2], [2], [3], verify=True)
    assert g == P("D[1,2;1,3] D[1,2;2,3] - q*D[1,2;2,3] D[1,2;1,3]")


def test_muir_empty_extension():
    f = P("D[1;1] D[1;2] - q*D[1;2] D[1;1]")
    assert muir_extend(f, None, None, [], []) == f


def test_muir_laplace_lift():
    f = laplace_identity(2, [1], [2], "row-last")
    assert is_identity(muir_extend(f, [1, 2], [1, 2], [3], [3]))


def test_muir_corpus_sample():
    for label, f, I, J in muir_seeds()[::5]:
        for Kr, Lc in itertools.islice(muir_extensions(I, J, 4), 3):
            assert is_identity(muir_extend(f, I, J, Kr, Lc)), (label, Kr, Lc)


def test_muir_rejections():
    f = P("D[1;1] D[1;2] - q*D[1;2] D[1;1]")
    with pytest.raises(HypothesisError):
        muir_extend(P("D[1;1] D[2;2] - D[1,2;1,2]"), None, None, [3], [3])
    with pytest.raises(HypothesisError):
        muir_extend(FreeExpr.zero(), None, None, [3], [3])
    with pytest.raises(HypothesisError):
        muir_extend(f, [1], [1, 2], [1], [3])
    with pytest.raises(HypothesisError):
        muir_extend(f, [1], [1, 2], [2], [2])
    with pytest.raises(HypothesisError):
        muir_extend(f, [1], [1, 2], [2, 3], [3])
    with pytest.raises(HypothesisError):
        muir_extend(f, [2], [1, 2], [3], [3])
    with pytest.raises(HypothesisError):
        muir_extend(P("D[1;1]"), None, None, [2], [2], verify=True)


# -- exchange ----------------------------------------------------------------

def test_erase_included_examples():
    assert erase_included(P("D[1,2;1,2]"), SPEC) == P("D[1;2]")
    assert erase_included(P("D[1;2]@1 D[1;3]@1"), SPEC) == P("D[1;2]@1 D[1;3]@1")
    assert erase_included(P("D[2;1] D[1;2]@1"), SPEC) == P("D[1;2]@1")
    with pytest.raises(HypothesisError):
        erase_included(P("D[1,2;1,3]"), ExchangeSpec(1, 2, 2))


def test_hypotheses_pass_on_seed():
    rep = check_exchange_hypotheses(SEED, SPEC)
    assert rep.passed
    assert rep.as_dict()["passed"] is True


def test_hypotheses_linearity_fails_when_l_is_l0():
    rep = check_exchange_hypotheses(P("D[1;1]@1 D[1,2;1,2] - D[1,2;1,2] D[1;1]@1"), SPEC)
    assert not rep.linearity and not rep.passed


def test_hypotheses_linearity_counts_decorated_factors():
    rep = check_exchange_hypotheses(P("D[1,2;1,2] D[1,2;1,2]"), SPEC)
    assert not rep.linearity


def test_hypotheses_included_rows_fail():
    rep = check_exchange_hypotheses(P("D[1;2]@1 D[1,3;1,3] - D[1,3;1,3] D[1;2]@1"), SPEC)
    assert not rep.included_rows
    assert rep.hierarchy is None


def test_hypotheses_hierarchy_fails():
    f = P("D[1;2]@1 D[1,2;1,2] - q*D[1,2;1,2] D[1;2]@1")
    rep = check_exchange_hypotheses(f, SPEC)
    assert rep.included_rows and rep.linearity
    assert rep.hierarchy is False
    assert not rep.f_is_identity


def test_single_monomial_checked_by_checker():
    rep = check_exchange_hypotheses(P("D[1;2]@1 D[1,2;1,2]"), SPEC)
    assert not rep.passed


def test_exchange_seed():
    out = exchange(SEED, SPEC)
    assert out == P("D[2;2]@1 D[1,2;1,2] - D[1,2;1,2] D[2;2]@1")
    assert coefficient_correspondence(SEED, out, exchange_rule(SPEC))


def test_exchange_rejects_bad_input():
    with pytest.raises(HypothesisError):
        exchange(P("D[1;2]@1 D[1,3;1,3] - D[1,3;1,3] D[1;2]@1"), SPEC)


def test_spec_requires_distinct_rows():
    with pytest.raises(ValueError):
        ExchangeSpec(1, 1, 2)


def test_trace_seed():
    tr = exchange_trace(SEED, SPEC)
    assert [s.key for s in tr.steps] == ["a", "b", "c", "d", "e"]
    assert tr.passed
    assert all(s.residual is not None and not s.residual for s in tr.steps)
    assert tr.output == exchange(SEED, SPEC)
    assert tr.f_vee == P("D[1;2]@1 D[1;2] - D[1;2] D[1;2]@1")


def test_trace_rejections():
    with pytest.raises(HypothesisError):
        exchange_trace(P("D[1;2]@1 D[1,3;1,3] - D[1,3;1,3] D[1;2]@1"), SPEC)
    with pytest.raises(HypothesisError):
        exchange_trace(FreeExpr.zero(), SPEC)


def test_exchange_corpus_sample():
    for label, f, spec in exchange_seeds()[:12]:
        tr = exchange_trace(f, spec)
        assert tr.passed, label
        assert coefficient_correspondence(f, tr.output, exchange_rule(spec)), label
