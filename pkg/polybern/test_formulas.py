"""Test the poly-Bernoulli formulas
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from .formulas import (
    BORDER_FALLBACK,
    FORMULAS,
    FormulaDomainError,
    FormulaId,
    PolyBernoulliQuery,
    pb_basic,
    pb_table,
    pb_value,
    thm5_inner,
    thm6_inner,
    thm7_inner,
    thm8_inner,
)
from .oracles import w_count_ie, w_count_partition


indices = st.integers(min_value=1, max_value=40)


@pytest.mark.parametrize("formula", list(FormulaId))
def test_table_one(formula, table_one):
    """Every formula reproduces the 6 x 6 corner of the table"""
    assert [[x.value for x in row] for row in pb_table(5, 5, formula)] == [
        list(row) for row in table_one
    ]


@pytest.mark.parametrize("formula", list(FormulaId))
def test_agreement_small(formula):
    """All formulas agree with the basic one for 1 <= n, k <= 12"""
    for n, k in itertools.product(range(1, 13), repeat=2):
        assert FORMULAS[formula](n, k) == pb_basic(n, k)


@settings(max_examples=30, deadline=None)
@given(indices, indices)
def test_agreement_random(n, k):
    """All formulas agree on random cells up to 40"""
    values = {FORMULAS[x](n, k) for x in FormulaId}
    assert values == {pb_basic(n, k)}


def test_corner_values():
    """Values well beyond 64 bits stay exact"""
    assert pb_basic(40, 40) > 2**64
    assert pb_basic(40, 40) % 2 == 0
    assert FORMULAS[FormulaId.THM4](40, 40) == pb_basic(40, 40)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=40))
def test_symmetry(n, k):
    """B_{n,k} = B_{k,n} and is non-negative"""
    assert pb_basic(n, k) == pb_basic(k, n)
    assert pb_basic(n, k) >= 0


@pytest.mark.parametrize("n", range(41))
def test_row_and_column(n):
    """B_{1,k} = 2^k and B_{n,0} = 1"""
    assert pb_basic(1, n) == 2**n
    assert pb_basic(n, 0) == 1


@pytest.mark.parametrize("formula", BORDER_FALLBACK)
@pytest.mark.parametrize("n, k", [(0, 0), (0, 3), (4, 0)])
def test_border_fallback(formula, n, k):
    """Eulerian routes refuse the border and pb_value falls back"""
    with pytest.raises(FormulaDomainError, match="is stated for n, k > 0"):
        FORMULAS[formula](n, k)
    evaluation = pb_value(PolyBernoulliQuery(n, k), formula)
    assert evaluation.value == 1
    assert evaluation.fallback
    assert evaluation.used is FormulaId.BASIC
    assert evaluation.formula is formula


@pytest.mark.parametrize("formula", [FormulaId.BASIC, FormulaId.INCLUSION_EXCLUSION])
def test_border_direct(formula):
    """The basic and inclusion-exclusion formulas cover the border"""
    evaluation = pb_value(PolyBernoulliQuery(0, 7), formula)
    assert (evaluation.value, evaluation.fallback) == (1, False)


def test_pb_value_by_name():
    """Formulas may be named by their string value"""
    evaluation = pb_value(PolyBernoulliQuery(3, 3), "thm8")
    assert evaluation.formula is FormulaId.THM8
    assert evaluation.value == 230


def test_unknown_formula():
    """Unknown formula names are refused"""
    with pytest.raises(ValueError):
        pb_value(PolyBernoulliQuery(1, 1), "thm9")


def test_negative_query():
    """Negative indices are malformed"""
    with pytest.raises(ValueError, match="must be non-negative"):
        PolyBernoulliQuery(-1, 2)


@pytest.mark.parametrize("n, k", itertools.product(range(1, 7), repeat=2))
def test_theorem_pairs(n, k):
    """The paired inner sums both count valid words"""
    for j in range(1, k + 1):
        assert thm5_inner(n, k, j) == thm6_inner(n, k, j)
        assert thm5_inner(n, k, j) == w_count_partition(j - 1, n, k)
        assert thm6_inner(n, k, j) == w_count_ie(j - 1, n, k)
        assert thm7_inner(n, k, j) == thm8_inner(n, k, j)
        assert thm8_inner(n, k, j) == w_count_ie(k - j, n, k)


def test_table_shape():
    """pb_table is row-major with max_n + 1 rows of max_k + 1 cells"""
    rows = pb_table(2, 4, FormulaId.THM5)
    assert [len(x) for x in rows] == [5, 5, 5]
    assert [(x.query.n, x.query.k) for x in rows[1]] == [(1, k) for k in range(5)]
    assert [x.fallback for x in rows[0]] == [True] * 5
    assert [x.fallback for x in rows[2]] == [True, False, False, False, False]
