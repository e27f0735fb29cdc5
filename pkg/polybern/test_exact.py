"""Test the exact integer primitives and memo tables
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling

from .exact import (
    EULERIAN,
    STIRLING2,
    MemoConflictError,
    MemoTable,
    binomial,
    eulerian,
    eulerian_explicit,
    eulerian_from_stirling,
    eulerian_row,
    eulerian_rule,
    from_decimal,
    ordered_partition_count,
    polylog_numerator,
    stirling2,
    stirling2_explicit,
    stirling2_row,
    to_decimal,
)


@pytest.mark.parametrize(
    "k, row",
    [
        (0, (1,)),
        (1, (0, 1)),
        (3, (0, 1, 4, 1)),
        (5, (0, 1, 26, 66, 26, 1)),
    ],
)
def test_eulerian_rows(k, row):
    """Eulerian rows in the ascending-runs convention"""
    assert eulerian_row(k) == row


def test_eulerian_out_of_range():
    """Cells outside the triangle are zero, negative rows are refused"""
    assert eulerian(4, 5) == 0
    assert eulerian(4, -1) == 0
    assert binomial(2, 3) == 0
    with pytest.raises(ValueError, match="row -1 of eulerian is negative"):
        eulerian(-1, 0)


def test_stirling2_rows():
    """Stirling rows"""
    assert stirling2_row(4) == (0, 1, 7, 6, 1)
    assert stirling2_row(0) == (1,)


@settings(deadline=None)
@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=30))
def test_stirling2_against_sympy(n, m):
    """The memo table matches sympy's Stirling numbers"""
    assert stirling2(n, m) == stirling(n, m, kind=2)


@pytest.mark.parametrize("k", range(10))
def test_eulerian_row_sums(k):
    """Each Eulerian row sums to k!"""
    assert sum(eulerian_row(k)) == math.factorial(k)


@given(st.integers(min_value=1, max_value=25), st.data())
def test_eulerian_symmetry(k, data):
    """<k, j> = <k, k + 1 - j>"""
    j = data.draw(st.integers(min_value=1, max_value=k))
    assert eulerian(k, j) == eulerian(k, k + 1 - j)


@pytest.mark.parametrize("k", range(13))
def test_memo_against_explicit(k):
    """Memoized and explicit evaluations agree"""
    assert eulerian_row(k) == tuple(eulerian_explicit(k, j) for j in range(k + 1))
    assert stirling2_row(k) == tuple(stirling2_explicit(k, m) for m in range(k + 1))


@pytest.mark.parametrize("k", range(1, 13))
def test_eulerian_from_stirling(k):
    """Inverting the ordered partition counts gives the Eulerian row"""
    assert tuple(eulerian_from_stirling(k, j) for j in range(1, k + 1)) == (
        eulerian_row(k)[1:]
    )


def test_eulerian_from_stirling_domain():
    """j must lie in 1..k"""
    with pytest.raises(ValueError, match=r"needs 1 <= j <= k, got \(3, 0\)"):
        eulerian_from_stirling(3, 0)


@pytest.mark.parametrize("k", range(13))
def test_ordered_partitions_from_eulerian(k):
    """r! S(k, r) expands over the Eulerian row"""
    for r in range(k + 1):
        assert ordered_partition_count(k, r) == sum(
            eulerian(k, j) * binomial(k - j, r - j) for j in range(k + 1)
        )


@pytest.mark.parametrize("k", range(9))
def test_polylog_numerator(k):
    """The truncated series product starts with the Eulerian row then a zero"""
    coefficients = polylog_numerator(k)
    assert tuple(coefficients[: k + 1]) == eulerian_row(k)
    assert coefficients[k + 1] == 0


def test_polylog_numerator_degree():
    """A longer truncation keeps the leading coefficients"""
    assert polylog_numerator(3, degree=10)[:5] == [0, 1, 4, 1, 0]


@given(st.integers())
def test_decimal_codec(value):
    """Decimal strings carry arbitrary integers"""
    assert from_decimal(to_decimal(value)) == value


@pytest.mark.parametrize(
    "text", ["", "1.0", "+", "1e3", " 12", "00", "-0", "+0", "-012"]
)
def test_from_decimal_rejects(text):
    """Malformed decimal strings are refused"""
    with pytest.raises(ValueError, match="is not a decimal integer"):
        from_decimal(text)


def test_memo_table_keeps_present_cells():
    """Filling a row never overwrites a stored cell"""
    table = MemoTable("eulerian", eulerian_rule)
    table.store((3, 2), 5)
    assert table[3, 1] == 1
    assert table[3, 2] == 5
    assert table[4, 2] == 2 * table[3, 2] + 3 * table[3, 1]
    with pytest.raises(MemoConflictError, match=r"cell \(3, 2\) of eulerian"):
        table.store((3, 2), 4)


def test_reset_tables(fresh_tables):
    """reset_tables empties both memo tables"""
    assert len(STIRLING2) == 0 and len(EULERIAN) == 0
    assert eulerian(6, 3) == 302
    assert (6, 3) in EULERIAN
    fresh_tables.reset_tables()
    assert (6, 3) not in EULERIAN


def test_corrupt_eulerian(corrupt_eulerian):
    """The corrupted table is the one the module reads"""
    assert eulerian(3, 2) == 5
    assert eulerian_explicit(3, 2) == 4
    assert corrupt_eulerian.name == "eulerian"
