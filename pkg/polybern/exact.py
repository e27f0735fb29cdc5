"""Exact integer primitives and the memoized Stirling and Eulerian
triangles consumed by every formula.

All values are Python integers, so arithmetic never overflows or
rounds. Eulerian numbers follow the ascending-runs convention:
`eulerian(k, j)` counts permutations of `[k]` with `j` ascending runs
(`j - 1` descents).
"""

import logging
import math
from typing import NewType

import sympy
from toolz.curried import pipe, curry
from toolz.curried import map as map_

from .func import fullmatch


LOGGER = logging.getLogger(__name__)

# an arbitrary precision signed integer
ExactInt = NewType("ExactInt", int)

DECIMAL = r"0|[+-]?[1-9][0-9]*"


class MemoConflictError(RuntimeError):
    """A memo cell was written twice with different values"""


class MemoTable:
    """Lazily filled two-index triangle of exact integers

    Rows are filled in order on demand. `row_rule(table, row)` returns
    the values of columns `0..row` and may read earlier rows from the
    table. Cells outside the triangle read as zero.

    A present cell is never overwritten. Concurrent fills of the same
    row are allowed since they write identical values.

    Args:
      name: name used in log messages
      row_rule: function building a row from the earlier rows

    >>> pascal = MemoTable(
    ...     "pascal",
    ...     lambda t, n: [t[n - 1, m - 1] + t[n - 1, m] for m in range(n + 1)]
    ...     if n > 0 else [1],
    ... )
    >>> pascal[4, 2]
    6
    >>> pascal[4, 7]
    0
    >>> len(pascal)
    15

    """

    def __init__(self, name, row_rule):
        self.name = name
        self.row_rule = row_rule
        self.entries = {}
        self.rows_filled = 0

    def __getitem__(self, cell):
        row, col = cell
        if row < 0:
            raise ValueError(f"row {row} of {self.name} is negative")
        if col < 0 or col > row:
            return 0
        if cell not in self.entries:
            self.fill(row)
        return self.entries[cell]

    def __contains__(self, cell):
        return cell in self.entries

    def __len__(self):
        return len(self.entries)

    def fill(self, row):
        """Fill every row up to and including `row`

        Args:
          row: the last row to fill
        """
        for row_ in range(self.rows_filled, row + 1):
            for col, value in enumerate(self.row_rule(self, row_)):
                self.entries.setdefault((row_, col), value)
            self.rows_filled = max(self.rows_filled, row_ + 1)
            LOGGER.debug("filled row %d of %s", row_, self.name)

    def store(self, cell, value):
        """Write a single cell

        Writing the value already present is a no-op.

        Args:
          cell: (row, col) pair
          value: the value to store

        >>> table = MemoTable("t", lambda t, n: [0] * (n + 1))
        >>> table.store((2, 1), 5)
        >>> table.store((2, 1), 5)
        >>> table[2, 1]
        5
        >>> table.store((2, 1), 6)
        Traceback (most recent call last):
        ...
        polybern.exact.MemoConflictError: cell (2, 1) of t holds 5, not 6
        """
        present = self.entries.setdefault(cell, value)
        if present != value:
            raise MemoConflictError(
                f"cell {cell} of {self.name} holds {present}, not {value}"
            )

    def clear(self):
        """Drop all the memoized rows"""
        self.entries = {}
        self.rows_filled = 0


def stirling2_rule(table, n):
    """Row `n` of the Stirling triangle from row `n - 1`

    S(n, m) = m S(n - 1, m) + S(n - 1, m - 1)
    """
    if n == 0:
        return [1]
    return [m * table[n - 1, m] + table[n - 1, m - 1] for m in range(n + 1)]


def eulerian_rule(table, k):
    """Row `k` of the Eulerian triangle (runs convention) from row `k - 1`

    <k, j> = j <k - 1, j> + (k - j + 1) <k - 1, j - 1>
    """
    if k == 0:
        return [1]
    return [
        j * table[k - 1, j] + (k - j + 1) * table[k - 1, j - 1] for j in range(k + 1)
    ]


STIRLING2 = MemoTable("stirling2", stirling2_rule)

EULERIAN = MemoTable("eulerian", eulerian_rule)


def reset_tables():
    """Drop the memoized Stirling and Eulerian rows"""
    STIRLING2.clear()
    EULERIAN.clear()


def to_decimal(value):
    """Encode an exact integer as a decimal string

    >>> to_decimal(-120)
    '-120'
    >>> to_decimal(2 ** 70)
    '1180591620717411303424'
    """
    return str(int(value))


def from_decimal(text):
    """Decode an optionally signed decimal string without leading zeros,
    zero being unsigned

    >>> from_decimal('329462')
    329462
    >>> from_decimal('-7')
    -7
    >>> from_decimal('007')
    Traceback (most recent call last):
    ...
    ValueError: '007' is not a decimal integer
    """
    if fullmatch(DECIMAL, text) is None:
        raise ValueError(f"{text!r} is not a decimal integer")
    return ExactInt(int(text))


def factorial(n):
    """n! exactly

    >>> factorial(0)
    1
    >>> factorial(5)
    120
    """
    return ExactInt(math.factorial(n))


def binomial(n, r):
    """Binomial coefficient C(n, r), zero when r < 0 or r > n

    >>> binomial(5, 2)
    10
    >>> binomial(3, 5)
    0
    >>> binomial(3, -1)
    0
    """
    if r < 0 or r > n:
        return ExactInt(0)
    return ExactInt(math.comb(n, r))


def stirling2(n, m):
    """Stirling number of the second kind from the memo table

    >>> stirling2(0, 0)
    1
    >>> stirling2(4, 2)
    7
    >>> stirling2(2, 3)
    0
    """
    return ExactInt(STIRLING2[n, m])


def eulerian(k, j):
    """Eulerian number <k, j>: permutations of [k] with j ascending runs

    Zero for j < 0 or j > k; `eulerian(0, 0)` is 1.

    >>> eulerian(3, 2)
    4
    >>> eulerian(2, 0)
    0
    >>> eulerian(0, 0)
    1
    """
    return ExactInt(EULERIAN[k, j])


def stirling2_explicit(n, m):
    """Stirling number of the second kind from the alternating sum

    Not memoized.

    >>> stirling2_explicit(4, 2)
    7
    >>> stirling2_explicit(0, 0)
    1
    """
    if m < 0 or m > n:
        return ExactInt(0)
    total = sum((-1) ** i * math.comb(m, i) * (m - i) ** n for i in range(m + 1))
    return ExactInt(total // math.factorial(m))


def eulerian_explicit(k, j):
    """Eulerian number from the sum over i of (-1)^i C(k+1, i) (j-i)^k

    Not memoized. `0 ** 0` is 1 so `eulerian_explicit(0, 0)` is 1.

    >>> eulerian_explicit(3, 2)
    4
    >>> eulerian_explicit(0, 0)
    1
    """
    if j < 0 or j > k:
        return ExactInt(0)
    return ExactInt(
        sum((-1) ** i * math.comb(k + 1, i) * (j - i) ** k for i in range(j + 1))
    )


def ordered_partition_count(k, r):
    """Number of ordered partitions of [k] into r blocks, r! S(k, r)

    >>> ordered_partition_count(3, 2)
    6
    >>> ordered_partition_count(2, 0)
    0
    """
    return ExactInt(factorial(r) * stirling2(k, r))


def eulerian_from_stirling(k, j):
    """Eulerian number from ordered partition counts

    Sum over r = 1..j of (-1)^(j-r) r! S(k, r) C(k-r, j-r).

    Args:
      k: size of the permutations, at least 1
      j: number of ascending runs, 1 <= j <= k

    >>> eulerian_from_stirling(3, 2)
    4
    >>> eulerian_from_stirling(4, 1)
    1
    """
    if not 1 <= j <= k:
        raise ValueError(f"eulerian_from_stirling needs 1 <= j <= k, got ({k}, {j})")
    return ExactInt(
        sum(
            (-1) ** (j - r) * ordered_partition_count(k, r) * binomial(k - r, j - r)
            for r in range(1, j + 1)
        )
    )


@curry
def row_of(func, row):
    """Columns 0..row of a two index function as a tuple

    >>> row_of(eulerian, 4)
    (0, 1, 11, 11, 1)
    """
    return pipe(range(row + 1), map_(lambda col: func(row, col)), tuple)


eulerian_row = row_of(eulerian)

stirling2_row = row_of(stirling2)


def polylog_numerator(k, degree=None):
    """Coefficients of (1 - x)^(k+1) times the series sum of i^k x^i

    The series is truncated at `degree` (default `k + 2`). Coefficients
    at degrees `0..k` are the Eulerian numbers `<k, j>` and the one at
    `k + 1` vanishes; higher degrees are truncation artifacts.

    Args:
      k: the (negative) polylogarithm order
      degree: last power of x kept in the series

    Returns:
      list of integer coefficients starting at degree 0

    >>> polylog_numerator(2)[:4]
    [0, 1, 1, 0]
    >>> polylog_numerator(0)
    [1, 0, 0, -1]
    """
    degree = k + 2 if degree is None else degree
    x = sympy.Symbol("x")
    series = sympy.Poly(sympy.Add(*[i**k * x**i for i in range(degree + 1)]), x)
    product = sympy.Poly((1 - x) ** (k + 1), x) * series
    return pipe(product.all_coeffs(), reversed, map_(int), list)
