"""Seven exact routes to the poly-Bernoulli numbers with negative
indices, B_{n,k} = B_n^{(-k)}, and a dispatcher choosing between them.

The Eulerian-number routes (`thm4` to `thm8`) are stated for n, k > 0
only. `pb_value` answers the border cells n = 0 or k = 0 with the basic
formula and records that it did so.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from toolz.curried import pipe
from toolz.curried import map as map_

from .exact import (
    ExactInt,
    binomial,
    eulerian,
    factorial,
    ordered_partition_count,
    stirling2,
)


LOGGER = logging.getLogger(__name__)


class FormulaId(str, Enum):
    """The computation routes for B_{n,k}"""

    BASIC = "basic"
    INCLUSION_EXCLUSION = "ie"
    THM4 = "thm4"
    THM5 = "thm5"
    THM6 = "thm6"
    THM7 = "thm7"
    THM8 = "thm8"


class FormulaDomainError(ValueError):
    """An Eulerian-number route was asked for n = 0 or k = 0"""


@dataclass(frozen=True)
class PolyBernoulliQuery:
    """A cell (n, k) of the poly-Bernoulli table

    >>> PolyBernoulliQuery(3, -1)
    Traceback (most recent call last):
    ...
    ValueError: (3, -1) is not a valid query, n and k must be non-negative
    """

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError(
                f"({self.n}, {self.k}) is not a valid query, "
                "n and k must be non-negative"
            )


@dataclass(frozen=True)
class Evaluation:
    """A value of B_{n,k} with the route that produced it"""

    query: PolyBernoulliQuery
    formula: FormulaId
    used: FormulaId
    value: ExactInt

    @property
    def fallback(self):
        """Whether the requested formula was replaced by the basic one"""
        return self.used is not self.formula


def require_positive(n, k, formula):
    """Reject the border cells for the Eulerian-number routes

    >>> require_positive(0, 2, FormulaId.THM5)
    Traceback (most recent call last):
    ...
    polybern.formulas.FormulaDomainError: thm5 is stated for n, k > 0, got (0, 2)
    """
    if n < 1 or k < 1:
        raise FormulaDomainError(
            f"{formula.value} is stated for n, k > 0, got ({n}, {k})"
        )


def pb_basic(n, k):
    """Basic formula, sum over m of (m!)^2 S(n+1, m+1) S(k+1, m+1)

    Args:
      n: row index
      k: magnitude of the negative index

    Returns:
      B_{n,k}

    >>> pb_basic(2, 2)
    14
    >>> pb_basic(0, 5)
    1
    >>> pb_basic(4, 3)
    1066
    """
    return ExactInt(
        sum(
            factorial(m) ** 2 * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1)
            for m in range(min(n, k) + 1)
        )
    )


def pb_inclusion_exclusion(n, k):
    """Inclusion-exclusion formula

    Sum over m = 0..n of (-1)^(n+m) m! S(n, m) (m+1)^k.

    >>> pb_inclusion_exclusion(2, 2)
    14
    >>> pb_inclusion_exclusion(1, 3)
    8
    >>> pb_inclusion_exclusion(0, 0)
    1
    """
    return ExactInt(
        sum(
            (-1) ** (n + m) * ordered_partition_count(n, m) * (m + 1) ** k
            for m in range(n + 1)
        )
    )


def pb_thm4(n, k):
    """Double Eulerian formula over the block endings of both restrictions

    Sum over m, i, j of <n,i> <k,j> C(n+1-i, m+1-i) C(k+1-j, m+1-j). The
    sums over i and j are independent for fixed m and are evaluated
    separately.

    >>> pb_thm4(1, 1)
    2
    >>> pb_thm4(5, 4)
    41506
    """
    require_positive(n, k, FormulaId.THM4)
    endings = lambda size, m: sum(
        eulerian(size, i) * binomial(size + 1 - i, m + 1 - i)
        for i in range(size + 1)
    )
    return ExactInt(sum(endings(n, m) * endings(k, m) for m in range(min(n, k) + 1)))


def thm5_inner(n, k, j):
    """Valid words for a right permutation with j - 1 descents, by
    refining ordered partitions

    Sum over m = 0..k+2-j of C(k+2-j, m) (m+j-1)! S(n, m+j-1), j >= 1.

    >>> thm5_inner(2, 2, 2)
    5
    """
    return ExactInt(
        sum(
            binomial(k + 2 - j, m) * ordered_partition_count(n, m + j - 1)
            for m in range(k + 3 - j)
        )
    )


def thm6_inner(n, k, j):
    """Valid words for a right permutation with j - 1 descents, by
    inclusion-exclusion

    Sum over m = 0..j-1 of (-1)^m C(j-1, m) (k+1-m)^n.

    >>> thm6_inner(2, 2, 2)
    5
    """
    return ExactInt(
        sum((-1) ** m * binomial(j - 1, m) * (k + 1 - m) ** n for m in range(j))
    )


def thm7_inner(n, k, j):
    """Valid words for a right permutation with k - j descents, by
    refining ordered partitions

    >>> thm7_inner(2, 2, 1)
    5
    """
    return ExactInt(
        sum(
            binomial(j + 1, m) * ordered_partition_count(n, m + k - j)
            for m in range(j + 2)
        )
    )


def thm8_inner(n, k, j):
    """Valid words for a right permutation with k - j descents, by
    inclusion-exclusion

    >>> thm8_inner(2, 2, 1)
    5
    """
    return ExactInt(
        sum(
            (-1) ** m * binomial(k - j, m) * (k + 1 - m) ** n
            for m in range(k - j + 1)
        )
    )


def eulerian_weighted(inner, n, k, start=0):
    """Sum over j of <k, j> inner(n, k, j)"""
    return ExactInt(
        sum(eulerian(k, j) * inner(n, k, j) for j in range(start, k + 1))
    )


def pb_thm5(n, k):
    """Eulerian formula refining ordered partitions of the left values

    >>> pb_thm5(1, 2)
    4
    >>> pb_thm5(3, 3)
    230
    >>> pb_thm5(2, 5)
    454
    """
    require_positive(n, k, FormulaId.THM5)
    # <k, 0> vanishes for k > 0 and the j = 0 term has no meaning
    return eulerian_weighted(thm5_inner, n, k, start=1)


def pb_thm6(n, k):
    """Eulerian formula with inclusion-exclusion over missing descents

    >>> pb_thm6(1, 2)
    4
    >>> pb_thm6(4, 4)
    6906
    >>> pb_thm6(1, 1)
    2
    """
    require_positive(n, k, FormulaId.THM6)
    return eulerian_weighted(thm6_inner, n, k)


def pb_thm7(n, k):
    """Reversed Eulerian formula refining ordered partitions

    >>> pb_thm7(1, 2)
    4
    >>> pb_thm7(5, 5)
    329462
    >>> pb_thm7(2, 3)
    46
    """
    require_positive(n, k, FormulaId.THM7)
    return eulerian_weighted(thm7_inner, n, k)


def pb_thm8(n, k):
    """Reversed Eulerian formula with inclusion-exclusion

    >>> pb_thm8(1, 2)
    4
    >>> pb_thm8(2, 1)
    4
    >>> pb_thm8(4, 5)
    41506
    """
    require_positive(n, k, FormulaId.THM8)
    return eulerian_weighted(thm8_inner, n, k)


FORMULAS = {
    FormulaId.BASIC: pb_basic,
    FormulaId.INCLUSION_EXCLUSION: pb_inclusion_exclusion,
    FormulaId.THM4: pb_thm4,
    FormulaId.THM5: pb_thm5,
    FormulaId.THM6: pb_thm6,
    FormulaId.THM7: pb_thm7,
    FormulaId.THM8: pb_thm8,
}

BORDER_FALLBACK = (
    FormulaId.THM4,
    FormulaId.THM5,
    FormulaId.THM6,
    FormulaId.THM7,
    FormulaId.THM8,
)


def pb_value(query, formula=FormulaId.BASIC):
    """Evaluate B_{n,k} with the chosen formula

    Args:
      query: the PolyBernoulliQuery
      formula: a FormulaId

    Returns:
      an Evaluation; `fallback` is set when the border cells were
      answered with the basic formula

    >>> pb_value(PolyBernoulliQuery(3, 2)).value
    46
    >>> evaluation = pb_value(PolyBernoulliQuery(0, 0), FormulaId.THM6)
    >>> evaluation.value, evaluation.fallback
    (1, True)
    >>> pb_value(PolyBernoulliQuery(5, 1), FormulaId.THM8).value
    32
    """
    used = FormulaId(formula)
    if used in BORDER_FALLBACK and (query.n == 0 or query.k == 0):
        LOGGER.debug(
            "%s answered with basic for (%d, %d)", used.value, query.n, query.k
        )
        used = FormulaId.BASIC
    return Evaluation(
        query=query,
        formula=FormulaId(formula),
        used=used,
        value=FORMULAS[used](query.n, query.k),
    )


def pb_table(max_n, max_k, formula=FormulaId.BASIC):
    """The table of B_{n,k} for 0 <= n <= max_n, 0 <= k <= max_k

    Args:
      max_n: last row
      max_k: last column
      formula: a FormulaId

    Returns:
      list of rows of Evaluations, row-major by (n, k)

    >>> [[x.value for x in row] for row in pb_table(1, 3, FormulaId.THM7)]
    [[1, 1, 1, 1], [1, 2, 4, 8]]
    """
    return pipe(
        range(max_n + 1),
        map_(
            lambda n: [
                pb_value(PolyBernoulliQuery(n, k), formula) for k in range(max_k + 1)
            ]
        ),
        list,
    )
