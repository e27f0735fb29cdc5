"""Invariant suites comparing the formulas with each other, with Table 1
of the poly-Bernoulli numbers and with the brute-force oracles.

A suite is a stream of cases `(case id, function, args)`. Each function
returns an `(expected, actual)` pair. A case fails when the pair
differs or when the function raises.

>>> report = identities(3)
>>> report.ok, report.cases_run > 0
(True, True)
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, NamedTuple

from toolz.curried import groupby, pipe, valmap
from toolz.curried import filter as filter_
from toolz.curried import map as map_

from .exact import (
    binomial,
    eulerian,
    eulerian_explicit,
    eulerian_from_stirling,
    eulerian_row,
    factorial,
    ordered_partition_count,
    polylog_numerator,
    stirling2,
    stirling2_explicit,
)
from .formulas import (
    FORMULAS,
    FormulaId,
    PolyBernoulliQuery,
    pb_basic,
    pb_value,
    thm5_inner,
    thm6_inner,
    thm7_inner,
    thm8_inner,
)
from .oracles import (
    Color,
    bicolored_permutations,
    callan_permutations,
    count_by_runs,
    count_callan_bruteforce,
    count_valid_words_bruteforce,
    descent_set,
    is_callan,
    is_valid_word,
    lonesum_count_bruteforce,
    merge,
    ordered_partitions_bruteforce,
    restrict,
    w_count_ie,
    w_count_partition,
    word_of,
)


LOGGER = logging.getLogger(__name__)

TABLE_ONE = (
    (1, 1, 1, 1, 1, 1),
    (1, 2, 4, 8, 16, 32),
    (1, 4, 14, 46, 146, 454),
    (1, 8, 46, 230, 1066, 4718),
    (1, 16, 146, 1066, 6906, 41506),
    (1, 32, 454, 4718, 41506, 329462),
)


class Failure(NamedTuple):
    """A failed case"""

    case: str
    expected: Any
    actual: Any

    def __str__(self):
        return f"{self.case}: expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one suite"""

    suite: str
    cases_run: int
    failures: tuple[Failure, ...]

    @property
    def ok(self):  # pylint: disable=invalid-name
        """No case failed"""
        return len(self.failures) == 0


def run_cases(suite, cases):
    """Evaluate a stream of cases into a CheckReport

    Args:
      suite: the name of the suite
      cases: iterable of `(case id, function, args)`

    Returns:
      the CheckReport

    >>> report = run_cases(
    ...     "demo",
    ...     [("one", lambda: (1, 1), ()), ("two", lambda x: (2, x), (3,))],
    ... )
    >>> report.cases_run, [str(x) for x in report.failures]
    (2, ['two: expected 2, got 3'])
    >>> run_cases("demo", [("bad", lambda: int("x"), ())]).failures[0].case
    'bad'
    """
    LOGGER.debug("running suite %s", suite)
    failures = []
    cases_run = 0
    for case, func, args in cases:
        cases_run += 1
        try:
            expected, actual = func(*args)
        except (RuntimeError, ValueError) as error:
            failures.append(
                Failure(case, "a value", f"{type(error).__name__}: {error}")
            )
            continue
        if expected != actual:
            failures.append(Failure(case, expected, actual))
    LOGGER.debug(
        "suite %s ran %d cases with %d failures", suite, cases_run, len(failures)
    )
    return CheckReport(suite, cases_run, tuple(failures))


def table_one_cell(formula, n, k):
    """The formula's value against the tabulated corner"""
    return TABLE_ONE[n][k], pb_value(PolyBernoulliQuery(n, k), formula).value


def formula_agreement(formula, n, k):
    """A formula against the basic one"""
    return pb_basic(n, k), FORMULAS[formula](n, k)


def symmetry(n, k):
    """B_{n,k} against B_{k,n}"""
    return pb_basic(n, k), pb_basic(k, n)


def theorem_pair(first, second, n, k, j):
    """Two inner sums for the same descent class"""
    return first(n, k, j), second(n, k, j)


def row_sum(k):
    """k! against the Eulerian row sum"""
    return factorial(k), sum(eulerian_row(k))


def eulerian_symmetry(k, j):
    """<k, j> against <k, k + 1 - j>"""
    return eulerian(k, j), eulerian(k, k + 1 - j)


def partitions_from_eulerian(k, r):
    """Ordered partition count against the Eulerian expansion"""
    return ordered_partition_count(k, r), sum(
        eulerian(k, j) * binomial(k - j, r - j) for j in range(k + 1)
    )


def inversion(k, j):
    """The Eulerian table against its Stirling inversion"""
    return eulerian(k, j), eulerian_from_stirling(k, j)


def eulerian_memo(k, j):
    """The explicit Eulerian sum against the memo table"""
    return eulerian_explicit(k, j), eulerian(k, j)


def stirling2_memo(n, m):
    """The explicit Stirling sum against the memo table"""
    return stirling2_explicit(n, m), stirling2(n, m)


def runs_histogram(k):
    """The Eulerian row against permutations counted by ascending runs"""
    histogram = count_by_runs(k)
    return eulerian_row(k), tuple(histogram[j] for j in range(k + 1))


def polylog_series(k):
    """Eulerian row followed by the vanishing coefficient at degree k + 1"""
    return eulerian_row(k) + (0,), tuple(polylog_numerator(k)[: k + 2])


def surjections(k, r):
    """r! S(k, r) against enumerated surjections"""
    return ordered_partition_count(k, r), ordered_partitions_bruteforce(k, r)


def eulerian_cases():
    """Cases for the Eulerian and Stirling infrastructure"""
    for k in range(1, 10):
        yield f"row sum of eulerian({k}, .)", row_sum, (k,)
        for j in range(1, k + 1):
            yield f"eulerian symmetry ({k}, {j})", eulerian_symmetry, (k, j)
    for k in range(13):
        for r in range(k + 1):
            yield f"ordered partitions ({k}, {r})", partitions_from_eulerian, (k, r)
        for j in range(1, k + 1):
            yield f"eulerian_from_stirling({k}, {j})", inversion, (k, j)
        for j in range(k + 1):
            yield f"eulerian({k}, {j})", eulerian_memo, (k, j)
            yield f"stirling2({k}, {j})", stirling2_memo, (k, j)
    for k in range(8):
        yield f"runs histogram of [{k}]", runs_histogram, (k,)
    for k in range(9):
        yield f"polylog numerator ({k})", polylog_series, (k,)
    for k in range(7):
        for r in range(k + 1):
            yield f"surjections [{k}] -> [{r}]", surjections, (k, r)


def power_row(k):
    """2^k against B_{1,k}"""
    return 2**k, pb_basic(1, k)


def unit_column(n):
    """1 against B_{n,0}"""
    return 1, pb_basic(n, 0)


def non_negative(n, k):
    """B_{n,k} is non-negative"""
    return True, pb_basic(n, k) >= 0


def identity_cases(max_):
    """Cases relating the formulas to each other and to Table 1"""
    for formula in FormulaId:
        for n, k in itertools.product(range(6), repeat=2):
            yield f"table {formula.value}({n}, {k})", table_one_cell, (formula, n, k)
    for n, k in itertools.product(range(1, max_ + 1), repeat=2):
        for formula in FormulaId:
            if formula is not FormulaId.BASIC:
                yield f"{formula.value}({n}, {k})", formula_agreement, (formula, n, k)
    for n in range(max_ + 1):
        yield f"basic(1, {n})", power_row, (n,)
        yield f"basic({n}, 0)", unit_column, (n,)
        for k in range(max_ + 1):
            if n < k:
                yield f"symmetry ({n}, {k})", symmetry, (n, k)
            yield f"non-negative ({n}, {k})", non_negative, (n, k)
    for n, k in itertools.product(range(1, 7), repeat=2):
        for j in range(1, k + 1):
            yield f"thm5/thm6 inner ({n}, {k}, {j})", theorem_pair, (
                thm5_inner,
                thm6_inner,
                n,
                k,
                j,
            )
            yield f"thm7/thm8 inner ({n}, {k}, {j})", theorem_pair, (
                thm7_inner,
                thm8_inner,
                n,
                k,
                j,
            )
    yield from eulerian_cases()


def identities(max_=40):
    """Run the formula identities for 1 <= n, k <= max_

    Args:
      max_: the largest index of the agreement grid

    Returns:
      the CheckReport
    """
    return run_cases("identities", identity_cases(max_))


def callan_count(n, k):
    """B_{n,k} against enumerated Callan permutations"""
    return pb_basic(n, k), count_callan_bruteforce(n, k)


def callan_listing(n, k):
    """The pruned enumeration against filtering every arrangement"""
    return list(callan_permutations(n, k)), pipe(
        bicolored_permutations(n, k), filter_(is_callan), list
    )


def block_alternation(n, k):
    """With sentinels attached, blocks start Left and end Right"""
    colors = lambda perm: [block[0].color for block in perm.blocks()]
    return 0, pipe(
        callan_permutations(n, k),
        map_(lambda x: colors(x.with_sentinels())),
        filter_(lambda x: x[0] is not Color.LEFT or x[-1] is not Color.RIGHT),
        list,
        len,
    )


def lonesum_count(n, k):
    """B_{n,k} against enumerated lonesum matrices"""
    return pb_basic(n, k), lonesum_count_bruteforce(n, k)


def word_counts(pi_right, n):
    """Brute-force valid words against both closed forms"""
    k, descents = len(pi_right), len(descent_set(pi_right).descents)
    count = count_valid_words_bruteforce(pi_right, n)
    return (count, count), (
        w_count_ie(descents, n, k),
        w_count_partition(descents, n, k),
    )


def descent_classes(n, k):
    """Brute-force word counts grouped by the number of descents

    Each group must hold a single count.
    """
    counts = pipe(
        itertools.permutations(range(1, k + 1)),
        groupby(lambda x: len(descent_set(x).descents)),
        valmap(lambda x: {count_valid_words_bruteforce(p, n) for p in x}),
    )
    return {d: 1 for d in counts}, valmap(len, counts)


def bijection(n, k):
    """Pairs (right restriction, word) are distinct, valid and merge back"""
    perms = list(callan_permutations(n, k))
    pairs = [(restrict(p).right, word_of(p)) for p in perms]
    return (len(perms), True, perms), (
        len(set(pairs)),
        all(is_valid_word(word, right) for right, word in pairs),
        [merge(right, word) for right, word in pairs],
    )


def recount(n, k):
    """B_{n,k} against valid words summed over right permutations"""
    return pb_basic(n, k), sum(
        w_count_ie(len(descent_set(p).descents), n, k)
        for p in itertools.permutations(range(1, k + 1))
    )


def oracle_cases(max_sum, max_cells):
    """Cases comparing brute-force counts with the formulas"""
    for n in range(max_sum + 1):
        for k in range(max_sum + 1 - n):
            yield f"callan({n}, {k})", callan_count, (n, k)
    for n, k in itertools.product(range(4), repeat=2):
        if n + k <= min(max_sum, 6):
            yield f"callan listing ({n}, {k})", callan_listing, (n, k)
            yield f"block alternation ({n}, {k})", block_alternation, (n, k)
    for n, k in itertools.product(range(max_cells + 1), repeat=2):
        if n * k <= max_cells:
            yield f"lonesum({n}, {k})", lonesum_count, (n, k)
    for k, n in itertools.product(range(5), repeat=2):
        for pi_right in itertools.permutations(range(1, k + 1)):
            yield f"valid words {pi_right} n={n}", word_counts, (pi_right, n)
        yield f"descent classes ({n}, {k})", descent_classes, (n, k)
    for n, k in itertools.product(range(4), repeat=2):
        yield f"bijection ({n}, {k})", bijection, (n, k)
    for n, k in itertools.product(range(6), repeat=2):
        yield f"recount ({n}, {k})", recount, (n, k)


def oracles(max_sum=9, max_cells=16):
    """Run the brute-force oracles

    Args:
      max_sum: largest n + k for the Callan enumeration
      max_cells: largest n * k for the lonesum enumeration

    Returns:
      the CheckReport

    >>> oracles(3, 2).ok
    True
    """
    return run_cases("oracles", oracle_cases(max_sum, max_cells))


SUITES = {"identities": identities, "oracles": oracles}
