"""Brute-force enumerators and the word bijection for Callan permutations

A Callan permutation of size (n, k) arranges the left values L1..Ln and
the right values R1..Rk so that every maximal run of one color is
increasing. Optional sentinels L0 (first) and R(k+1) (last) may be
attached.

>>> perm = BicoloredPermutation.parse("L1 R2 L2 R1")
>>> is_callan(perm), word_of(perm), restrict(perm).right
(True, (0, 1), (2, 1))
>>> print(merge((2, 1), (0, 1)))
L1 R2 L2 R1
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, NewType

from toolz.curried import groupby, pipe
from toolz.curried import filter as filter_
from toolz.curried import map as map_

from .exact import ExactInt, binomial, ordered_partition_count
from .func import fullmatch, get_config


LOGGER = logging.getLogger(__name__)

# a permutation of [m] in one-line notation, 1-indexed values
Permutation = NewType("Permutation", tuple[int, ...])

# w_i is the number of right values preceding the left value i
Word = NewType("Word", tuple[int, ...])


class EnumerationBoundError(RuntimeError):
    """An enumeration was refused because it exceeds its bound"""


class InvalidWordError(ValueError):
    """A word misses a descent value of the right permutation"""


class Color(str, Enum):
    """Left values print as L, right values as R"""

    LEFT = "L"
    RIGHT = "R"


class Entry(NamedTuple):
    """A colored value; entries sort left before right, then by value"""

    color: Color
    value: int

    def __str__(self):
        return f"{self.color.value}{self.value}"


class DescentData(NamedTuple):
    """Descent positions (1-indexed) and the number of ascending runs"""

    descents: tuple[int, ...]
    runs: int


class Restriction(NamedTuple):
    """The values of each color in order of appearance"""

    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class BicoloredPermutation:
    """A sequence of the left values 1..n and right values 1..k

    The sentinels L0 and R(k+1) are allowed in addition.

    >>> BicoloredPermutation.parse("L1 R1 L1")
    Traceback (most recent call last):
    ...
    ValueError: left values [1, 1] are not 1..2
    """

    entries: tuple[Entry, ...]
    n: int
    k: int

    def __post_init__(self):
        values = lambda color: pipe(
            self.entries,
            filter_(lambda x: x.color is color),
            map_(lambda x: x.value),
            sorted,
        )
        left, right = values(Color.LEFT), values(Color.RIGHT)
        if left not in (list(range(1, self.n + 1)), list(range(self.n + 1))):
            raise ValueError(f"left values {left} are not 1..{self.n}")
        if right not in (list(range(1, self.k + 1)), list(range(1, self.k + 2))):
            raise ValueError(f"right values {right} are not 1..{self.k}")

    @classmethod
    def parse(cls, text, n=None, k=None):
        """Read the `L1 R2 L2 R1` text form

        A leading L0 marks the sentinel form, whose trailing right value
        R(k+1) is not counted in k.

        Args:
          text: whitespace separated colored values
          n: number of left values (default: non-sentinel left count)
          k: number of right values (default: non-sentinel right count)

        Returns:
          the BicoloredPermutation

        >>> BicoloredPermutation.parse("L0 R1 L1").n
        1
        >>> perm = BicoloredPermutation.parse("L0 R1 L1 R2")
        >>> perm.n, perm.k
        (1, 1)
        """

        def entry(token):
            match = fullmatch(r"([LR])(\d+)", token)
            if match is None:
                raise ValueError(f"{token} is not a colored value")
            return Entry(Color(match.group(1)), int(match.group(2)))

        entries = tuple(map(entry, text.split()))
        count = lambda color: sum(
            1 for x in entries if x.color is color and x.value > 0
        )
        sentinel = (
            len(entries) > 1
            and entries[0] == Entry(Color.LEFT, 0)
            and entries[-1] == Entry(Color.RIGHT, count(Color.RIGHT))
        )
        return cls(
            entries,
            count(Color.LEFT) if n is None else n,
            count(Color.RIGHT) - int(sentinel) if k is None else k,
        )

    def __str__(self):
        return " ".join(map(str, self.entries))

    def __len__(self):
        return len(self.entries)

    def with_sentinels(self):
        """Attach L0 in front and R(k+1) at the end

        >>> print(BicoloredPermutation.parse("R1 L1").with_sentinels())
        L0 R1 L1 R2
        """
        return BicoloredPermutation(
            (Entry(Color.LEFT, 0),)
            + self.entries
            + (Entry(Color.RIGHT, self.k + 1),),
            self.n,
            self.k,
        )

    def blocks(self):
        """Maximal runs of a single color

        >>> [len(x) for x in BicoloredPermutation.parse("L1 L2 R1 L3").blocks()]
        [2, 1, 1]
        """
        return [
            tuple(block)
            for _, block in itertools.groupby(self.entries, key=lambda x: x.color)
        ]


def check_bound(name, size, bound=None):
    """Refuse an enumeration larger than its bound

    Args:
      name: the bound's key in the `bounds` configuration section
      size: the requested size
      bound: explicit bound overriding the configuration

    >>> check_bound("callan_max_size", 11)
    Traceback (most recent call last):
    ...
    polybern.oracles.EnumerationBoundError: size 11 exceeds the enumeration bound callan_max_size=10
    """  # pylint: disable=line-too-long # noqa: E501
    limit = getattr(get_config().bounds, name) if bound is None else bound
    if size > limit:
        LOGGER.debug("refused %s of size %d", name, size)
        raise EnumerationBoundError(
            f"size {size} exceeds the enumeration bound {name}={limit}"
        )


def descent_set(perm):
    """Descent positions and ascending runs of a permutation

    Args:
      perm: sequence of distinct integers

    Returns:
      DescentData

    >>> descent_set((3, 6, 1, 4, 8, 7, 9, 2, 5))
    DescentData(descents=(2, 5, 7), runs=4)
    >>> descent_set((1, 2, 3, 4, 5))
    DescentData(descents=(), runs=1)
    >>> descent_set(())
    DescentData(descents=(), runs=0)
    """
    descents = tuple(
        i for i, (a, b) in enumerate(itertools.pairwise(perm), start=1) if a > b
    )
    return DescentData(descents, len(descents) + 1 if len(perm) else 0)


def is_callan(perm):
    """Every maximal single-color run is increasing

    >>> is_callan(BicoloredPermutation.parse("L1 L2 R1 R2"))
    True
    >>> is_callan(BicoloredPermutation.parse("L2 L1 R1 R2"))
    False
    >>> is_callan(BicoloredPermutation.parse("R1"))
    True
    """
    return all(
        a.value < b.value
        for block in perm.blocks()
        for a, b in itertools.pairwise(block)
    )


def colored_values(n, k):
    """The entries L1..Ln, R1..Rk in lexicographic order"""
    return tuple(Entry(Color.LEFT, i) for i in range(1, n + 1)) + tuple(
        Entry(Color.RIGHT, i) for i in range(1, k + 1)
    )


def bicolored_permutations(n, k, bound=None):
    """All (n + k)! arrangements of the colored values

    Args:
      n: number of left values
      k: number of right values
      bound: largest n + k allowed (default from configuration)

    Returns:
      iterator of BicoloredPermutations

    >>> len(list(bicolored_permutations(1, 2)))
    6
    """
    check_bound("permutation_max_size", n + k, bound)
    return pipe(
        itertools.permutations(colored_values(n, k)),
        map_(lambda x: BicoloredPermutation(x, n, k)),
    )


def callan_permutations(n, k, bound=None):
    """All Callan permutations of size (n, k) in lexicographic order

    Depth first over the colored values, never appending a value
    smaller than the previous value of the same color.

    Args:
      n: number of left values
      k: number of right values
      bound: largest n + k allowed (default from configuration)

    Returns:
      iterator of BicoloredPermutations

    >>> print(next(callan_permutations(2, 2)))
    L1 L2 R1 R2
    """
    check_bound("callan_max_size", n + k, bound)

    def extend(prefix, remaining):
        if not remaining:
            yield BicoloredPermutation(prefix, n, k)
            return
        for index, entry in enumerate(remaining):
            if prefix and prefix[-1].color is entry.color:
                if prefix[-1].value > entry.value:
                    continue
            yield from extend(
                prefix + (entry,), remaining[:index] + remaining[index + 1 :]
            )

    return extend((), colored_values(n, k))


def count_callan_bruteforce(n, k, bound=None):
    """Count the Callan permutations of size (n, k) by enumeration

    >>> count_callan_bruteforce(2, 2)
    14
    >>> count_callan_bruteforce(0, 3)
    1
    """
    return ExactInt(sum(1 for _ in callan_permutations(n, k, bound)))


def restrict(perm):
    """Split a bicolored permutation into its left and right values

    Sentinels are kept.

    >>> restrict(BicoloredPermutation.parse("L1 R1 L2 R2"))
    Restriction(left=(1, 2), right=(1, 2))
    """
    values = lambda color: tuple(x.value for x in perm.entries if x.color is color)
    return Restriction(values(Color.LEFT), values(Color.RIGHT))


def word_of(perm):
    """The word counting right values before each left value

    The sentinel L0 is skipped.

    >>> word_of(BicoloredPermutation.parse("L1 L2 R1 R2"))
    (0, 0)
    >>> word_of(BicoloredPermutation.parse("R1 R2 L1"))
    (2,)
    """
    seen = 0
    symbols = {}
    for entry in perm.entries:
        if entry.color is Color.RIGHT:
            seen += 1
        elif entry.value > 0:
            symbols[entry.value] = seen
    return Word(tuple(symbols[i] for i in range(1, perm.n + 1)))


def is_valid_word(word, pi_right):
    """A word is valid when it contains every descent position of pi_right

    >>> is_valid_word((1,), (2, 1)), is_valid_word((0,), (2, 1))
    (True, False)
    """
    return set(descent_set(pi_right).descents) <= set(word)


def count_valid_words_bruteforce(pi_right, n, bound=None):
    """Count the valid words of length n by enumerating {0..k}^n

    Args:
      pi_right: permutation of [k]
      n: word length
      bound: largest (k + 1)^n allowed (default from configuration)

    >>> count_valid_words_bruteforce((1, 2), 2)
    9
    >>> count_valid_words_bruteforce((2, 1), 2)
    5
    """
    k = len(pi_right)
    check_bound("word_max_count", (k + 1) ** n, bound)
    return ExactInt(
        sum(
            1
            for word in itertools.product(range(k + 1), repeat=n)
            if is_valid_word(word, pi_right)
        )
    )


def check_descents(d, k):
    """A right permutation of [k] has at most k - 1 descents"""
    if d < 0 or d > max(k - 1, 0):
        raise ValueError(f"{d} descents is impossible for a permutation of [{k}]")


def w_count_ie(d, n, k):
    """Valid words for a right permutation with d descents, by
    inclusion-exclusion over the missing descent values

    >>> w_count_ie(0, 2, 2), w_count_ie(1, 1, 2), w_count_ie(1, 2, 2)
    (9, 1, 5)
    """
    check_descents(d, k)
    return ExactInt(
        sum((-1) ** m * binomial(d, m) * (k + 1 - m) ** n for m in range(d + 1))
    )


def w_count_partition(d, n, k):
    """Valid words for a right permutation with d descents, from ordered
    partitions of the left values refined at the k + 1 - d free slots

    >>> w_count_partition(0, 1, 2), w_count_partition(1, 1, 2)
    (3, 1)
    >>> w_count_partition(1, 2, 2)
    5
    """
    check_descents(d, k)
    return ExactInt(
        sum(
            binomial(k + 1 - d, m) * ordered_partition_count(n, m + d)
            for m in range(k + 2 - d)
        )
    )


def merge(pi_right, word):
    """Build the Callan permutation with right restriction pi_right and
    word `word`

    The left values with symbol p form an increasing block placed after
    the p-th right value.

    Args:
      pi_right: permutation of [k]
      word: valid word over {0..k}

    Returns:
      the BicoloredPermutation

    >>> print(merge((1, 2), (0, 0)))
    L1 L2 R1 R2
    >>> print(merge((2, 1), (1,)))
    R2 L1 R1
    >>> merge((2, 1), (0,))
    Traceback (most recent call last):
    ...
    polybern.oracles.InvalidWordError: word (0,) misses the descent value 1 of (2, 1)
    """
    k, n = len(pi_right), len(word)
    if any(not 0 <= x <= k for x in word):
        raise ValueError(f"word {tuple(word)} has symbols outside 0..{k}")
    missing = sorted(set(descent_set(pi_right).descents) - set(word))
    if missing:
        raise InvalidWordError(
            f"word {tuple(word)} misses the descent value {missing[0]} "
            f"of {tuple(pi_right)}"
        )
    positions = groupby(lambda i: word[i - 1], range(1, n + 1))
    block = lambda p: tuple(Entry(Color.LEFT, i) for i in positions.get(p, []))
    entries = block(0) + tuple(
        entry
        for p, value in enumerate(pi_right, start=1)
        for entry in (Entry(Color.RIGHT, value),) + block(p)
    )
    return BicoloredPermutation(entries, n, k)


def count_by_runs(k, bound=None):
    """Histogram of the permutations of [k] by number of ascending runs

    >>> sorted(count_by_runs(3).items())
    [(1, 1), (2, 4), (3, 1)]
    >>> count_by_runs(0)
    Counter({0: 1})
    """
    check_bound("permutation_max_size", k, bound)
    return pipe(
        itertools.permutations(range(1, k + 1)),
        map_(lambda x: descent_set(x).runs),
        Counter,
    )


def ordered_partitions_bruteforce(k, r, bound=None):
    """Count the surjections [k] -> [r] by enumerating all maps

    >>> ordered_partitions_bruteforce(3, 2)
    6
    >>> ordered_partitions_bruteforce(0, 0)
    1
    """
    check_bound("word_max_count", r**k, bound)
    return ExactInt(
        sum(
            1
            for assignment in itertools.product(range(r), repeat=k)
            if len(set(assignment)) == r
        )
    )


def matrix_of(rows, k):
    """Expand row bit masks into a 0/1 matrix with k columns

    >>> matrix_of((1, 2), 2)
    ((1, 0), (0, 1))
    """
    return tuple(tuple((row >> col) & 1 for col in range(k)) for row in rows)


def has_lonesum_pattern(matrix):
    """Whether two rows and two columns select [[1,0],[0,1]] or [[0,1],[1,0]]

    >>> has_lonesum_pattern(((1, 0), (0, 1)))
    True
    >>> has_lonesum_pattern(((1, 1), (0, 1)))
    False
    """
    width = len(matrix[0]) if matrix else 0
    return any(
        (matrix[r][a], matrix[r][b], matrix[s][a], matrix[s][b])
        in ((1, 0, 0, 1), (0, 1, 1, 0))
        for r, s in itertools.combinations(range(len(matrix)), 2)
        for a, b in itertools.combinations(range(width), 2)
    )


def is_lonesum(rows):
    """Row masks avoid both 2x2 permutation patterns

    Two rows contain a pattern exactly when neither row's set of ones
    contains the other's, so the distinct rows must form a chain.

    >>> is_lonesum((1, 3, 0)), is_lonesum((1, 2))
    (True, False)
    """
    chain = sorted(set(rows), key=int.bit_count)
    return all(a & b == a for a, b in itertools.pairwise(chain))


def lonesum_count_bruteforce(n, k, bound=None):
    """Count the n x k lonesum matrices by enumerating all 2^(nk) matrices

    >>> lonesum_count_bruteforce(2, 2)
    14
    >>> lonesum_count_bruteforce(1, 3)
    8
    >>> lonesum_count_bruteforce(0, 4)
    1
    """
    check_bound("lonesum_max_cells", n * k, bound)
    return ExactInt(
        sum(
            1
            for rows in itertools.product(range(2**k), repeat=n)
            if is_lonesum(rows)
        )
    )
