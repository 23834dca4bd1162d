"""Columns, the admissibility criterion, and the splitting construction.

A column is a strictly increasing word.  It is admissible when, for every
m, at most m of its letters x satisfy x <= m or x >= mbar.  Splitting
pairs each value occurring both barred and unbarred with a fresh smaller
witness value; the construction succeeds exactly on admissible columns,
which the test suite verifies as an equivalence of two independent checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Union

from .alphabet import Letter, Word, all_letters


class InadmissibleColumnError(ValueError):
    """An operation that needs an admissible column received a non-admissible one."""


class Column(Word):
    """A strictly increasing word, read top to bottom."""

    __slots__ = ()

    def __init__(self, letters: Iterable[Letter], n: int):
        super().__init__(letters, n)
        for a, b in zip(self.letters, self.letters[1:]):
            if not a < b:
                raise ValueError(f"column letters must strictly increase, got {a} before {b}")

    @property
    def height(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        return f"Column({str(self)!r}, n={self.n})"


def is_column_word(w: Word) -> bool:
    """Whether w is strictly increasing."""
    return all(a < b for a, b in zip(w.letters, w.letters[1:]))


def admissibility_counts(w: Word) -> tuple[int, ...]:
    """For m = 1..n, the number of letters x with x <= m or x >= mbar."""
    n = w.n
    counts = []
    for m in range(1, n + 1):
        low, high = Letter(m), Letter(m, True)
        counts.append(sum(1 for lt in w.letters if lt <= low or lt >= high))
    return tuple(counts)


def is_admissible(w: Word) -> bool:
    """Column-word admissibility, straight from the counting criterion.

    The bound N(m) <= m is checked for every m up to n; beyond the column
    height it holds automatically, so this agrees with quantifying over
    m <= height only.
    """
    if not is_column_word(w):
        return False
    return all(count <= m for m, count in enumerate(admissibility_counts(w), start=1))


@dataclass(frozen=True)
class SplitColumn:
    """A column with its two split companions.

    ``paired`` lists the values occurring both barred and unbarred,
    decreasing; ``witnesses`` the greedily chosen replacement values.
    ``right`` substitutes barred paired letters, ``left`` unbarred ones.
    """

    base: Column
    paired: tuple[int, ...]
    witnesses: tuple[int, ...]
    left: Column
    right: Column


@dataclass(frozen=True)
class SplitFailure:
    """Witness that the greedy split construction got stuck.

    ``failed_index`` is the 1-based position in the paired-value list for
    which no witness value exists.
    """

    base: Column
    paired: tuple[int, ...]
    failed_index: int


@lru_cache(maxsize=None)
def try_split(col: Column) -> Union[SplitColumn, SplitFailure]:
    """Run the greedy splitting construction; never raises on failure."""
    values = {lt.value for lt in col.letters if not lt.barred}
    barred_values = {lt.value for lt in col.letters if lt.barred}
    paired = tuple(sorted(values & barred_values, reverse=True))

    witnesses: list[int] = []
    for idx, x in enumerate(paired, start=1):
        ceiling = min(witnesses[-1], x) if witnesses else x
        y = next(
            (c for c in range(ceiling - 1, 0, -1)
             if c not in values and c not in barred_values),
            None,
        )
        if y is None:
            return SplitFailure(col, paired, idx)
        witnesses.append(y)

    substitution_right = {Letter(x, True): Letter(y, True) for x, y in zip(paired, witnesses)}
    substitution_left = {Letter(x): Letter(y) for x, y in zip(paired, witnesses)}
    right = Column(sorted((substitution_right.get(lt, lt) for lt in col.letters),
                          key=Letter.sort_key), col.n)
    left = Column(sorted((substitution_left.get(lt, lt) for lt in col.letters),
                         key=Letter.sort_key), col.n)
    return SplitColumn(col, paired, tuple(witnesses), left, right)


def split(col: Column) -> SplitColumn:
    """Split an admissible column, raising on non-admissible input."""
    result = try_split(col)
    if isinstance(result, SplitFailure):
        raise InadmissibleColumnError(
            f"column {str(col)!r} cannot be split: no witness for paired value "
            f"#{result.failed_index} of {result.paired}"
        )
    return result


def iter_column_words(n: int, max_height: int) -> Iterator[Word]:
    """All strictly increasing words of height 1..max_height, in
    (height, alphabet-order) lexicographic order."""
    letters = all_letters(n)
    for height in range(1, max_height + 1):
        for combo in combinations(letters, height):
            yield Word(combo, n)


@lru_cache(maxsize=None)
def enumerate_admissible(n: int) -> tuple[Column, ...]:
    """All admissible columns over the alphabet, by height then lex order.

    Admissible columns never exceed height n, since N(n) equals the height.
    """
    return tuple(
        Column(w.letters, n) for w in iter_column_words(n, n) if is_admissible(w)
    )


@lru_cache(maxsize=None)
def minimal_nonadmissible_words(n: int) -> tuple[Word, ...]:
    """Strictly increasing non-admissible words whose strict factors are all
    admissible.  These are the left-hand sides of the contraction relation.

    Every strict factor is a factor of the word minus its first or last
    letter, and factors of admissible columns are admissible, so checking
    the two maximal strict factors suffices.  Heights cap at n+1.
    """
    out = []
    for w in iter_column_words(n, n + 1):
        if len(w) < 2 or is_admissible(w):
            continue
        if is_admissible(w[1:]) and is_admissible(w[:-1]):
            out.append(w)
    return tuple(out)
