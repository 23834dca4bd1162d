"""The bumping algorithm: insert letters into columns and tableaux.

Inserting x into an admissible column C looks at the word w(C)x and lands
in one of three cases: the word is itself an admissible column (append a
box), it is a minimally non-admissible column word (erase a contractible
barred pair), or it is not a column word at all (sweep three-letter
rewriting windows right to left until one letter is expelled into the next
column).  Folding letter insertion over a word computes its tableau.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .alphabet import Letter, Word
from .columns import (
    Column,
    InadmissibleColumnError,
    admissibility_counts,
    is_admissible,
    is_column_word,
)
from .tableaux import SymplecticTableau


class AmbiguousWindowError(RuntimeError):
    """A bumping window matched more than one rewriting rule.

    Never expected to fire: the side conditions of the three-letter
    relations are mutually exclusive, and the sweep asserts it.
    """


class StuckWindowError(RuntimeError):
    """A bumping window matched no rewriting rule; signals corrupt input."""


class ReinsertionContractionError(RuntimeError):
    """A contracted column's letters triggered a second contraction.

    Reinserting the surviving letters of a contracted first column into the
    remaining tableau never contracts again; this guards that claim.
    """


class ColumnWordClass(enum.Enum):
    ADMISSIBLE_COLUMN = "admissible-column"
    MINIMAL_NONADMISSIBLE_COLUMN = "minimal-nonadmissible-column"
    NOT_A_COLUMN = "not-a-column"


def classify_column_word(w: Word) -> ColumnWordClass:
    """Sort w into the three insertion cases.

    NOT_A_COLUMN also covers the degenerate strictly-increasing words that
    are non-admissible with a non-admissible strict factor; those cannot
    arise as w(C)x for admissible C and play no role in insertion.
    """
    if not is_column_word(w):
        return ColumnWordClass.NOT_A_COLUMN
    if is_admissible(w):
        return ColumnWordClass.ADMISSIBLE_COLUMN
    if len(w) >= 2 and is_admissible(w[1:]) and is_admissible(w[:-1]):
        return ColumnWordClass.MINIMAL_NONADMISSIBLE_COLUMN
    return ColumnWordClass.NOT_A_COLUMN


def contract(w: Word) -> Word:
    """Erase the contractible barred pair from a minimally non-admissible word.

    The erased value z is the lowest one occurring both barred and unbarred
    whose count N(z) overshoots to exactly z+1.
    """
    if classify_column_word(w) is not ColumnWordClass.MINIMAL_NONADMISSIBLE_COLUMN:
        raise ValueError(f"{str(w)!r} is not a minimally non-admissible column word")
    counts = admissibility_counts(w)
    present = set(w.letters)
    for z in range(1, w.n + 1):
        if Letter(z) in present and Letter(z, True) in present and counts[z - 1] == z + 1:
            remaining = [lt for lt in w.letters if lt not in (Letter(z), Letter(z, True))]
            return Word(remaining, w.n)
    raise ValueError(f"no contractible pair found in {str(w)!r}")


def window_rewrites(a: Letter, b: Letter, c: Letter, n: int) -> list[tuple[Letter, Letter, Letter]]:
    """All one-step three-letter rewrites of the exact window (a, b, c).

    Both orientations of the plain exchange relations and of the barred-pair
    slide relations are tried; the side conditions make them mutually
    exclusive, so the returned list has at most one entry in practice (the
    sweep asserts this rather than assuming it).
    """
    out = []
    # exchange, pattern x z y -> z x y  (x < y <= z, z not the bar of x)
    x, z, y = a, b, c
    if x < y <= z and z != x.mirror():
        out.append((z, x, y))
    # reverse:  z x y -> x z y
    z, x, y = a, b, c
    if x < y <= z and z != x.mirror():
        out.append((x, z, y))
    # exchange, pattern y x z -> y z x  (x <= y < z, z not the bar of x)
    y, x, z = a, b, c
    if x <= y < z and z != x.mirror():
        out.append((y, z, x))
    # reverse:  y z x -> y x z
    y, z, x = a, b, c
    if x <= y < z and z != x.mirror():
        out.append((y, x, z))
    # barred-pair slide, pattern y x xbar -> y (x-1)bar (x-1)  (x <= y <= xbar)
    if not b.barred and c == b.mirror() and b.value > 1 and b <= a <= c:
        out.append((a, Letter(b.value - 1, True), Letter(b.value - 1)))
    # reverse:  y (v)bar v -> y (v+1) (v+1)bar
    if not c.barred and b == c.mirror() and c.value < n:
        lo, hi = Letter(c.value + 1), Letter(c.value + 1, True)
        if lo <= a <= hi:
            out.append((a, lo, hi))
    # barred-pair slide, pattern x xbar y -> (x-1)bar (x-1) y  (x <= y <= xbar)
    if not a.barred and b == a.mirror() and a.value > 1 and a <= c <= b:
        out.append((Letter(a.value - 1, True), Letter(a.value - 1), c))
    # reverse:  (v)bar v y -> (v+1) (v+1)bar y
    if not b.barred and a == b.mirror() and b.value < n:
        lo, hi = Letter(b.value + 1), Letter(b.value + 1, True)
        if lo <= c <= hi:
            out.append((lo, hi, c))
    return out


class ColumnInsertKind(enum.Enum):
    EXTENDED = "extended"
    CONTRACTED = "contracted"
    BUMPED = "bumped"


@dataclass(frozen=True)
class ColumnInsertOutcome:
    kind: ColumnInsertKind
    column: Column
    bumped: Optional[Letter] = None


def insert_into_column(col: Column, x: Letter) -> ColumnInsertOutcome:
    """Insert one letter into an admissible column.

    Extended grows the column by one box, contracted shrinks it by one, and
    bumped keeps the height while expelling one letter to the next column.
    """
    if not is_admissible(col):
        raise InadmissibleColumnError(f"column {str(col)!r} is not admissible")
    word = col.append(x)
    kind = classify_column_word(word)
    if kind is ColumnWordClass.ADMISSIBLE_COLUMN:
        return ColumnInsertOutcome(ColumnInsertKind.EXTENDED, Column(word.letters, word.n))
    if kind is ColumnWordClass.MINIMAL_NONADMISSIBLE_COLUMN:
        contracted = contract(word)
        return ColumnInsertOutcome(
            ColumnInsertKind.CONTRACTED, Column(contracted.letters, word.n)
        )
    # bumped: sweep overlapping windows right to left
    letters = list(word.letters)
    for start in range(len(letters) - 3, -1, -1):
        window = tuple(letters[start:start + 3])
        results = window_rewrites(*window, word.n)
        if len(results) > 1:
            raise AmbiguousWindowError(
                f"window {tuple(str(lt) for lt in window)} of {str(word)!r} "
                f"admits {len(results)} rewrites"
            )
        if not results:
            raise StuckWindowError(
                f"window {tuple(str(lt) for lt in window)} of {str(word)!r} "
                "admits no rewrite"
            )
        letters[start:start + 3] = results[0]
    expelled, rest = letters[0], letters[1:]
    return ColumnInsertOutcome(
        ColumnInsertKind.BUMPED, Column(rest, word.n), expelled
    )


def insert_into_tableau(t: SymplecticTableau, x: Letter) -> SymplecticTableau:
    """Insert one letter into a tableau; the result is validated throughout."""
    return _insert(t, x, allow_contraction=True)


def _insert(t: SymplecticTableau, x: Letter, allow_contraction: bool) -> SymplecticTableau:
    if not t.columns:
        return SymplecticTableau([Column([x], t.n)], t.n)
    first, rest = t.columns[0], t.columns[1:]
    outcome = insert_into_column(first, x)
    if outcome.kind is ColumnInsertKind.EXTENDED:
        return SymplecticTableau((outcome.column,) + rest, t.n)
    if outcome.kind is ColumnInsertKind.CONTRACTED:
        if not allow_contraction:
            raise ReinsertionContractionError(
                f"inserting {x} into {str(first)!r} contracted during reinsertion"
            )
        result = SymplecticTableau(rest, t.n)
        for letter in outcome.column.letters:
            result = _insert(result, letter, allow_contraction=False)
        return result
    # bumped: keep the rewritten first column, push the expelled letter right
    tail = _insert(SymplecticTableau(rest, t.n), outcome.bumped, allow_contraction)
    return SymplecticTableau((outcome.column,) + tail.columns, t.n)


def tableau_of_word(w: Word) -> SymplecticTableau:
    """The tableau of a word: fold letter insertion from the empty tableau."""
    t = SymplecticTableau([], w.n)
    for letter in w.letters:
        t = insert_into_tableau(t, letter)
    return t
