"""Symplectic tableaux: compatible sequences of admissible columns.

Two admissible columns C, D may stand side by side when the right split
companion of C sits weakly below-left of the left split companion of D
(rowwise, top-aligned).  A tableau is a chain of admissible columns under
that relation; its reading concatenates the column words right to left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .alphabet import Letter, Word, empty_word
from .columns import Column, enumerate_admissible, is_admissible, split


class InvalidTableauError(ValueError):
    def __init__(self, reason: str, index: int):
        super().__init__(f"{reason} (at column index {index})")
        self.reason = reason
        self.index = index


@dataclass(frozen=True)
class TableauViolation:
    """First constraint failure found while validating a column list."""

    reason: str
    index: int


def column_leq(c1: Column, c2: Column) -> bool:
    """Rowwise comparison: c1 at least as tall, rows weakly increasing."""
    if c1.height < c2.height:
        return False
    return all(a <= b for a, b in zip(c1.letters, c2.letters))


def column_preceq(c1: Column, c2: Column) -> bool:
    """Whether c1 may stand immediately left of c2 in a tableau.

    Compares the right split companion of c1 against the left one of c2.
    Raises InadmissibleColumnError when either column fails to split.
    """
    return column_leq(split(c1).right, split(c2).left)


class SymplecticTableau:
    """A validated sequence of admissible columns, leftmost first."""

    __slots__ = ("columns", "n", "_hash")

    def __init__(self, columns: Iterable[Column], n: int):
        columns = tuple(columns)
        for idx, col in enumerate(columns):
            if col.n != n:
                raise InvalidTableauError(f"column {str(col)!r} has n={col.n}, expected {n}", idx)
            if not is_admissible(col):
                raise InvalidTableauError(f"column {str(col)!r} is not admissible", idx)
        for idx in range(len(columns) - 1):
            if not column_preceq(columns[idx], columns[idx + 1]):
                raise InvalidTableauError(
                    f"columns {str(columns[idx])!r} and {str(columns[idx + 1])!r} "
                    "are not compatible", idx,
                )
        self.columns = columns
        self.n = n
        self._hash = hash((n, columns))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymplecticTableau)
            and self.n == other.n
            and self.columns == other.columns
        )

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.columns)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(col.height for col in self.columns)

    def __repr__(self) -> str:
        cols = ", ".join(repr(str(c)) for c in self.columns)
        return f"SymplecticTableau([{cols}], n={self.n})"


def validate_tableau(
    columns: Sequence[Column], n: int
) -> Union[SymplecticTableau, TableauViolation]:
    """Check all tableau invariants, reporting the first violation."""
    try:
        return SymplecticTableau(columns, n)
    except InvalidTableauError as err:
        return TableauViolation(err.reason, err.index)


def reading(t: SymplecticTableau) -> Word:
    """Concatenate the column words from the rightmost column leftwards."""
    word = empty_word(t.n)
    for col in reversed(t.columns):
        word = word + col
    return word


@dataclass(frozen=True)
class Shape:
    """Column-height multiplicities: counts[i-1] columns of height i."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError(f"shape multiplicities must be nonnegative: {self.counts}")

    @property
    def total_boxes(self) -> int:
        return sum(c * h for h, c in enumerate(self.counts, start=1))

    def column_heights(self) -> tuple[int, ...]:
        """Heights left to right: tallest columns first."""
        out = []
        for height in range(len(self.counts), 0, -1):
            out.extend([height] * self.counts[height - 1])
        return tuple(out)

    def row_lengths(self) -> tuple[int, ...]:
        """Boxes per row, the conventional diagram view."""
        heights = self.column_heights()
        if not heights:
            return ()
        return tuple(
            sum(1 for h in heights if h >= row) for row in range(1, heights[0] + 1)
        )

    @classmethod
    def of_tableau(cls, t: SymplecticTableau) -> "Shape":
        counts = [0] * t.n
        for col in t.columns:
            counts[col.height - 1] += 1
        return cls(tuple(counts))


def canonical_tableau(shape: Shape, n: int) -> SymplecticTableau:
    """The tableau of the given shape with every row r filled by the letter r.

    Its reading is a highest-weight word whose fundamental-basis weight is
    exactly the shape's multiplicity vector.
    """
    if len(shape.counts) > n and any(shape.counts[n:]):
        raise ValueError(f"shape {shape.counts} has columns taller than n={n}")
    columns = [
        Column([Letter(v) for v in range(1, h + 1)], n) for h in shape.column_heights()
    ]
    return SymplecticTableau(columns, n)


def enumerate_tableaux(shape: Shape, n: int) -> tuple[SymplecticTableau, ...]:
    """All symplectic tableaux of the given shape, in lexicographic order."""
    heights = Shape(shape.counts).column_heights()
    by_height: dict[int, list[Column]] = {}
    for col in enumerate_admissible(n):
        by_height.setdefault(col.height, []).append(col)

    results: list[SymplecticTableau] = []

    def extend(prefix: list[Column], remaining: tuple[int, ...]) -> None:
        if not remaining:
            results.append(SymplecticTableau(prefix, n))
            return
        for col in by_height.get(remaining[0], []):
            if prefix and not column_preceq(prefix[-1], col):
                continue
            extend(prefix + [col], remaining[1:])

    extend([], heights)
    return tuple(results)


def tableau_to_json(t: SymplecticTableau) -> dict:
    """The wire schema: columns left to right, letters as signed integers."""
    return {
        "n": t.n,
        "columns": [[lt.signed for lt in col.letters] for col in t.columns],
    }


def tableau_from_json(data: Union[str, dict]) -> SymplecticTableau:
    """Parse and fully validate the wire schema."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "columns" not in data:
        raise ValueError("tableau JSON must be an object with 'n' and 'columns'")
    n = data["n"]
    columns = [
        Column([Letter.from_signed(k) for k in col], n) for col in data["columns"]
    ]
    return SymplecticTableau(columns, n)


def tableau_to_grid(t: SymplecticTableau) -> str:
    """ASCII grid, one row per line, top-aligned columns."""
    if not t.columns:
        return "(empty tableau)"
    width = max(len(str(lt.signed)) for col in t.columns for lt in col.letters)
    depth = max(col.height for col in t.columns)
    lines = []
    for row in range(depth):
        cells = [
            str(col.letters[row].signed).rjust(width)
            for col in t.columns
            if col.height > row
        ]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def iter_shapes(n: int, max_boxes: int) -> Iterator[Shape]:
    """All nonempty shapes over heights 1..n with at most max_boxes boxes."""

    def rec(height: int, budget: int, acc: list[int]) -> Iterator[Shape]:
        if height > n:
            if any(acc):
                yield Shape(tuple(acc))
            return
        for count in range(budget // height + 1):
            yield from rec(height + 1, budget - count * height, acc + [count])

    yield from rec(1, max_boxes, [])
