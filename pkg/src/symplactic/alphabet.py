"""The symplectic alphabet and words over it.

Letters come from the ordered set 1 < 2 < ... < n < nbar < ... < 1bar,
where ibar is the "barred" partner of i.  The ASCII wire format writes a
barred letter as a negative integer, so ``"3 6 -6 -4"`` is the word
3 6 6bar 4bar over any alphabet with n >= 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator


class WordParseError(ValueError):
    """A token in a word string is malformed or out of range."""


class AlphabetMismatchError(ValueError):
    """Values built over different alphabet parameters were mixed."""


@total_ordering
@dataclass(frozen=True, slots=True)
class Letter:
    """One symbol of the alphabet: a value in 1..n, barred or not."""

    value: int
    barred: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or self.value < 1:
            raise WordParseError(f"letter value must be a positive integer, got {self.value!r}")

    @property
    def signed(self) -> int:
        """Signed-integer encoding: -value when barred."""
        return -self.value if self.barred else self.value

    @classmethod
    def from_signed(cls, k: int) -> "Letter":
        if k == 0:
            raise WordParseError("0 is not a letter")
        return cls(abs(k), k < 0)

    def rank(self, n: int) -> int:
        """Position of the letter in 1..2n within the alphabet order."""
        return 2 * n + 1 - self.value if self.barred else self.value

    def mirror(self) -> "Letter":
        """The barred partner (an involution)."""
        return Letter(self.value, not self.barred)

    def sort_key(self) -> tuple[int, int]:
        # unbarred letters ascend by value, then barred letters descend
        return (1, -self.value) if self.barred else (0, self.value)

    def __lt__(self, other: "Letter") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return str(self.signed)

    def __repr__(self) -> str:
        return f"Letter({self.signed})"


def compare_letters(a: Letter, b: Letter) -> int:
    """Three-way comparison in the alphabet order: -1, 0 or +1."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


def all_letters(n: int) -> tuple[Letter, ...]:
    """The 2n letters of the alphabet, smallest first."""
    if n < 1:
        raise ValueError(f"alphabet parameter must be >= 1, got {n}")
    unbarred = [Letter(v) for v in range(1, n + 1)]
    barred = [Letter(v, True) for v in range(n, 0, -1)]
    return tuple(unbarred + barred)


class Word:
    """An immutable word over the alphabet with parameter ``n``.

    Equality and hashing include ``n``: words over different alphabets never
    compare equal, and operations mixing them raise AlphabetMismatchError.
    """

    __slots__ = ("letters", "n", "_hash")

    def __init__(self, letters: Iterable[Letter], n: int):
        if not isinstance(n, int) or n < 1:
            raise WordParseError(f"alphabet parameter must be a positive integer, got {n!r}")
        letters = tuple(letters)
        for lt in letters:
            if lt.value > n:
                raise WordParseError(f"letter {lt} does not fit in the alphabet with n={n}")
        self.letters = letters
        self.n = n
        self._hash = hash((n, letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.letters[idx], self.n)
        return self.letters[idx]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.n == other.n
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if self.n != other.n:
            raise AlphabetMismatchError(f"cannot concatenate words with n={self.n} and n={other.n}")
        return Word(self.letters + other.letters, self.n)

    def append(self, letter: Letter) -> "Word":
        return Word(self.letters + (letter,), self.n)

    def ranks(self) -> tuple[int, ...]:
        n = self.n
        return tuple(lt.rank(n) for lt in self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, n={self.n})"


def empty_word(n: int) -> Word:
    return Word((), n)


def parse_word(text: str, n: int) -> Word:
    """Parse a whitespace-separated word; ``-k`` denotes the barred letter kbar.

    Raises WordParseError naming the offending token on bad input.
    """
    letters = []
    for token in text.split():
        body = token[1:] if token.startswith("-") else token
        if not body or any(c not in "0123456789" for c in body):
            raise WordParseError(f"malformed token {token!r}")
        k = int(token, 10)
        if k == 0:
            raise WordParseError(f"bad token {token!r}: 0 is not a letter")
        if abs(k) > n:
            raise WordParseError(f"token {token!r} is out of range for n={n}")
        letters.append(Letter.from_signed(k))
    return Word(letters, n)


def format_word(w: Word) -> str:
    """Inverse of parse_word: space-separated signed integers."""
    return " ".join(str(lt.signed) for lt in w.letters)
