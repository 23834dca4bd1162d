"""String rewriting: the letter-level system, bounded completion, and the
finite convergent admissible-column system.

The letter-level system orients the defining relations by reverse deglex
(longer first, ties by the reversed words).  It is terminating but not
confluent, and bounded completion on its unbarred fragment demonstrates
the divergence.  The admissible-column system rewrites adjacent column
generators to the columns of their two-letter tableau and is finite and
convergent; its normal forms spell tableau readings.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .alphabet import AlphabetMismatchError, Letter, Word, all_letters
from .columns import (
    Column,
    enumerate_admissible,
    is_admissible,
    minimal_nonadmissible_words,
)
from .insertion import contract, tableau_of_word, window_rewrites
from .tableaux import column_preceq


class ClosureBoundExceeded(RuntimeError):
    """A congruence closure outgrew its budget."""


class RewriteOrderError(RuntimeError):
    """A rewriting step failed to decrease the termination order."""


@dataclass(frozen=True)
class RewriteRule:
    """An oriented relation between words over the letter alphabet."""

    lhs: Word
    rhs: Word
    tag: str

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}  [{self.tag}]"


def reverse_deglex_greater(a: Word, b: Word) -> bool:
    """Length first; equal lengths compare the reversed words letterwise."""
    if a.n != b.n:
        raise AlphabetMismatchError(f"cannot order words with n={a.n} and n={b.n}")
    if len(a) != len(b):
        return len(a) > len(b)
    for x, y in zip(reversed(a.letters), reversed(b.letters)):
        if x != y:
            return x > y
    return False


def sp_rules(n: int) -> tuple[RewriteRule, ...]:
    """Every instance of the oriented defining relations over the alphabet.

    Exchange rules move the largest letter of a three-letter window to the
    front or the smallest to the back; slide rules trade an adjacent barred
    pair (x, xbar) for (x-1)bar, x-1; contraction rules erase the
    contractible pair of a minimally non-admissible column word.
    """
    letters = all_letters(n)
    rules: list[RewriteRule] = []
    for x in letters:
        for y in letters:
            for z in letters:
                if x < y <= z and z != x.mirror():
                    rules.append(RewriteRule(
                        Word((x, z, y), n), Word((z, x, y), n), "knuth-xzy"))
                if x <= y < z and z != x.mirror():
                    rules.append(RewriteRule(
                        Word((y, x, z), n), Word((y, z, x), n), "knuth-yxz"))
    for xv in range(2, n + 1):
        x, xbar = Letter(xv), Letter(xv, True)
        down_bar, down = Letter(xv - 1, True), Letter(xv - 1)
        for y in letters:
            if x <= y <= xbar:
                rules.append(RewriteRule(
                    Word((y, x, xbar), n), Word((y, down_bar, down), n), "slide-yxx"))
                rules.append(RewriteRule(
                    Word((x, xbar, y), n), Word((down_bar, down, y), n), "slide-xxy"))
    for w in minimal_nonadmissible_words(n):
        rules.append(RewriteRule(w, contract(w), "contract"))
    return tuple(rules)


def type_a_knuth_rules(max_letter: int) -> tuple[RewriteRule, ...]:
    """The exchange rules restricted to the unbarred letters 1..max_letter."""
    n = max_letter
    letters = [Letter(v) for v in range(1, max_letter + 1)]
    rules = []
    for x in letters:
        for y in letters:
            for z in letters:
                if x < y <= z:
                    rules.append(RewriteRule(
                        Word((x, z, y), n), Word((z, x, y), n), "knuth-xzy"))
                if x <= y < z:
                    rules.append(RewriteRule(
                        Word((y, x, z), n), Word((y, z, x), n), "knuth-yxz"))
    return tuple(rules)


# --- congruence closure over the unoriented relations ---------------------


@lru_cache(maxsize=None)
def _contraction_pairs(n: int) -> tuple[tuple[Word, Word], ...]:
    return tuple((w, contract(w)) for w in minimal_nonadmissible_words(n))


def _congruence_neighbors(w: Word, length_cap: int) -> Iterator[Word]:
    n = w.n
    letters = w.letters
    for k in range(len(letters) - 2):
        for res in window_rewrites(letters[k], letters[k + 1], letters[k + 2], n):
            yield Word(letters[:k] + res + letters[k + 3:], n)
    for lhs, rhs in _contraction_pairs(n):
        llen, rlen = len(lhs), len(rhs)
        if llen <= len(letters):
            for k in range(len(letters) - llen + 1):
                if letters[k:k + llen] == lhs.letters:
                    yield Word(letters[:k] + rhs.letters + letters[k + llen:], n)
        if len(letters) - rlen + llen <= length_cap:
            for k in range(len(letters) - rlen + 1):
                if letters[k:k + rlen] == rhs.letters:
                    yield Word(letters[:k] + lhs.letters + letters[k + rlen:], n)


def congruence_closure(w: Word, length_cap: int, max_closure: int = 500_000) -> frozenset[Word]:
    """All words reachable from w by unoriented relation steps within the cap."""
    if length_cap < len(w):
        raise ValueError(f"length cap {length_cap} is below the word length {len(w)}")
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for word in frontier:
            for neighbor in _congruence_neighbors(word, length_cap):
                if neighbor not in seen:
                    if len(seen) >= max_closure:
                        raise ClosureBoundExceeded(
                            f"closure of {str(w)!r} exceeds {max_closure} words"
                        )
                    seen.add(neighbor)
                    nxt.append(neighbor)
        frontier = nxt
    return frozenset(seen)


def congruence_oracle(u: Word, v: Word, length_cap: int, max_closure: int = 500_000) -> bool:
    """Breadth-first search for a relation path from u to v within the cap.

    Sound unconditionally; complete whenever some derivation stays within
    the cap, which holds throughout the desk-scale test universes.
    """
    if u.n != v.n:
        raise AlphabetMismatchError(f"cannot relate words with n={u.n} and n={v.n}")
    if length_cap < max(len(u), len(v)):
        raise ValueError("length cap must cover both input words")
    if u == v:
        return True
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for word in frontier:
            for neighbor in _congruence_neighbors(word, length_cap):
                if neighbor == v:
                    return True
                if neighbor not in seen:
                    if len(seen) >= max_closure:
                        raise ClosureBoundExceeded(
                            f"closure of {str(u)!r} exceeds {max_closure} words"
                        )
                    seen.add(neighbor)
                    nxt.append(neighbor)
        frontier = nxt
    return False


# --- bounded completion ----------------------------------------------------


@dataclass(frozen=True)
class CompletionReport:
    """Outcome of a bounded completion run."""

    closed: bool
    rules_added: int
    pairs_processed: int
    added_rules: tuple[RewriteRule, ...]
    unorientable: tuple[tuple[Word, Word], ...] = ()

    def sample(self, count: int = 10) -> tuple[RewriteRule, ...]:
        return self.added_rules[:count]


class _RuleIndex:
    """Dict-backed leftmost, shortest-match-first normalizer."""

    __slots__ = ("map", "lengths")

    def __init__(self, rules: Iterable[tuple[tuple, tuple]]):
        self.map: dict[tuple, tuple] = {}
        self.lengths: list[int] = []
        for lhs, rhs in rules:
            if lhs not in self.map:
                self.map[lhs] = rhs
                if len(lhs) not in self.lengths:
                    self.lengths.append(len(lhs))
                    self.lengths.sort()

    def normalize(self, word: tuple) -> tuple:
        lengths = self.lengths
        rmap = self.map
        if not lengths:
            return word
        maxback = lengths[-1] - 1
        pos = 0
        while pos < len(word):
            matched = False
            for length in lengths:
                end = pos + length
                if end > len(word):
                    break
                segment = word[pos:end]
                if segment in rmap:
                    word = word[:pos] + rmap[segment] + word[end:]
                    pos = max(0, pos - maxback)
                    matched = True
                    break
            if not matched:
                pos += 1
        return word


def _superpositions(l1: tuple, l2: tuple) -> Iterator[tuple[tuple, int, int]]:
    """Overlap words of two left-hand sides with both redex offsets."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield l1 + l2[k:], 0, len(l1) - k
    if len(l2) < len(l1):
        start = 0
        while True:
            try:
                p = next(i for i in range(start, len(l1) - len(l2) + 1)
                         if l1[i:i + len(l2)] == l2)
            except StopIteration:
                break
            yield l1, 0, p
            start = p + 1


def kb_complete(
    rules: Sequence[RewriteRule],
    order_greater: Callable[[Word, Word], bool] = reverse_deglex_greater,
    max_rules: int = 200,
    max_pairs: int = 10_000,
) -> CompletionReport:
    """Bounded critical-pair completion of an oriented letter-level system.

    Superpositions of every rule pair are resolved by rewriting both
    reducts to normal form with the INITIAL rules, then orienting and
    adding the unresolved pairs.  Pairs involving an initial rule are
    processed first, each lane smallest-superposition-first; superpositions
    reducible by a third redex not nested inside either critical redex are
    composite and skipped.  Normalizing with the initial system keeps every
    added rule a directly-audited consequence of the input presentation and
    leaves the divergent rule families visible verbatim in the table.
    """
    if not rules:
        return CompletionReport(True, 0, 0, ())
    n = rules[0].lhs.n
    for rule in rules:
        if rule.lhs.n != n or rule.rhs.n != n:
            raise AlphabetMismatchError("completion input mixes alphabet parameters")

    table: list[tuple[tuple, tuple]] = [
        (rule.lhs.letters, rule.rhs.letters) for rule in rules
    ]
    n_base = len(table)
    rule_set = set(table)
    base_index = _RuleIndex(table)
    all_lhs = {lhs for lhs, _ in table}
    lhs_lengths = sorted({len(lhs) for lhs, _ in table})

    def sort_key(word: tuple) -> tuple:
        return (len(word), tuple(lt.sort_key() for lt in reversed(word)))

    lane_axiom: list = []
    lane_derived: list = []
    counter = 0

    def push_pairs(i: int, j: int) -> None:
        nonlocal counter
        for word, p1, p2 in _superpositions(table[i][0], table[j][0]):
            counter += 1
            lane = lane_axiom if (i < n_base or j < n_base) else lane_derived
            heapq.heappush(lane, (sort_key(word), counter, (word, p1, i, p2, j)))

    for i in range(n_base):
        for j in range(n_base):
            push_pairs(i, j)

    def is_composite(word: tuple, s1: int, e1: int, s2: int, e2: int) -> bool:
        for length in lhs_lengths:
            for q in range(len(word) - length + 1):
                if (s1 <= q and q + length <= e1) or (s2 <= q and q + length <= e2):
                    continue
                if word[q:q + length] in all_lhs:
                    return True
        return False

    added: list[RewriteRule] = []
    unorientable: list[tuple[Word, Word]] = []
    pairs = 0
    while (lane_axiom or lane_derived) and len(added) < max_rules and pairs < max_pairs:
        lane = lane_axiom if lane_axiom else lane_derived
        _, _, (word, p1, i, p2, j) = heapq.heappop(lane)
        pairs += 1
        l1, r1 = table[i]
        l2, r2 = table[j]
        if is_composite(word, p1, p1 + len(l1), p2, p2 + len(l2)):
            continue
        left = base_index.normalize(word[:p1] + r1 + word[p1 + len(l1):])
        right = base_index.normalize(word[:p2] + r2 + word[p2 + len(l2):])
        if left == right:
            continue
        wl, wr = Word(left, n), Word(right, n)
        if order_greater(wl, wr):
            lhs, rhs = left, right
        elif order_greater(wr, wl):
            lhs, rhs = right, left
        else:
            unorientable.append((wl, wr))
            continue
        if (lhs, rhs) in rule_set:
            continue
        table.append((lhs, rhs))
        rule_set.add((lhs, rhs))
        all_lhs.add(lhs)
        if len(lhs) not in lhs_lengths:
            lhs_lengths.append(len(lhs))
            lhs_lengths.sort()
        added.append(RewriteRule(Word(lhs, n), Word(rhs, n), "derived"))
        m = len(table) - 1
        for k in range(len(table)):
            push_pairs(k, m)
            if k != m:
                push_pairs(m, k)
    closed = not (lane_axiom or lane_derived)
    return CompletionReport(closed, len(added), pairs, tuple(added), tuple(unorientable))


# --- the admissible-column system ------------------------------------------


@dataclass(frozen=True)
class ColumnRule:
    """An oriented rule between sequences of admissible column generators."""

    lhs: tuple[Word, Word]
    rhs: tuple[Word, ...]
    tag: str = "column-pair"

    def __str__(self) -> str:
        left = " . ".join(f"[{w}]" for w in self.lhs)
        right = " . ".join(f"[{w}]" for w in self.rhs) if self.rhs else "(empty)"
        return f"{left} -> {right}"


def acol_rule(u: Word, v: Word) -> Optional[ColumnRule]:
    """The rule rewriting the adjacent generator pair (u, v), if reducible.

    The pair spells the word uv, the reading of the two-column arrangement
    with v's column on the left.  When that arrangement is already a valid
    tableau the pair is irreducible and None is returned; otherwise the
    right-hand side lists the column readings of the tableau of uv,
    rightmost column first (one generator when the tableau has a single
    column, none when it is empty).
    """
    if u.n != v.n:
        raise AlphabetMismatchError(f"cannot pair columns with n={u.n} and n={v.n}")
    cu, cv = Column(u.letters, u.n), Column(v.letters, v.n)
    if column_preceq(cv, cu):
        return None
    tableau = tableau_of_word(u + v)
    readings = tuple(Word(col.letters, u.n) for col in reversed(tableau.columns))
    return ColumnRule((u, v), readings)


@lru_cache(maxsize=None)
def acol_rules(n: int) -> tuple[ColumnRule, ...]:
    """The full finite rule table over the admissible column generators."""
    columns = enumerate_admissible(n)
    rules = []
    for u in columns:
        for v in columns:
            rule = acol_rule(Word(u.letters, n), Word(v.letters, n))
            if rule is not None:
                rules.append(rule)
    return tuple(rules)


@lru_cache(maxsize=None)
def acol_rule_map(n: int) -> dict[tuple[Word, Word], tuple[Word, ...]]:
    return {rule.lhs: rule.rhs for rule in acol_rules(n)}


def generator_precedes(u: Word, v: Word) -> bool:
    """Generator order: shorter column word first, ties by letter ranks."""
    if len(u) != len(v):
        return len(u) < len(v)
    return tuple(lt.sort_key() for lt in u.letters) < tuple(lt.sort_key() for lt in v.letters)


def sequence_precedes(h1: Sequence[Word], h2: Sequence[Word]) -> bool:
    """Sequence order: fewer generators first, then leftmost difference."""
    if len(h1) != len(h2):
        return len(h1) < len(h2)
    for a, b in zip(h1, h2):
        if a != b:
            return generator_precedes(a, b)
    return False


def word_to_generators(w: Word) -> tuple[Word, ...]:
    """Embed a word letter by letter; single letters are admissible columns."""
    return tuple(Word((lt,), w.n) for lt in w.letters)


def generators_to_word(seq: Sequence[Word], n: int) -> Word:
    out = Word((), n)
    for gen in seq:
        out = out + gen
    return out


def normal_form(
    seq: Sequence[Word],
    n: int,
    strategy: str = "leftmost",
    seed: int = 0,
    step_limit: int = 100_000,
) -> tuple[Word, ...]:
    """Rewrite a generator sequence to its unique irreducible form.

    Every applied step is checked to strictly decrease the sequence order;
    a violation or an exhausted step budget raises RewriteOrderError, since
    either would contradict termination of the system.
    """
    if strategy not in ("leftmost", "rightmost", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rules = acol_rule_map(n)
    rng = random.Random(seed) if strategy == "random" else None
    current = tuple(seq)
    for gen in current:
        if not is_admissible(gen):
            raise ValueError(f"generator {str(gen)!r} is not an admissible column word")
    steps = 0
    while True:
        positions = [
            k for k in range(len(current) - 1)
            if (current[k], current[k + 1]) in rules
        ]
        if not positions:
            return current
        if strategy == "leftmost":
            k = positions[0]
        elif strategy == "rightmost":
            k = positions[-1]
        else:
            k = rng.choice(positions)
        replacement = rules[(current[k], current[k + 1])]
        new = current[:k] + replacement + current[k + 2:]
        if not sequence_precedes(new, current):
            raise RewriteOrderError(
                f"step at position {k} failed to decrease the order: "
                f"{[str(g) for g in current]} -> {[str(g) for g in new]}"
            )
        current = new
        steps += 1
        if steps > step_limit:
            raise RewriteOrderError(f"step budget {step_limit} exhausted; termination bug")
