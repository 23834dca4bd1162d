"""Crystal operators on words, computed by signature reduction.

For a fixed index i, the letters i and (i+1)bar read as '+', the letters
i+1 and ibar read as '-'.  Adjacent "+-" pairs cancel repeatedly; the
reduced signature has the shape -^r +^s.  The raising operator rewrites the
letter under the rightmost surviving '-', the lowering operator the letter
under the leftmost surviving '+'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabet import AlphabetMismatchError, Letter, Word


class ComponentBoundExceeded(RuntimeError):
    """A crystal component enumeration outgrew its vertex budget."""


@dataclass(frozen=True, slots=True)
class SignatureReduction:
    """Surviving '+' and '-' positions of w for one crystal index."""

    index: int
    minus_positions: tuple[int, ...]
    plus_positions: tuple[int, ...]

    @property
    def raise_count(self) -> int:
        return len(self.minus_positions)

    @property
    def lower_count(self) -> int:
        return len(self.plus_positions)


def reduce_signature(w: Word, i: int) -> SignatureReduction:
    """Run the +/- cancellation for index i and return the survivors."""
    _check_index(w.n, i)
    plus = (Letter(i), Letter(i + 1, True))      # i+1 > n never occurs in w
    minus = (Letter(i + 1), Letter(i, True))
    plus_stack: list[int] = []
    minus_surviving: list[int] = []
    for pos, lt in enumerate(w.letters):
        if lt in plus:
            plus_stack.append(pos)
        elif lt in minus:
            if plus_stack:
                plus_stack.pop()
            else:
                minus_surviving.append(pos)
    return SignatureReduction(i, tuple(minus_surviving), tuple(plus_stack))


def raise_word(w: Word, i: int) -> Optional[Word]:
    """Apply the raising operator for index i, or None when it vanishes."""
    sig = reduce_signature(w, i)
    if not sig.minus_positions:
        return None
    pos = sig.minus_positions[-1]
    lt = w.letters[pos]
    if lt == Letter(i + 1):
        new = Letter(i)
    elif i == w.n:  # nbar -> n
        new = Letter(i)
    else:  # ibar -> (i+1)bar
        new = Letter(i + 1, True)
    return _replace(w, pos, new)


def lower_word(w: Word, i: int) -> Optional[Word]:
    """Apply the lowering operator for index i, or None when it vanishes.

    Acts on the leftmost surviving '+': the unique choice for which raising
    and lowering are mutually inverse (checked by the test suite).
    """
    sig = reduce_signature(w, i)
    if not sig.plus_positions:
        return None
    pos = sig.plus_positions[0]
    lt = w.letters[pos]
    if lt == Letter(i):
        new = Letter(i, True) if i == w.n else Letter(i + 1)  # n -> nbar
    else:  # (i+1)bar -> ibar
        new = Letter(i, True)
    return _replace(w, pos, new)


def max_raises(w: Word, i: int) -> int:
    """How many times the raising operator applies before vanishing."""
    return reduce_signature(w, i).raise_count


def max_lowers(w: Word, i: int) -> int:
    """How many times the lowering operator applies before vanishing."""
    return reduce_signature(w, i).lower_count


def weight(w: Word) -> tuple[int, ...]:
    """The d-vector: d_i = (count of i) - (count of ibar)."""
    d = [0] * w.n
    for lt in w.letters:
        d[lt.value - 1] += -1 if lt.barred else 1
    return tuple(d)


def weight_in_fundamental_basis(d: tuple[int, ...]) -> tuple[int, ...]:
    """Convert a d-vector to coefficients over the fundamental weights."""
    n = len(d)
    return tuple(d[i] - d[i + 1] for i in range(n - 1)) + (d[n - 1],)


def is_highest_weight(w: Word) -> bool:
    """True when every raising operator vanishes on w."""
    return all(reduce_signature(w, i).raise_count == 0 for i in range(1, w.n + 1))


def raising_path(w: Word) -> tuple[tuple[int, ...], Word]:
    """Greedily raise at the smallest applicable index until highest weight.

    Returns the index sequence applied and the highest-weight endpoint.
    """
    path: list[int] = []
    current = w
    while True:
        for i in range(1, w.n + 1):
            raised = raise_word(current, i)
            if raised is not None:
                path.append(i)
                current = raised
                break
        else:
            return tuple(path), current


def canonical_label(w: Word) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A complete invariant of plactic equivalence on words.

    The pair (greedy raising index sequence, weight of the highest-weight
    endpoint).  Two words carry the same label exactly when they sit at the
    same position of isomorphic crystal components.
    """
    path, top = raising_path(w)
    return path, weight(top)


def crystal_equivalent(u: Word, v: Word) -> bool:
    """Whether u and v occupy the same position in isomorphic components."""
    if u.n != v.n:
        raise AlphabetMismatchError(f"cannot compare words with n={u.n} and n={v.n}")
    path, top_u = raising_path(u)
    current = v
    for i in path:
        raised = raise_word(current, i)
        if raised is None:
            return False
        current = raised
    return is_highest_weight(current) and weight(top_u) == weight(current)


@dataclass(frozen=True)
class CrystalComponent:
    """A connected component of the crystal graph, vertices in BFS order.

    Edges are (source index, crystal index i, target index) triples meaning
    the lowering operator at i maps the source vertex to the target.
    """

    vertices: tuple[Word, ...]
    edges: tuple[tuple[int, int, int], ...]


def component(w: Word, max_vertices: int) -> CrystalComponent:
    """BFS closure of w under raising and lowering at every index.

    Components of the full word crystal can be large; the bound is required
    and overrunning it raises ComponentBoundExceeded rather than truncating.
    """
    if max_vertices <= 0:
        raise ValueError(f"max_vertices must be positive, got {max_vertices}")
    order = {w: 0}
    queue = [w]
    head = 0
    lower_edges: list[tuple[Word, int, Word]] = []
    while head < len(queue):
        a = queue[head]
        head += 1
        for i in range(1, w.n + 1):
            down = lower_word(a, i)
            if down is not None:
                lower_edges.append((a, i, down))
                if down not in order:
                    if len(queue) >= max_vertices:
                        raise ComponentBoundExceeded(
                            f"component of {str(w)!r} exceeds {max_vertices} vertices"
                        )
                    order[down] = len(queue)
                    queue.append(down)
            up = raise_word(a, i)
            if up is not None and up not in order:
                if len(queue) >= max_vertices:
                    raise ComponentBoundExceeded(
                        f"component of {str(w)!r} exceeds {max_vertices} vertices"
                    )
                order[up] = len(queue)
                queue.append(up)
    edges = sorted((order[a], i, order[b]) for a, i, b in lower_edges)
    return CrystalComponent(tuple(queue), tuple(edges))


def component_to_dot(comp: CrystalComponent) -> str:
    """Graphviz rendering with nodes in BFS order and edges labelled i."""
    lines = ["digraph crystal {"]
    for idx, vert in enumerate(comp.vertices):
        label = str(vert) if len(vert) else "(empty)"
        lines.append(f'  v{idx} [label="{label}"];')
    for src, i, dst in comp.edges:
        lines.append(f'  v{src} -> v{dst} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def _replace(w: Word, pos: int, letter: Letter) -> Word:
    letters = list(w.letters)
    letters[pos] = letter
    return Word(letters, w.n)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"crystal index must lie in 1..{n}, got {i}")
