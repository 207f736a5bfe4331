"""Permutations, the Robinson-Schensted correspondence, and Knuth equivalence."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, ResourceLimitError
from .tableaux import Tableau, is_standard, row_insert, reverse_bump


@dataclass(frozen=True)
class Permutation:
    """One-line notation: position k maps to ``word[k-1]``."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise DomainError(f"{word} is not a rearrangement of 1..{len(word)}")

    @classmethod
    def of(cls, word: Iterable[int]) -> Permutation:
        return cls(tuple(word))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)


def rsk(pi: Permutation) -> tuple[Tableau, Tableau]:
    """Map a permutation to its insertion and recording tableau pair.

    The insertion tableau accumulates the word by row bumping; the recording
    tableau marks, with k, the cell created by the k-th insertion, so both
    grow through the same shape chain.
    """
    p = Tableau.normal([])
    q_rows: list[list[int]] = []
    for k, value in enumerate(pi.word, start=1):
        p, added = row_insert(p, value)
        if added.row > len(q_rows):
            q_rows.append([k])
        else:
            q_rows[added.row - 1].append(k)
    return p, Tableau.normal(q_rows)


def rsk_inverse(p: Tableau, q: Tableau) -> Permutation:
    """Recover the unique permutation whose insertion/recording pair is (p, q)."""
    if not (p.shape.is_normal and q.shape.is_normal and p.shape == q.shape):
        raise DomainError("insertion and recording tableaux must share one normal shape")
    if not (is_standard(p) and is_standard(q)):
        raise DomainError("both tableaux must be standard")

    placement = q.to_cell_map()
    cell_by_step = {step: cell for cell, step in placement.items()}
    word: list[int] = []
    current = p
    for k in range(p.size, 0, -1):
        current, value = reverse_bump(current, cell_by_step[k])
        word.append(value)
    word.reverse()
    return Permutation(tuple(word))


def knuth_neighbors(pi: Permutation) -> frozenset[Permutation]:
    """All permutations one elementary Knuth transformation away.

    Each transformation rewrites a window of three consecutive letters whose
    values, with x < y < z, match one of the patterns yxz<->yzx (swap the last
    two) or xzy<->zxy (swap the first two).
    """
    word = pi.word
    neighbors: set[Permutation] = set()
    for k in range(len(word) - 2):
        a, b, c = word[k : k + 3]
        if b < a < c or c < a < b:
            swapped = word[:k] + (a, c, b) + word[k + 3 :]
            neighbors.add(Permutation(swapped))
        if a < c < b or b < c < a:
            swapped = word[:k] + (b, a, c) + word[k + 3 :]
            neighbors.add(Permutation(swapped))
    return frozenset(neighbors)


def knuth_equivalent(pi: Permutation, tau: Permutation) -> bool:
    """Decide Knuth equivalence via equality of insertion tableaux."""
    if pi.n != tau.n:
        raise DomainError(f"length mismatch: {pi.n} vs {tau.n}")
    return rsk(pi)[0] == rsk(tau)[0]


def knuth_reachable_oracle(pi: Permutation, tau: Permutation, max_length: int = 8) -> bool:
    """Breadth-first closure of elementary transformations; test-grade oracle.

    Exponentially slower than ``knuth_equivalent`` but independent of it, so it
    serves as the cross-check.  Guarded by ``max_length``.
    """
    if pi.n != tau.n:
        raise DomainError(f"length mismatch: {pi.n} vs {tau.n}")
    if pi.n > max_length:
        raise ResourceLimitError(f"closure search bounded to length {max_length}")

    seen = {pi}
    frontier = deque([pi])
    while frontier:
        current = frontier.popleft()
        if current == tau:
            return True
        for neighbor in knuth_neighbors(current):
            if neighbor not in seen:
                seen.add(neighbor)
                frontier.append(neighbor)
    return False
