"""Forward and backward jeu de taquin slides, rectification, and slide equivalence.

A forward slide opens a hole at an inner corner of the inner shape and pulls
the smaller of the right/below entries into it until the hole reaches an inner
corner of the outer shape; a backward slide is the mirror image and inverts it.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Sequence

from .errors import DomainError
from .partitions import Cell, SkewShape, inner_corners, outer_corners
from .tableaux import Tableau, is_partial


class SlideStep(NamedTuple):
    """One hole move: ``moved_entry`` slid from ``source`` into ``hole``."""

    hole: Cell
    moved_entry: int
    source: Cell


SlidePolicy = Callable[[Sequence[Cell]], Cell]


def first_corner(corners: Sequence[Cell]) -> Cell:
    """Default slide policy: the lexicographically smallest (row, col) corner."""
    return corners[0]


def forward_slide_trace(p: Tableau, start: Cell) -> tuple[Tableau, Cell, tuple[SlideStep, ...]]:
    """Forward slide returning the result, the vacated cell, and every hole move."""
    start = Cell(*start)
    if not is_partial(p):
        raise DomainError("slides are defined on strictly increasing tableaux")
    if start not in inner_corners(p.shape.inner):
        raise DomainError(f"{start} is not an inner corner of {p.shape.inner.parts}")

    entries = p.to_cell_map()
    stops = set(inner_corners(p.shape.outer))
    hole = start
    steps: list[SlideStep] = []
    while hole not in stops:
        right = entries.get(Cell(hole.row, hole.col + 1))
        below = entries.get(Cell(hole.row + 1, hole.col))
        assert right != below or right is None  # entries are distinct
        if below is None or (right is not None and right < below):
            source = Cell(hole.row, hole.col + 1)
            moved = right
        else:
            source = Cell(hole.row + 1, hole.col)
            moved = below
        assert moved is not None  # a non-corner hole always has an occupied neighbor
        steps.append(SlideStep(hole, moved, source))
        entries[hole] = moved
        del entries[source]
        hole = source

    new_shape = SkewShape(
        p.shape.outer.remove_corner(hole),
        p.shape.inner.remove_corner(start),
    )
    return _rebuild(new_shape, entries), hole, tuple(steps)


def backward_slide_trace(p: Tableau, start: Cell) -> tuple[Tableau, Cell, tuple[SlideStep, ...]]:
    """Backward slide returning the result, the vacated cell, and every hole move."""
    start = Cell(*start)
    if not is_partial(p):
        raise DomainError("slides are defined on strictly increasing tableaux")
    if start not in outer_corners(p.shape.outer):
        raise DomainError(f"{start} is not an outer corner of {p.shape.outer.parts}")

    entries = p.to_cell_map()
    stops = set(outer_corners(p.shape.inner))
    hole = start
    steps: list[SlideStep] = []
    while hole not in stops:
        above = entries.get(Cell(hole.row - 1, hole.col))
        left = entries.get(Cell(hole.row, hole.col - 1))
        assert above != left or above is None
        if left is None or (above is not None and above > left):
            source = Cell(hole.row - 1, hole.col)
            moved = above
        else:
            source = Cell(hole.row, hole.col - 1)
            moved = left
        assert moved is not None
        steps.append(SlideStep(hole, moved, source))
        entries[hole] = moved
        del entries[source]
        hole = source

    new_shape = SkewShape(
        p.shape.outer.add_corner(start),
        p.shape.inner.add_corner(hole),
    )
    return _rebuild(new_shape, entries), hole, tuple(steps)


def _rebuild(shape: SkewShape, entries: dict[Cell, int]) -> Tableau:
    rows = tuple(
        tuple(entries.get(Cell(i, j)) for j in range(1, shape.outer.row_len(i) + 1))
        for i in range(1, shape.outer.num_rows + 1)
    )
    return Tableau(shape, rows)


def forward_slide(p: Tableau, start: Cell) -> tuple[Tableau, Cell]:
    """Slide into an inner corner of the inner shape; returns (result, vacated cell)."""
    result, vacated, _ = forward_slide_trace(p, start)
    return result, vacated


def backward_slide(p: Tableau, start: Cell) -> tuple[Tableau, Cell]:
    """Slide into an outer corner of the outer shape; returns (result, vacated cell)."""
    result, vacated, _ = backward_slide_trace(p, start)
    return result, vacated


def rectify(p: Tableau, slide_policy: SlidePolicy = first_corner) -> Tableau:
    """Forward-slide until the inner shape is empty.

    The result does not depend on ``slide_policy``; the default picks the
    lexicographically smallest (row, col) inner corner so traces are stable.
    """
    current = p
    while not current.shape.is_normal:
        corners = inner_corners(current.shape.inner)
        start = Cell(*slide_policy(corners))
        if start not in corners:
            raise DomainError(f"slide policy returned {start}, not one of {corners}")
        current, _ = forward_slide(current, start)
    return current


def jdt_equivalent(p1: Tableau, p2: Tableau) -> bool:
    """True when both tableaux rectify to the same normal-shape tableau."""
    return rectify(p1) == rectify(p2)
