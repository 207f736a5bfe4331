"""Seeded random instance generators for property runs and tests.

Everything takes an explicit ``random.Random`` so callers control
reproducibility; nothing here touches global RNG state.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .hms import CapacityGrid, HmtState, TaskSet
from .partitions import Cell, Partition, SkewShape
from .tableaux import Tableau


def random_partition_in_box(
    rng: Random, max_rows: int, max_cols: int, min_cells: int = 1
) -> Partition:
    """A partition fitting in a max_rows x max_cols box with at least min_cells cells."""
    while True:
        parts: list[int] = []
        width = max_cols
        for _ in range(rng.randint(1, max_rows)):
            width = rng.randint(1, width)
            parts.append(width)
        shape = Partition(tuple(parts))
        if shape.n >= min_cells:
            return shape


def random_subpartition(rng: Random, outer: Partition, proper: bool = True) -> Partition:
    """A partition contained in ``outer``; proper means strictly smaller."""
    while True:
        parts: list[int] = []
        ceiling = outer.parts[0] if outer.parts else 0
        for length in outer.parts:
            ceiling = rng.randint(0, min(length, ceiling))
            parts.append(ceiling)
        while parts and parts[-1] == 0:
            parts.pop()
        inner = Partition(tuple(parts))
        if not proper or inner.n < outer.n:
            return inner


def random_standard_filling(rng: Random, shape: SkewShape) -> Tableau:
    """A uniformly-seeded random standard filling of ``shape`` with 1..size.

    Values are placed in increasing order on a random addable cell (one whose
    left and above neighbours inside the shape are already filled).
    """
    remaining = set(shape.cells())
    entries: dict[Cell, int] = {}

    def addable(cell: Cell) -> bool:
        left = Cell(cell.row, cell.col - 1)
        above = Cell(cell.row - 1, cell.col)
        return (left not in remaining) and (above not in remaining)

    for value in range(1, shape.size + 1):
        frontier = sorted(cell for cell in remaining if addable(cell))
        cell = frontier[rng.randrange(len(frontier))]
        entries[cell] = value
        remaining.remove(cell)
    if not entries:
        rows = tuple(
            tuple(None for _ in range(shape.outer.row_len(i)))
            for i in range(1, shape.outer.num_rows + 1)
        )
        return Tableau(shape, rows)
    return Tableau.from_cells(entries)


def random_skew_syt(rng: Random, max_cells: int, min_cells: int = 1) -> Tableau:
    """A random standard tableau of random skew shape with a bounded cell count."""
    while True:
        outer = random_partition_in_box(rng, max_rows=4, max_cols=4, min_cells=min_cells)
        inner = random_subpartition(rng, outer)
        shape = SkewShape(outer, inner)
        if min_cells <= shape.size <= max_cells:
            return random_standard_filling(rng, shape)


def random_standard_assignment(
    rng: Random,
    max_rows: int = 4,
    max_cols: int = 4,
    min_tasks: int = 2,
) -> HmtState:
    """A standard normal-shape mesh state on a random canonical grid."""
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    while rows * cols < min_tasks:
        rows = rng.randint(1, max_rows)
        cols = rng.randint(1, max_cols)
    grid_shape = Partition((cols,) * rows)
    region = random_partition_in_box(rng, rows, cols, min_cells=min_tasks)
    filling = random_standard_filling(rng, SkewShape(region))
    grid: list[list[int | None]] = [[None] * cols for _ in range(rows)]
    for cell, task in filling.to_cell_map().items():
        grid[cell.row - 1][cell.col - 1] = task
    return HmtState(grid_shape, tuple(tuple(row) for row in grid))


def random_skew_assignment(
    rng: Random,
    max_rows: int = 4,
    max_cols: int = 4,
    min_tasks: int = 1,
) -> HmtState:
    """A standard skew-shape mesh state (nonempty embedded inner shape)."""
    while True:
        rows = rng.randint(1, max_rows)
        cols = rng.randint(1, max_cols)
        if rows * cols < min_tasks + 1:
            continue
        grid_shape = Partition((cols,) * rows)
        outer = random_partition_in_box(rng, rows, cols, min_cells=min_tasks + 1)
        inner = random_subpartition(rng, outer)
        shape = SkewShape(outer, inner)
        if not inner.parts or shape.size < min_tasks:
            continue
        filling = random_standard_filling(rng, shape)
        grid: list[list[int | None]] = [[None] * cols for _ in range(rows)]
        for cell, task in filling.to_cell_map().items():
            grid[cell.row - 1][cell.col - 1] = task
        return HmtState(grid_shape, tuple(tuple(row) for row in grid))


def random_hierarchical_capacities(rng: Random, shape: Partition) -> CapacityGrid:
    """Random positive rational rates strictly decreasing along rows and columns."""
    rows = shape.num_rows
    cols = shape.row_len(1)
    rates: list[list[Fraction]] = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            neighbours = []
            if i:
                neighbours.append(rates[i - 1][j])
            if j:
                neighbours.append(rates[i][j - 1])
            if neighbours:
                # Strictly below both the upper and left neighbour.
                cap = min(neighbours)
                rates[i][j] = cap * Fraction(rng.randint(1, 9), 10)
            else:
                rates[i][j] = Fraction(rng.randint(1, 64), rng.randint(1, 8))
    return CapacityGrid(shape, tuple(tuple(row) for row in rates))


def random_requirements(rng: Random, m: int, decreasing: bool = False) -> TaskSet:
    """Random positive rational requirements; optionally strictly decreasing by task."""
    if decreasing:
        values: list[Fraction] = []
        current = Fraction(rng.randint(50, 100), rng.randint(1, 4))
        for _ in range(m):
            values.append(current)
            current = current * Fraction(rng.randint(1, 9), 10)
        return TaskSet(tuple(values))
    return TaskSet(tuple(Fraction(rng.randint(1, 100), rng.randint(1, 20)) for _ in range(m)))
