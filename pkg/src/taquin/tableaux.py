"""Tableaux on normal and skew shapes: validity classes, row bumping, reading words.

A ``Tableau`` stores the full outer grid row-major, with ``None`` marking the
cells of the inner shape.  Entries are distinct positive integers but are not
required to be 1..n, so mid-insertion states are first-class values.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ResourceLimitError, TableauError
from .partitions import Cell, Partition, SkewShape, inner_corners, skew_shape_of_cells


class FillKind(Enum):
    GENERALIZED = "generalized"
    PARTIAL = "partial"
    STANDARD = "standard"


class ShapeKind(Enum):
    NORMAL = "normal"
    SKEW = "skew"


@dataclass(frozen=True)
class Tableau:
    """A (skew) shape together with one entry per cell of the shape."""

    shape: SkewShape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        outer = self.shape.outer
        if len(rows) != outer.num_rows:
            raise TableauError(
                f"expected {outer.num_rows} rows for shape {outer.parts}, got {len(rows)}"
            )
        seen: set[int] = set()
        for i, row in enumerate(rows, start=1):
            if len(row) != outer.row_len(i):
                raise TableauError(
                    f"row {i} has {len(row)} cells, shape wants {outer.row_len(i)}"
                )
            for j, entry in enumerate(row, start=1):
                if self.shape.contains_cell(Cell(i, j)):
                    if not isinstance(entry, int) or isinstance(entry, bool) or entry < 1:
                        raise TableauError(f"cell ({i},{j}) needs a positive entry, got {entry!r}")
                    if entry in seen:
                        raise TableauError(f"duplicate entry {entry}")
                    seen.add(entry)
                elif entry is not None:
                    raise TableauError(f"cell ({i},{j}) lies outside the shape but holds {entry!r}")

    @classmethod
    def normal(cls, rows: Sequence[Sequence[int]]) -> Tableau:
        """Build a normal-shape tableau from its entry rows."""
        shape = SkewShape(Partition(tuple(len(row) for row in rows)))
        return cls(shape, tuple(tuple(row) for row in rows))

    @classmethod
    def skew(
        cls,
        outer: Iterable[int],
        inner: Iterable[int],
        rows: Sequence[Sequence[int | None]],
    ) -> Tableau:
        """Build from raw shape sequences and a padded grid (None inside ``inner``)."""
        return cls(SkewShape.of(outer, inner), tuple(tuple(row) for row in rows))

    @classmethod
    def from_cells(cls, entries: Mapping[Cell, int]) -> Tableau:
        """Build from a cell-to-entry map; the skew shape is derived from the keys."""
        shape = skew_shape_of_cells(entries.keys())
        rows = tuple(
            tuple(
                entries.get(Cell(i, j))
                for j in range(1, shape.outer.row_len(i) + 1)
            )
            for i in range(1, shape.outer.num_rows + 1)
        )
        return cls(shape, rows)

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def entries(self) -> frozenset[int]:
        return frozenset(e for row in self.rows for e in row if e is not None)

    def get(self, i: int, j: int) -> int | None:
        """Entry at 1-based (i, j); None outside the grid or on an empty cell."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return None

    def cell_of(self, value: int) -> Cell:
        for i, row in enumerate(self.rows, start=1):
            for j, entry in enumerate(row, start=1):
                if entry == value:
                    return Cell(i, j)
        raise DomainError(f"entry {value} not present")

    def to_cell_map(self) -> dict[Cell, int]:
        return {
            Cell(i, j): entry
            for i, row in enumerate(self.rows, start=1)
            for j, entry in enumerate(row, start=1)
            if entry is not None
        }


def is_partial(t: Tableau) -> bool:
    """True when entries strictly increase along every row and column."""
    for i, row in enumerate(t.rows, start=1):
        for j, entry in enumerate(row, start=1):
            if entry is None:
                continue
            right = t.get(i, j + 1)
            below = t.get(i + 1, j)
            if right is not None and right <= entry:
                return False
            if below is not None and below <= entry:
                return False
    return True


def is_standard(t: Tableau) -> bool:
    """True when the tableau is partial and its entries are exactly 1..n."""
    return is_partial(t) and t.entries == frozenset(range(1, t.size + 1))


def classify(t: Tableau) -> tuple[FillKind, ShapeKind]:
    """The strongest fill class of ``t`` and whether its shape is normal or skew."""
    form = ShapeKind.NORMAL if t.shape.is_normal else ShapeKind.SKEW
    if not is_partial(t):
        return FillKind.GENERALIZED, form
    if t.entries == frozenset(range(1, t.size + 1)):
        return FillKind.STANDARD, form
    return FillKind.PARTIAL, form


def _require_normal_partial(t: Tableau, op: str) -> None:
    if not t.shape.is_normal:
        raise DomainError(f"{op} needs a normal-shape tableau")
    if not is_partial(t):
        raise DomainError(f"{op} needs strictly increasing rows and columns")


def row_insert(p: Tableau, x: int) -> tuple[Tableau, Cell]:
    """Insert ``x`` by row bumping, returning the new tableau and the added cell.

    Each row either absorbs the incoming value at its end or has its smallest
    entry exceeding the value displaced into the next row.
    """
    _require_normal_partial(p, "row_insert")
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise DomainError(f"can only insert positive integers, got {x!r}")
    if x in p.entries:
        raise DomainError(f"entry {x} already present")

    rows = [list(row) for row in p.rows]
    current = x
    i = 0
    while i < len(rows):
        row = rows[i]
        pos = bisect_right(row, current)
        if pos == len(row):
            break
        current, row[pos] = row[pos], current
        i += 1
    if i == len(rows):
        rows.append([])
    rows[i].append(current)
    return Tableau.normal(rows), Cell(i + 1, len(rows[i]))


def reverse_bump(p: Tableau, cell: Cell) -> tuple[Tableau, int]:
    """Undo a row insertion that ended at ``cell`` (an inner corner of the shape)."""
    _require_normal_partial(p, "reverse_bump")
    cell = Cell(*cell)
    if cell not in inner_corners(p.shape.outer):
        raise DomainError(f"{cell} is not an inner corner of {p.shape.outer.parts}")

    rows = [list(row) for row in p.rows]
    current = rows[cell.row - 1].pop()
    if not rows[cell.row - 1]:
        rows.pop()
    for k in range(cell.row - 2, -1, -1):
        row = rows[k]
        pos = bisect_left(row, current) - 1
        current, row[pos] = row[pos], current
    return Tableau.normal(rows), current


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Concatenate the rows bottom to top, each left to right, skipping empty cells."""
    word: list[int] = []
    for row in reversed(t.rows):
        word.extend(e for e in row if e is not None)
    return tuple(word)


def enumerate_syt(shape: Partition, max_cells: int = 12) -> list[Tableau]:
    """All standard fillings of ``shape``, by brute-force backtracking.

    Cells are filled in row-major order trying candidates in ascending order,
    so the output order is deterministic.  Guarded by ``max_cells`` because the
    count grows factorially.
    """
    n = shape.n
    if n > max_cells:
        raise ResourceLimitError(f"shape has {n} cells, enumeration bound is {max_cells}")

    cells = [(c.row - 1, c.col - 1) for c in shape.cells()]
    grid = [[0] * length for length in shape.parts]
    used = [False] * (n + 1)
    results: list[Tableau] = []

    def fill(k: int) -> None:
        if k == n:
            results.append(Tableau.normal([row[:] for row in grid]))
            return
        i, j = cells[k]
        floor = max(
            grid[i][j - 1] if j else 0,
            grid[i - 1][j] if i else 0,
        )
        for value in range(floor + 1, n + 1):
            if used[value]:
                continue
            used[value] = True
            grid[i][j] = value
            fill(k + 1)
            grid[i][j] = 0
            used[value] = False

    fill(0)
    return results
