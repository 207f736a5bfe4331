"""Hierarchical 2D mesh states: capacity grids, greedy reassignment, turnaround.

A mesh state is a canonical (rectangular) grid of processors whose cells may
hold task IDs; smaller IDs mean higher priority, and processor capacity
strictly decreases along rows and columns.  Completions and rectifications
relocate tasks greedily between adjacent cells, one move at a time.  States
are immutable snapshots; every function returns new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import DomainError, InvalidStateError, ShapeError
from .jdt import SlidePolicy, first_corner, forward_slide_trace
from .partitions import Cell, Partition, SkewShape, inner_corners, skew_shape_of_cells
from .tableaux import ShapeKind, Tableau, is_partial


class StateKind(Enum):
    STANDARD = "standard"
    GENERALIZED = "generalized"


def _require_canonical(shape: Partition) -> None:
    if len(set(shape.parts)) > 1:
        raise DomainError(f"shape {shape.parts} is not canonical (equal row lengths)")


@dataclass(frozen=True)
class CapacityGrid:
    """Execution rate per processor cell, strictly decreasing along rows and columns."""

    shape: Partition
    rates: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        _require_canonical(self.shape)
        rates = tuple(tuple(Fraction(r) for r in row) for row in self.rates)
        object.__setattr__(self, "rates", rates)
        if len(rates) != self.shape.num_rows or any(
            len(row) != self.shape.row_len(i) for i, row in enumerate(rates, start=1)
        ):
            raise DomainError("capacity grid does not match its shape")
        for i, row in enumerate(rates):
            for j, rate in enumerate(row):
                if rate <= 0:
                    raise DomainError(f"capacity at ({i + 1},{j + 1}) must be positive")
                if j and row[j - 1] <= rate:
                    raise DomainError(f"capacities must strictly decrease along row {i + 1}")
                if i and rates[i - 1][j] <= rate:
                    raise DomainError(f"capacities must strictly decrease down column {j + 1}")

    def rate(self, cell: Cell) -> Fraction:
        if not self.shape.contains_cell(Cell(*cell)):
            raise DomainError(f"no processor at {tuple(cell)}")
        return self.rates[cell[0] - 1][cell[1] - 1]


def default_capacity_grid(shape: Partition) -> CapacityGrid:
    """Capacities 2^-(i+j-2): an admissible hierarchy for when none is supplied."""
    _require_canonical(shape)
    rates = tuple(
        tuple(Fraction(1, 2 ** (i + j)) for j in range(shape.row_len(i + 1)))
        for i in range(shape.num_rows)
    )
    return CapacityGrid(shape, rates)


@dataclass(frozen=True)
class TaskSet:
    """Positive resource requirements for tasks 1..m (index = task ID - 1)."""

    requirements: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        reqs = tuple(Fraction(r) for r in self.requirements)
        object.__setattr__(self, "requirements", reqs)
        for task, requirement in enumerate(reqs, start=1):
            if requirement <= 0:
                raise DomainError(f"requirement of task {task} must be positive")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Fraction | int | str]) -> TaskSet:
        ids = sorted(int(task) for task in mapping)
        if ids != list(range(1, len(ids) + 1)):
            raise DomainError(f"task IDs must be exactly 1..m, got {ids}")
        by_id = {int(task): Fraction(r) for task, r in mapping.items()}
        return cls(tuple(by_id[task] for task in ids))

    @property
    def m(self) -> int:
        return len(self.requirements)

    def requirement(self, task: int) -> Fraction:
        if not 1 <= task <= self.m:
            raise DomainError(f"no requirement for task {task}")
        return self.requirements[task - 1]

    @property
    def strictly_prioritized(self) -> bool:
        """True when higher priority (smaller ID) means strictly larger requirement."""
        return all(a > b for a, b in zip(self.requirements, self.requirements[1:]))


@dataclass(frozen=True)
class HmtState:
    """A canonical processor grid with an optional task ID per cell.

    Construction checks only structural well-formedness (grid dimensions,
    distinct positive task IDs).  Whether the occupied cells form a tableau
    region is a property of the state, surfaced by ``maximally_embedded`` and
    ``classify_state``, because legitimate operations (naive column sliding)
    can produce states whose occupied region is not a skew shape.
    """

    shape: Partition
    occupancy: tuple[tuple[int | None, ...], ...]
    capacities: CapacityGrid | None = None

    def __post_init__(self) -> None:
        _require_canonical(self.shape)
        grid = tuple(tuple(row) for row in self.occupancy)
        object.__setattr__(self, "occupancy", grid)
        if len(grid) != self.shape.num_rows or any(
            len(row) != self.shape.row_len(i) for i, row in enumerate(grid, start=1)
        ):
            raise DomainError("occupancy grid does not match its shape")
        seen: set[int] = set()
        for i, row in enumerate(grid, start=1):
            for j, task in enumerate(row, start=1):
                if task is None:
                    continue
                if not isinstance(task, int) or isinstance(task, bool) or task < 1:
                    raise DomainError(f"cell ({i},{j}) holds invalid task ID {task!r}")
                if task in seen:
                    raise DomainError(f"task {task} assigned to two cells")
                seen.add(task)
        if self.capacities is not None and self.capacities.shape != self.shape:
            raise DomainError("capacity grid shape differs from state shape")

    @classmethod
    def of(
        cls,
        shape: Iterable[int],
        rows: Iterable[Iterable[int | None]],
        capacities: CapacityGrid | None = None,
    ) -> HmtState:
        return cls(Partition(tuple(shape)), tuple(tuple(row) for row in rows), capacities)

    @property
    def task_count(self) -> int:
        return sum(1 for row in self.occupancy for task in row if task is not None)

    def get(self, i: int, j: int) -> int | None:
        """Task at 1-based (i, j); None when idle or outside the grid."""
        if 1 <= i <= len(self.occupancy) and 1 <= j <= len(self.occupancy[i - 1]):
            return self.occupancy[i - 1][j - 1]
        return None

    def task_cells(self) -> dict[int, Cell]:
        return {
            task: Cell(i, j)
            for i, row in enumerate(self.occupancy, start=1)
            for j, task in enumerate(row, start=1)
            if task is not None
        }

    def cell_of(self, task: int) -> Cell:
        cells = self.task_cells()
        if task not in cells:
            raise DomainError(f"task {task} is not assigned")
        return cells[task]

    def with_occupancy(self, grid: Iterable[Iterable[int | None]]) -> HmtState:
        return HmtState(self.shape, tuple(tuple(row) for row in grid), self.capacities)


@dataclass(frozen=True)
class MeshGraph:
    """Cells of a (skew) shape joined by unit horizontal/vertical links."""

    vertices: frozenset[Cell]
    edges: frozenset[tuple[Cell, Cell]]
    directed: bool


def mesh_graph(shape: SkewShape, directed: bool = False) -> MeshGraph:
    """Graph on the cells of ``shape``; horizontal edges point right, vertical down.

    Undirected graphs use the same (left-or-above, right-or-below) edge
    orientation as a canonical representative.
    """
    vertices = frozenset(shape.cells())
    edges = set()
    for cell in vertices:
        right = Cell(cell.row, cell.col + 1)
        below = Cell(cell.row + 1, cell.col)
        if right in vertices:
            edges.add((cell, right))
        if below in vertices:
            edges.add((cell, below))
    return MeshGraph(vertices, frozenset(edges), directed)


def maximally_embedded(state: HmtState) -> tuple[SkewShape, Tableau]:
    """The skew shape of the occupied cells and the tableau they form."""
    cells = {cell: task for task, cell in state.task_cells().items()}
    try:
        shape = skew_shape_of_cells(cells.keys())
    except ShapeError as exc:
        raise InvalidStateError(f"occupied cells do not form a tableau region: {exc}") from exc
    if not state.shape.contains(shape.outer):
        raise InvalidStateError("embedded shape exceeds the processor grid")
    return shape, Tableau.from_cells(cells)


def classify_state(state: HmtState) -> tuple[StateKind, ShapeKind]:
    """(standard | generalized, normal | skew) for a state with a valid region."""
    shape, embedded = maximally_embedded(state)
    kind = StateKind.STANDARD if is_partial(embedded) else StateKind.GENERALIZED
    form = ShapeKind.NORMAL if shape.is_normal else ShapeKind.SKEW
    return kind, form


def descent_pairs(state: HmtState) -> tuple[tuple[Cell, Cell], ...]:
    """Adjacent occupied pairs whose lower-priority cell holds the higher-priority task.

    Pairs are reported as (left-or-above cell, right-or-below cell) in
    row-major scan order.  Works on any occupancy, valid region or not.
    """
    pairs: list[tuple[Cell, Cell]] = []
    for i, row in enumerate(state.occupancy, start=1):
        for j, task in enumerate(row, start=1):
            if task is None:
                continue
            right = state.get(i, j + 1)
            if right is not None and right < task:
                pairs.append((Cell(i, j), Cell(i, j + 1)))
            below = state.get(i + 1, j)
            if below is not None and below < task:
                pairs.append((Cell(i, j), Cell(i + 1, j)))
    return tuple(pairs)


class Relocation(NamedTuple):
    """One task moved from a busy cell into the adjacent idle cell."""

    task: int
    source: Cell
    dest: Cell


@dataclass(frozen=True)
class Completion:
    """Trigger: the named task finished and vacated its cell."""

    task: int


@dataclass(frozen=True)
class RectifyCorner:
    """Trigger: a greedy relocation cascade opened at this idle corner."""

    corner: Cell


@dataclass(frozen=True)
class TraceEvent:
    trigger: Completion | RectifyCorner
    relocations: tuple[Relocation, ...]
    state: HmtState
    noop: bool = False


@dataclass(frozen=True)
class ReassignmentTrace:
    initial: HmtState
    events: tuple[TraceEvent, ...]

    @property
    def states(self) -> tuple[HmtState, ...]:
        """The assignment sequence: initial state plus one state per relocating event."""
        return (self.initial,) + tuple(
            event.state for event in self.events if not event.noop
        )

    @property
    def final(self) -> HmtState:
        return self.events[-1].state if self.events else self.initial


def _require_standard_normal(state: HmtState, op: str) -> None:
    kind, form = classify_state(state)
    if kind is not StateKind.STANDARD or form is not ShapeKind.NORMAL:
        raise DomainError(f"{op} needs a standard state of normal shape")


def reassign_on_completion(state: HmtState, task: int) -> tuple[HmtState, tuple[Relocation, ...]]:
    """Vacate the completed task's cell and run the greedy relocation cascade.

    While the idle cell has an occupied right or below neighbour, the
    higher-priority (smaller ID) of the two moves into it; the cascade stops
    when both are idle or outside the grid, which leaves the state standard
    and of normal shape again.
    """
    _require_standard_normal(state, "reassign_on_completion")
    hole = state.cell_of(task)
    grid = [list(row) for row in state.occupancy]
    grid[hole.row - 1][hole.col - 1] = None

    def occupant(i: int, j: int) -> int | None:
        if 1 <= i <= len(grid) and 1 <= j <= len(grid[i - 1]):
            return grid[i - 1][j - 1]
        return None

    relocations: list[Relocation] = []
    while True:
        right = occupant(hole.row, hole.col + 1)
        below = occupant(hole.row + 1, hole.col)
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            source = Cell(hole.row, hole.col + 1)
            mover = right
        else:
            source = Cell(hole.row + 1, hole.col)
            mover = below
        grid[hole.row - 1][hole.col - 1] = mover
        grid[source.row - 1][source.col - 1] = None
        relocations.append(Relocation(mover, source, hole))
        hole = source

    return state.with_occupancy(grid), tuple(relocations)


def reassignment_sequence(a0: HmtState, completions: Iterable[int]) -> ReassignmentTrace:
    """Fold completion events over ``a0``, recording each reassignment.

    ``completions`` must be distinct task IDs assigned in ``a0`` (a full
    permutation or any prefix of one).  The first m-1 completions trigger
    relocation cascades; a final m-th completion leaves the lone surviving
    assignment in place and is recorded as a flagged no-op event.
    """
    _require_standard_normal(a0, "reassignment_sequence")
    completions = [int(task) for task in completions]
    assigned = set(a0.task_cells())
    if len(set(completions)) != len(completions):
        raise DomainError("completion sequence repeats a task")
    missing = [task for task in completions if task not in assigned]
    if missing:
        raise DomainError(f"completion of unassigned task {missing[0]}")

    m = a0.task_count
    events: list[TraceEvent] = []
    state = a0
    for index, task in enumerate(completions):
        if index < m - 1:
            state, relocations = reassign_on_completion(state, task)
            events.append(TraceEvent(Completion(task), relocations, state))
        else:
            # The last task's completion empties the workload but moves nothing.
            events.append(TraceEvent(Completion(task), (), state, noop=True))
    return ReassignmentTrace(a0, tuple(events))


def rectify_assignment(a0: HmtState, slide_policy: SlidePolicy = first_corner) -> ReassignmentTrace:
    """Relocate greedily until the occupied region is left-justified and top-aligned.

    Each event opens the chosen idle corner of the embedded inner shape and
    cascades one full forward slide; after as many events as the inner shape
    has cells, the state is standard and of normal shape.
    """
    shape, embedded = maximally_embedded(a0)
    if not is_partial(embedded):
        raise DomainError("rectify_assignment needs a standard state")

    events: list[TraceEvent] = []
    state = a0
    current = embedded
    while not current.shape.is_normal:
        corners = inner_corners(current.shape.inner)
        corner = Cell(*slide_policy(corners))
        if corner not in corners:
            raise DomainError(f"slide policy returned {corner}, not one of {corners}")
        current, _, steps = forward_slide_trace(current, corner)
        grid = [list(row) for row in state.occupancy]
        relocations = []
        for step in steps:
            grid[step.hole.row - 1][step.hole.col - 1] = step.moved_entry
            grid[step.source.row - 1][step.source.col - 1] = None
            relocations.append(Relocation(step.moved_entry, step.source, step.hole))
        state = state.with_occupancy(grid)
        events.append(TraceEvent(RectifyCorner(corner), tuple(relocations), state))
    return ReassignmentTrace(a0, tuple(events))


def naive_slide_up(a0: HmtState) -> HmtState:
    """Compact every column upward, preserving the order of its tasks.

    The traditional relocation baseline: each column's occupants move to its
    topmost cells.  The result may be generalized and its occupied region may
    no longer be a tableau region.
    """
    rows = a0.shape.num_rows
    cols = a0.shape.row_len(1)
    grid: list[list[int | None]] = [[None] * cols for _ in range(rows)]
    for j in range(cols):
        column = [a0.occupancy[i][j] for i in range(rows) if a0.occupancy[i][j] is not None]
        for i, task in enumerate(column):
            grid[i][j] = task
    return a0.with_occupancy(grid)


def reassignment_equivalent(s1: HmtState, s2: HmtState) -> bool:
    """True when greedy rectification ends both states in the same assignment."""
    if s1.shape != s2.shape:
        raise DomainError("states live on different processor grids")
    final1 = rectify_assignment(s1).final
    final2 = rectify_assignment(s2).final
    return final1.occupancy == final2.occupancy


class TaskRun(NamedTuple):
    """Execution record: the cell a task ran on and how long it took."""

    task: int
    cell: Cell
    duration: Fraction


@dataclass(frozen=True)
class TurnaroundReport:
    total: Fraction
    per_task: tuple[TaskRun, ...]


def turnaround_sequential(
    a0: HmtState,
    tasks: TaskSet,
    caps: CapacityGrid,
    relocate: bool,
) -> TurnaroundReport:
    """Total turnaround of running tasks 1..m in priority order, one at a time.

    Each duration is requirement/capacity at the cell the task occupies when
    it starts.  With ``relocate`` the greedy cascade runs after every
    completion (relocations are cost-free), so each next task starts on the
    fastest processor; without it tasks run where initially assigned.
    """
    if caps.shape != a0.shape:
        raise DomainError("capacity grid shape differs from state shape")
    _require_standard_normal(a0, "turnaround_sequential")
    m = a0.task_count
    if sorted(a0.task_cells()) != list(range(1, m + 1)):
        raise DomainError("assigned tasks must be exactly 1..m")
    if tasks.m != m:
        raise DomainError(f"need requirements for exactly {m} tasks, got {tasks.m}")

    runs: list[TaskRun] = []
    state = a0
    for task in range(1, m + 1):
        cell = state.cell_of(task) if relocate else a0.cell_of(task)
        runs.append(TaskRun(task, cell, tasks.requirement(task) / caps.rate(cell)))
        if relocate:
            state, _ = reassign_on_completion(state, task)
    total = sum((run.duration for run in runs), Fraction(0))
    return TurnaroundReport(total, tuple(runs))
