"""JSON encoding/decoding for every value the CLI reads or writes.

Encoders return plain JSON-compatible objects; ``canonical_dumps`` renders
them with sorted keys and fixed spacing so output is byte-stable.  Rationals
travel as "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .errors import DomainError
from .hms import (
    CapacityGrid,
    Completion,
    HmtState,
    ReassignmentTrace,
    RectifyCorner,
    Relocation,
    TaskSet,
    TraceEvent,
)
from .jdt import SlideStep
from .partitions import Cell, Partition, SkewShape
from .rsk import Permutation
from .tableaux import Tableau


def canonical_dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _expect_int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{what} must be an integer, got {value!r}")
    return value


def _expect_list(value: Any, what: str) -> list:
    if not isinstance(value, list):
        raise DomainError(f"{what} must be a JSON array, got {value!r}")
    return value


def _expect_object(value: Any, what: str) -> dict:
    if not isinstance(value, dict):
        raise DomainError(f"{what} must be a JSON object, got {value!r}")
    return value


def encode_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def decode_fraction(value: Any) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad rational {value!r}") from exc
    raise DomainError(f"rationals must be 'p/q' strings or integers, got {value!r}")


def encode_partition(shape: Partition) -> list[int]:
    return list(shape.parts)


def decode_partition(obj: Any) -> Partition:
    parts = _expect_list(obj, "partition")
    return Partition(tuple(_expect_int(p, "row length") for p in parts))


def encode_skew_shape(shape: SkewShape) -> dict:
    return {"outer": encode_partition(shape.outer), "inner": encode_partition(shape.inner)}


def decode_skew_shape(obj: Any) -> SkewShape:
    data = _expect_object(obj, "skew shape")
    return SkewShape(
        decode_partition(data.get("outer", [])),
        decode_partition(data.get("inner", [])),
    )


def encode_cell(cell: Cell) -> list[int]:
    return [cell.row, cell.col]


def decode_cell(obj: Any) -> Cell:
    pair = _expect_list(obj, "cell")
    if len(pair) != 2:
        raise DomainError(f"cell must be [row, col], got {obj!r}")
    return Cell(_expect_int(pair[0], "row"), _expect_int(pair[1], "col"))


def encode_tableau(t: Tableau) -> dict:
    return {
        "outer": encode_partition(t.shape.outer),
        "inner": encode_partition(t.shape.inner),
        "rows": [list(row) for row in t.rows],
    }


def decode_tableau(obj: Any) -> Tableau:
    data = _expect_object(obj, "tableau")
    rows = _expect_list(data.get("rows", []), "tableau rows")
    grid = tuple(
        tuple(
            None if entry is None else _expect_int(entry, "tableau entry")
            for entry in _expect_list(row, "tableau row")
        )
        for row in rows
    )
    return Tableau(
        SkewShape(
            decode_partition(data.get("outer", [])),
            decode_partition(data.get("inner", [])),
        ),
        grid,
    )


def encode_permutation(pi: Permutation) -> list[int]:
    return list(pi.word)


def decode_permutation(obj: Any) -> Permutation:
    word = _expect_list(obj, "permutation")
    return Permutation(tuple(_expect_int(x, "letter") for x in word))


def encode_capacity_rates(caps: CapacityGrid) -> list[list[str]]:
    return [[encode_fraction(rate) for rate in row] for row in caps.rates]


def decode_capacity_grid(obj: Any) -> CapacityGrid:
    data = _expect_object(obj, "capacity grid")
    shape = decode_partition(data.get("shape", []))
    rows = _expect_list(data.get("c", []), "capacity rows")
    rates = tuple(
        tuple(decode_fraction(rate) for rate in _expect_list(row, "capacity row"))
        for row in rows
    )
    return CapacityGrid(shape, rates)


def encode_hmt_state(state: HmtState) -> dict:
    obj: dict[str, Any] = {
        "shape": encode_partition(state.shape),
        "cells": [list(row) for row in state.occupancy],
    }
    if state.capacities is not None:
        obj["capacities"] = encode_capacity_rates(state.capacities)
    return obj


def decode_hmt_state(obj: Any) -> HmtState:
    data = _expect_object(obj, "mesh state")
    shape = decode_partition(data.get("shape", []))
    rows = _expect_list(data.get("cells", []), "occupancy rows")
    grid = tuple(
        tuple(
            None if task is None else _expect_int(task, "task ID")
            for task in _expect_list(row, "occupancy row")
        )
        for row in rows
    )
    capacities = None
    if "capacities" in data and data["capacities"] is not None:
        rates = tuple(
            tuple(decode_fraction(rate) for rate in _expect_list(row, "capacity row"))
            for row in _expect_list(data["capacities"], "capacities")
        )
        capacities = CapacityGrid(shape, rates)
    return HmtState(shape, grid, capacities)


def encode_task_set(tasks: TaskSet) -> dict[str, str]:
    return {
        str(task): encode_fraction(requirement)
        for task, requirement in enumerate(tasks.requirements, start=1)
    }


def decode_task_set(obj: Any) -> TaskSet:
    data = _expect_object(obj, "task requirements")
    mapping: dict[int, Fraction] = {}
    for key, value in data.items():
        try:
            task = int(key)
        except ValueError as exc:
            raise DomainError(f"task IDs must be integers, got {key!r}") from exc
        mapping[task] = decode_fraction(value)
    return TaskSet.from_mapping(mapping)


def encode_relocation(move: Relocation) -> dict:
    return {
        "task": move.task,
        "from": encode_cell(move.source),
        "to": encode_cell(move.dest),
    }


def encode_trigger(trigger: Completion | RectifyCorner) -> dict:
    if isinstance(trigger, Completion):
        return {"completed": trigger.task}
    return {"rectify_corner": encode_cell(trigger.corner)}


def encode_trace_event(event: TraceEvent) -> dict:
    obj: dict[str, Any] = {
        "trigger": encode_trigger(event.trigger),
        "relocations": [encode_relocation(move) for move in event.relocations],
        "state": encode_hmt_state(event.state),
    }
    if event.noop:
        obj["noop"] = True
    return obj


def encode_trace(trace: ReassignmentTrace) -> dict:
    return {
        "initial": encode_hmt_state(trace.initial),
        "events": [encode_trace_event(event) for event in trace.events],
    }


def decode_trace(obj: Any) -> ReassignmentTrace:
    data = _expect_object(obj, "trace")
    initial = decode_hmt_state(data.get("initial"))
    events = []
    for raw in _expect_list(data.get("events", []), "events"):
        entry = _expect_object(raw, "event")
        trigger_obj = _expect_object(entry.get("trigger"), "trigger")
        trigger: Completion | RectifyCorner
        if "completed" in trigger_obj:
            trigger = Completion(_expect_int(trigger_obj["completed"], "completed task"))
        elif "rectify_corner" in trigger_obj:
            trigger = RectifyCorner(decode_cell(trigger_obj["rectify_corner"]))
        else:
            raise DomainError(f"unknown trigger {trigger_obj!r}")
        relocations = tuple(
            Relocation(
                _expect_int(_expect_object(move, "relocation").get("task"), "task"),
                decode_cell(_expect_object(move, "relocation").get("from")),
                decode_cell(_expect_object(move, "relocation").get("to")),
            )
            for move in _expect_list(entry.get("relocations", []), "relocations")
        )
        events.append(
            TraceEvent(
                trigger,
                relocations,
                decode_hmt_state(entry.get("state")),
                bool(entry.get("noop", False)),
            )
        )
    return ReassignmentTrace(initial, tuple(events))


def encode_slide_steps(steps: Sequence[SlideStep]) -> list[dict]:
    return [
        {
            "hole": encode_cell(step.hole),
            "moved_entry": step.moved_entry,
            "from": encode_cell(step.source),
        }
        for step in steps
    ]
