"""Bad-row elimination: compress a set until no white row separates gray rows.

A white row of direction ``i`` lying between two gray rows splits ``W`` into
a lower part and an upper part whose neighbourhoods are disjoint (each vertex
has a single direction-``i`` edge).  Translating one part along the rows of
another direction ``j`` closes the gap without increasing ``|N(W)|`` and
without touching direction-``j`` keys.

:func:`normalize` repeats passes of

1. direction-1 runs, closed along direction-2 rows;
2. direction-2 runs, closed along direction-1 rows;
3. direction-3 rows, closed one row at a time by moving the part lying in the
   smaller component of the bounding parallelogram along the rows that carry
   its longer side;

until no bad row remains.  The bounding parallelogram never grows, and it
shrinks in every pass that closes a direction-1 or direction-2 run; its
vertex count is recorded as the potential.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .errors import (
    EmptySetError,
    InvalidArgumentsError,
    NonTerminationError,
    PreconditionError,
)
from .hexgrid import (
    DIRECTIONS,
    KEY_SHIFT,
    Direction,
    Vertex,
    VertexSet,
    period_vector,
    row_intersection,
    row_key,
    translate,
    vertex_set,
)
from .perimeter import gray_keys, gray_row_counts
from .trace import BadRow, NormalizationTrace, ShiftStep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Parallelogram:
    """Vertices whose direction-1 and direction-2 keys lie in two closed ranges."""

    d1_range: Tuple[int, int]
    d2_range: Tuple[int, int]

    @property
    def width1(self) -> int:
        return self.d1_range[1] - self.d1_range[0] + 1

    @property
    def width2(self) -> int:
        return self.d2_range[1] - self.d2_range[0] + 1

    @property
    def vertex_count(self) -> int:
        """Two vertices per (direction-1 row, direction-2 row) pair."""
        return 2 * self.width1 * self.width2

    @property
    def d3_range(self) -> Tuple[int, int]:
        return (
            self.d1_range[0] + self.d2_range[0],
            self.d1_range[1] + self.d2_range[1] + 1,
        )

    def vertices(self) -> VertexSet:
        """All vertices of the parallelogram."""
        out = set()
        for a in range(self.d1_range[0], self.d1_range[1] + 1):
            for b in range(self.d2_range[0], self.d2_range[1] + 1):
                out.update(row_intersection(1, a, 2, b))
        return frozenset(out)

    def count_below(self, key3: int) -> int:
        """Number of vertices whose direction-3 key is below ``key3``."""
        b0, b1 = self.d2_range
        total = 0
        for a in range(self.d1_range[0], self.d1_range[1] + 1):
            for e in (0, 1):
                # vertex of cell (a, b) with offset e has d3-key a + b + e
                top = min(b1, key3 - 1 - a - e)
                if top >= b0:
                    total += top - b0 + 1
        return total

    def count_above(self, key3: int) -> int:
        """Number of vertices whose direction-3 key is above ``key3``."""
        return self.vertex_count - self.count_below(key3 + 1)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "d1_range": list(self.d1_range),
            "d2_range": list(self.d2_range),
            "d3_range": list(self.d3_range),
            "vertex_count": self.vertex_count,
        }


# ---------------------------------------------------------------------------
# Bad rows
# ---------------------------------------------------------------------------

def _nonempty(W: Iterable[Tuple[int, int]]) -> VertexSet:
    members = W if isinstance(W, frozenset) else vertex_set(W)
    if not members:
        raise EmptySetError("operation needs a non-empty vertex set")
    return members  # type: ignore[return-value]


def find_bad_rows(W: Iterable[Tuple[int, int]], d: int) -> List[BadRow]:
    """All white direction-``d`` rows between the extreme gray rows, ascending."""
    members = _nonempty(W)
    direction = Direction(d)
    keys = gray_keys(members, direction)
    lo, hi = min(keys), max(keys)
    return [BadRow(direction, k) for k in range(lo + 1, hi) if k not in keys]


def has_bad_rows(W: Iterable[Tuple[int, int]], directions: Iterable[int] = DIRECTIONS) -> bool:
    """Whether any of ``directions`` has a bad row."""
    members = _nonempty(W)
    for d in directions:
        keys = gray_keys(members, d)
        if len(keys) != max(keys) - min(keys) + 1:
            return True
    return False


def _white_run(keys: Iterable[int], key: int) -> Tuple[int, int]:
    """Maximal interval of white keys containing ``key``."""
    gray = set(keys)
    start, end = key, key
    while start - 1 not in gray:
        start -= 1
    while end + 1 not in gray:
        end += 1
    return start, end


def bounding_parallelogram(W: Iterable[Tuple[int, int]]) -> Parallelogram:
    """Smallest parallelogram containing ``W`` (bad rows allowed)."""
    members = _nonempty(W)
    k1 = gray_keys(members, 1)
    k2 = gray_keys(members, 2)
    return Parallelogram((min(k1), max(k1)), (min(k2), max(k2)))


def parallelogram(W: Iterable[Tuple[int, int]]) -> Parallelogram:
    """The parallelogram ``P_W``, which has ``2 * l1 * l2`` vertices.

    Raises:
        PreconditionError: if ``W`` has a bad row of direction 1 or 2.
    """
    members = _nonempty(W)
    if has_bad_rows(members, (1, 2)):
        raise PreconditionError("parallelogram needs a set without direction-1/2 bad rows")
    return bounding_parallelogram(members)


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

def _eliminate(
    members: VertexSet,
    b: BadRow,
    j: int,
    side: str,
    rows: Optional[int],
) -> Tuple[VertexSet, ShiftStep]:
    i = Direction(b.direction)
    if j not in (1, 2, 3):
        raise InvalidArgumentsError(f"direction must be 1, 2 or 3, got {j!r}")
    j = Direction(j)
    if j == i:
        raise InvalidArgumentsError("agreeable direction must differ from the bad row's direction")
    if side not in ("upper", "lower"):
        raise InvalidArgumentsError(f"side must be 'upper' or 'lower', got {side!r}")

    keys = gray_keys(members, i)
    if b.key in keys or not (min(keys) < b.key < max(keys)):
        raise PreconditionError(f"row {b.key} of direction {int(i)} is not a bad row")

    start, end = _white_run(keys, b.key)
    g = end - start + 1
    step_rows = g if rows is None else rows
    if not 1 <= step_rows <= g:
        raise InvalidArgumentsError(f"rows must lie in [1, {g}], got {step_rows!r}")

    if side == "upper":
        part = frozenset(v for v in members if row_key(v, i) > b.key)
        factor = -KEY_SHIFT[j][i]
    else:
        part = frozenset(v for v in members if row_key(v, i) < b.key)
        factor = KEY_SHIFT[j][i]
    px, py = period_vector(j)
    shift = (factor * step_rows * px, factor * step_rows * py)

    result = (members - part) | translate(part, shift)
    step = ShiftStep(
        bad_row=BadRow(i, b.key),
        agreeable=j,
        shift=shift,
        moved=len(part),
        side=side,
        rows=step_rows,
    )
    return result, step


def eliminate_bad_row(
    W: Iterable[Tuple[int, int]],
    b: BadRow,
    j: int,
    side: str = "upper",
    rows: Optional[int] = None,
) -> VertexSet:
    """Close the white run containing ``b`` by translating one side along direction-``j`` rows.

    By default the part above the run moves down by the run length ``g``, so
    the gray keys of ``b.direction`` become contiguous; ``side="lower"`` moves
    the part below the run up instead and ``rows`` shortens the move.

    Raises:
        PreconditionError: if ``b`` is not a bad row of ``W``.
        InvalidArgumentsError: if ``j == b.direction`` or ``rows`` is out of range.
    """
    result, _ = _eliminate(_nonempty(W), b, j, side, rows)
    return result


def _smaller_side(box: Parallelogram, run: Tuple[int, int]) -> str:
    """Side of a direction-3 run whose parallelogram component is smaller.

    Ties go to the upper component.
    """
    below = box.count_below(run[0])
    above = box.count_above(run[1])
    return "lower" if below < above else "upper"


def _longest_side_direction(box: Parallelogram) -> Direction:
    """Direction whose rows carry the longer side of ``box``.

    A direction-1 row crosses every direction-2 row of the box and vice
    versa.  Ties go to direction 1.
    """
    return Direction.D2 if box.width1 > box.width2 else Direction.D1


def normalize(W: Iterable[Tuple[int, int]]) -> Tuple[VertexSet, NormalizationTrace]:
    """Transform ``W`` into a set of equal size, no more neighbours and no bad rows.

    Returns:
        The normalized set and the trace of eliminations.  The trace's
        potential history starts with the bounding parallelogram of the input
        and gains one entry per pass.

    Raises:
        EmptySetError: for the empty set.
        NonTerminationError: if the pass count exceeds ``4 * (l1 + l2 + l3 + |W|)``.
    """
    current = _nonempty(W)
    cap = 4 * (sum(gray_row_counts(current)) + len(current))
    trace = NormalizationTrace()
    trace.potential_history.append(bounding_parallelogram(current).vertex_count)

    while has_bad_rows(current):
        trace.iterations += 1
        if trace.iterations > cap:
            raise NonTerminationError(
                f"normalization exceeded {cap} passes for a set of size {len(current)}"
            )

        before = len(trace.steps)
        for d, j in ((Direction.D1, Direction.D2), (Direction.D2, Direction.D1)):
            while True:
                bad = find_bad_rows(current, d)
                if not bad:
                    break
                current, step = _eliminate(current, bad[0], j, "upper", None)
                trace.steps.append(step)

        potential = parallelogram(current).vertex_count
        compressed = len(trace.steps) > before
        if potential > trace.potential_history[-1]:
            logger.warning(
                "potential rose from %d to %d in pass %d",
                trace.potential_history[-1],
                potential,
                trace.iterations,
            )
        elif compressed and potential == trace.potential_history[-1]:
            logger.warning("pass %d closed runs without shrinking the potential", trace.iterations)
        trace.compressing_passes.append(compressed)
        trace.potential_history.append(potential)

        while True:
            bad = find_bad_rows(current, Direction.D3)
            if not bad:
                break
            b = bad[0]
            box = bounding_parallelogram(current)
            run = _white_run(gray_keys(current, Direction.D3), b.key)
            side = _smaller_side(box, run)
            current, step = _eliminate(current, b, _longest_side_direction(box), side, 1)
            trace.steps.append(step)

        logger.debug(
            "pass %d: %d steps so far, potential %d",
            trace.iterations,
            len(trace.steps),
            potential,
        )

    trace.compute_aggregates()
    return current, trace


def normalized_vertices(W: Iterable[Tuple[int, int]]) -> List[Vertex]:
    """Sorted vertices of ``normalize(W)``."""
    result, _ = normalize(W)
    return sorted(result)


__all__ = [
    "Parallelogram",
    "find_bad_rows",
    "has_bad_rows",
    "bounding_parallelogram",
    "parallelogram",
    "eliminate_bad_row",
    "normalize",
    "normalized_vertices",
]
