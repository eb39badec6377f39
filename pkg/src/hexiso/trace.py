"""Normalization trace - an ordered, replayable record of bad-row eliminations.

Each :class:`ShiftStep` stores which white run was closed, the direction the
moved part travelled along, the translation applied and how many vertices it
moved.  Replaying the steps on the input set reproduces the normalized set.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

from .hexgrid import Direction, VertexSet, row_key, translate, vertex_set


@dataclass(frozen=True)
class BadRow:
    """A white row strictly between two gray rows of the same direction."""

    direction: Direction
    key: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"dir": int(self.direction), "key": self.key}


@dataclass
class ShiftStep:
    """One elimination: a part of the set translated across a white run."""

    bad_row: BadRow
    agreeable: Direction
    shift: Tuple[int, int]
    moved: int
    side: str = "upper"  # "upper": keys above the run moved down; "lower": moved up
    rows: int = 1

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "dir": int(self.bad_row.direction),
            "key": self.bad_row.key,
            "agreeable": int(self.agreeable),
            "shift": [self.shift[0], self.shift[1]],
            "moved": self.moved,
            "side": self.side,
            "rows": self.rows,
        }


@dataclass
class NormalizationTrace:
    """Complete record of one normalization run."""

    steps: List[ShiftStep] = field(default_factory=list)
    iterations: int = 0
    potential_history: List[int] = field(default_factory=list)
    # per pass: whether it closed a direction-1 or direction-2 run
    compressing_passes: List[bool] = field(default_factory=list)

    # Aggregates
    steps_by_direction: Dict[int, int] = field(default_factory=dict)
    total_moved: int = 0

    def compute_aggregates(self) -> None:
        """Recompute aggregate fields from steps."""
        counts = {1: 0, 2: 0, 3: 0}
        for s in self.steps:
            counts[int(s.bad_row.direction)] += 1
        self.steps_by_direction = counts
        self.total_moved = sum(s.moved for s in self.steps)

    def potential_non_increasing(self) -> bool:
        """Whether the recorded potential never went up."""
        h = self.potential_history
        return all(b <= a for a, b in zip(h, h[1:]))

    def potential_strictly_decreasing(self) -> bool:
        """Whether every compressing pass shrank the potential."""
        h = self.potential_history
        return all(h[p + 1] < h[p] for p, flag in enumerate(self.compressing_passes) if flag)

    def replay(self, W: Iterable[Tuple[int, int]]) -> VertexSet:
        """Apply the recorded steps to ``W``."""
        current = vertex_set(W)
        for step in self.steps:
            d = int(step.bad_row.direction)
            if step.side == "upper":
                part = frozenset(v for v in current if row_key(v, d) > step.bad_row.key)
            else:
                part = frozenset(v for v in current if row_key(v, d) < step.bad_row.key)
            current = (current - part) | translate(part, step.shift)
        return current

    def to_dict(self) -> Dict[str, Any]:
        """Serialize the trace."""
        return {
            "steps": [s.to_dict() for s in self.steps],
            "iterations": self.iterations,
            "potential_history": list(self.potential_history),
            "compressing_passes": list(self.compressing_passes),
            "steps_by_direction": {str(k): v for k, v in self.steps_by_direction.items()},
            "total_moved": self.total_moved,
        }


__all__ = ["BadRow", "ShiftStep", "NormalizationTrace"]
