"""Extremal set families built from actual vertex sets, never from formulas."""

from dataclasses import dataclass
from typing import Any, Dict

from .hexgrid import VertexSet, finite_grid
from .perimeter import cut_edges, neighbor_set


def grid_family(r: int) -> VertexSet:
    """``V(G_r)``: tight for the neighbour and edge bounds with ``c = sqrt6``."""
    return finite_grid(r).vertices


def grid_with_halo(r: int) -> VertexSet:
    """``V(G_r)`` together with its neighbours: tight for the boundary bound."""
    core = grid_family(r)
    return core | neighbor_set(core)


@dataclass
class Lemma1Report:
    """Measured vertex, neighbour and edge counts of ``G_r`` against ``6r^2, 6r, 6r``."""

    radius: int
    v: int
    n: int
    e: int

    @property
    def expected_v(self) -> int:
        return 6 * self.radius * self.radius

    @property
    def expected_n(self) -> int:
        return 6 * self.radius

    @property
    def expected_e(self) -> int:
        return 6 * self.radius

    @property
    def ok(self) -> bool:
        return (self.v, self.n, self.e) == (self.expected_v, self.expected_n, self.expected_e)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "radius": self.radius,
            "v": self.v,
            "n": self.n,
            "e": self.e,
            "expected_v": self.expected_v,
            "expected_n": self.expected_n,
            "expected_e": self.expected_e,
            "ok": self.ok,
        }


def lemma1_report(r: int) -> Lemma1Report:
    """Measure ``G_r`` in the infinite grid."""
    core = grid_family(r)
    return Lemma1Report(
        radius=r,
        v=len(core),
        n=len(neighbor_set(core)),
        e=len(cut_edges(core)),
    )


__all__ = ["grid_family", "grid_with_halo", "Lemma1Report", "lemma1_report"]
