"""Perimeter measures of a vertex set and the outermost-neighbour analysis.

Three notions of perimeter for a finite set ``W``:

- ``N(W)``: vertices outside ``W`` adjacent to ``W`` (neighbour vertices);
- ``B(W)``: vertices of ``W`` adjacent to the complement (boundary vertices);
- ``E(W)``: edges with exactly one endpoint in ``W`` (outgoing edges).

Inside a finite grid ``G_r`` the complement is taken within ``V(G_r)``;
neighbours outside the grid are exposed separately through
:func:`outer_neighbor_set`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from .errors import ContainmentError, EmptySetError, InvalidArgumentsError
from .hexgrid import (
    DIRECTIONS,
    Edge,
    FiniteGrid,
    Vertex,
    VertexSet,
    finite_grid,
    neighbors,
    row_key,
    row_position,
    to_graph,
    vertex_at,
    vertex_set,
)


@dataclass(frozen=True)
class Region:
    """Where a set lives: the infinite grid or a finite grid ``G_r``."""

    kind: str = "infinite"
    grid: Optional[FiniteGrid] = None

    @classmethod
    def infinite(cls) -> "Region":
        """The infinite hexagonal grid."""
        return cls()

    @classmethod
    def finite(cls, r: int) -> "Region":
        """The finite grid of radius ``r``."""
        return cls(kind="finite", grid=finite_grid(r))

    @classmethod
    def parse(cls, text: str) -> "Region":
        """Parse ``infinite`` or ``finite:R``."""
        if text == "infinite":
            return cls.infinite()
        if text.startswith("finite:"):
            try:
                r = int(text.split(":", 1)[1])
            except ValueError as exc:
                raise InvalidArgumentsError(f"bad region {text!r}") from exc
            return cls.finite(r)
        raise InvalidArgumentsError(f"region must be 'infinite' or 'finite:R', got {text!r}")

    def label(self) -> str:
        """Text form accepted by :meth:`parse`."""
        return "infinite" if self.grid is None else f"finite:{self.grid.radius}"

    def contains(self, v: Tuple[int, int]) -> bool:
        """Whether ``v`` is a vertex of the region."""
        return self.grid is None or v in self.grid.vertices


INFINITE = Region.infinite()


@dataclass
class PerimeterReport:
    """All three perimeter measures plus gray-row counts of one set."""

    size: int
    n_count: int
    b_count: int
    e_count: int
    l: Optional[Tuple[int, int, int]]  # noqa: E741 -- name used throughout the theory
    region: str = "infinite"
    n_out_count: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        out: Dict[str, Any] = {
            "size": self.size,
            "n": self.n_count,
            "b": self.b_count,
            "e": self.e_count,
            "l": list(self.l) if self.l is not None else None,
            "region": self.region,
        }
        if self.n_out_count is not None:
            out["n_out"] = self.n_out_count
        return out


# ---------------------------------------------------------------------------
# Measures
# ---------------------------------------------------------------------------

def _members(W: Iterable[Tuple[int, int]], region: Region) -> VertexSet:
    members = W if isinstance(W, frozenset) else vertex_set(W)
    if region.grid is not None and not members <= region.grid.vertices:
        outside = sorted(members - region.grid.vertices)[:3]
        raise ContainmentError(
            f"set is not contained in G_{region.grid.radius}; e.g. {[tuple(v) for v in outside]}"
        )
    return members  # type: ignore[return-value]


def neighbor_set(W: Iterable[Tuple[int, int]], region: Region = INFINITE) -> VertexSet:
    """``N(W)``; for finite regions only neighbours inside the grid.

    Raises:
        ContainmentError: if ``W`` is not inside ``region``.
    """
    members = _members(W, region)
    found = set()
    for v in members:
        for w in neighbors(v):
            if w not in members and region.contains(w):
                found.add(w)
    return frozenset(found)


def outer_neighbor_set(W: Iterable[Tuple[int, int]], r: int) -> VertexSet:
    """Neighbours of ``W`` lying outside ``G_r``."""
    region = Region.finite(r)
    members = _members(W, region)
    return neighbor_set(members) - region.grid.vertices  # type: ignore[union-attr]


def boundary_set(W: Iterable[Tuple[int, int]], region: Region = INFINITE) -> VertexSet:
    """``B(W)``: members with a neighbour in the region outside ``W``."""
    members = _members(W, region)
    return frozenset(
        v
        for v in members
        if any(w not in members and region.contains(w) for w in neighbors(v))
    )


def cut_edges(W: Iterable[Tuple[int, int]], region: Region = INFINITE) -> FrozenSet[Edge]:
    """``E(W)``: edges from ``W`` to the rest of the region."""
    members = _members(W, region)
    edges = set()
    for v in members:
        for w in neighbors(v):
            if w not in members and region.contains(w):
                edges.add(Edge(v, w) if v < w else Edge(w, v))
    return frozenset(edges)


def interior_set(W: Iterable[Tuple[int, int]], region: Region = INFINITE) -> VertexSet:
    """``W`` minus its boundary; its neighbours all lie in ``B(W)``."""
    members = _members(W, region)
    return members - boundary_set(members, region)


def components(W: Iterable[Tuple[int, int]]) -> List[VertexSet]:
    """Connected components of the induced subgraph, largest first."""
    graph = to_graph(W)
    parts = [frozenset(c) for c in nx.connected_components(graph)]
    parts.sort(key=lambda c: (-len(c), min(c)))
    return parts


def perimeter_report(W: Iterable[Tuple[int, int]], region: Region = INFINITE) -> PerimeterReport:
    """Measure a set.  The empty set reports zeros and no gray-row counts."""
    members = _members(W, region)
    return PerimeterReport(
        size=len(members),
        n_count=len(neighbor_set(members, region)),
        b_count=len(boundary_set(members, region)),
        e_count=len(cut_edges(members, region)),
        l=gray_row_counts(members) if members else None,
        region=region.label(),
        n_out_count=(
            len(outer_neighbor_set(members, region.grid.radius))
            if region.grid is not None
            else None
        ),
    )


# ---------------------------------------------------------------------------
# Rows and outermost neighbours
# ---------------------------------------------------------------------------

def _require_nonempty(W: Iterable[Tuple[int, int]]) -> VertexSet:
    members = W if isinstance(W, frozenset) else vertex_set(W)
    if not members:
        raise EmptySetError("operation needs a non-empty vertex set")
    return members  # type: ignore[return-value]


def gray_keys(W: Iterable[Tuple[int, int]], d: int) -> FrozenSet[int]:
    """Keys of the direction-``d`` rows that contain a vertex of ``W``."""
    return frozenset(row_key(v, d) for v in W)


def gray_row_counts(W: Iterable[Tuple[int, int]]) -> Tuple[int, int, int]:
    """``(l1, l2, l3)``: the number of gray rows per direction.

    Raises:
        EmptySetError: for the empty set.
    """
    members = _require_nonempty(W)
    return (
        len(gray_keys(members, 1)),
        len(gray_keys(members, 2)),
        len(gray_keys(members, 3)),
    )


def _row_extremes(members: VertexSet, d: int) -> Dict[int, Tuple[int, int]]:
    spans: Dict[int, List[int]] = defaultdict(list)
    for v in members:
        spans[row_key(v, d)].append(row_position(v, d))
    return {key: (min(ps), max(ps)) for key, ps in spans.items()}


def outermost_neighbors(W: Iterable[Tuple[int, int]], d: int) -> VertexSet:
    """White vertices just beyond the extreme black vertices of each gray row.

    The result has exactly ``2 * l_d`` vertices.

    Raises:
        EmptySetError: for the empty set.
    """
    members = _require_nonempty(W)
    out = set()
    for key, (lo, hi) in _row_extremes(members, d).items():
        out.add(vertex_at(d, key, lo - 1))
        out.add(vertex_at(d, key, hi + 1))
    return frozenset(out)


def outermost_edges(W: Iterable[Tuple[int, int]], d: int) -> FrozenSet[Edge]:
    """Outgoing edges from each gray row's extreme vertices to its outermost neighbours."""
    members = _require_nonempty(W)
    out = set()
    for key, (lo, hi) in _row_extremes(members, d).items():
        out.add(Edge.of(vertex_at(d, key, lo), vertex_at(d, key, lo - 1)))
        out.add(Edge.of(vertex_at(d, key, hi), vertex_at(d, key, hi + 1)))
    return frozenset(out)


def outermost_multiplicity(W: Iterable[Tuple[int, int]]) -> Dict[Vertex, int]:
    """For every outermost neighbour, the number of directions it is outermost for.

    No value ever exceeds 2.
    """
    members = _require_nonempty(W)
    counts: Dict[Vertex, int] = defaultdict(int)
    for d in DIRECTIONS:
        for v in outermost_neighbors(members, d):
            counts[v] += 1
    return dict(counts)


__all__ = [
    "Region",
    "INFINITE",
    "PerimeterReport",
    "neighbor_set",
    "outer_neighbor_set",
    "boundary_set",
    "cut_edges",
    "interior_set",
    "components",
    "perimeter_report",
    "gray_keys",
    "gray_row_counts",
    "outermost_neighbors",
    "outermost_edges",
    "outermost_multiplicity",
]
