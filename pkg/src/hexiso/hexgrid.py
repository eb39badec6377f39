"""Coordinate model of the infinite hexagonal (honeycomb) grid.

Brick-wall coordinates: every vertex ``(x, y)`` has horizontal neighbours
``(x - 1, y)`` and ``(x + 1, y)``; its vertical neighbour is ``(x, y + 1)``
when ``x + y`` is even and ``(x, y - 1)`` when it is odd.

Edge classes ("directions"):

- direction 3: vertical edges;
- direction 1: horizontal edges whose left endpoint has even parity;
- direction 2: horizontal edges whose left endpoint has odd parity.

Deleting the edges of one direction splits the grid into infinite paths
(rows).  Rows of each direction are indexed by a closed-form integer key, so
no infinite graph object is ever built.

The finite grid ``G_r`` is the union of all hexagonal faces within face
distance ``r - 1`` of the central face ``{(0..2, 0), (0..2, 1)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, NamedTuple, Tuple

import networkx as nx

from .errors import InvalidArgumentsError, InvalidEdgeError


class Vertex(NamedTuple):
    """Integer brick-wall coordinate of a grid vertex."""

    x: int
    y: int


VertexSet = FrozenSet[Vertex]


class Direction(IntEnum):
    """The three edge classes of the honeycomb."""

    D1 = 1
    D2 = 2
    D3 = 3


DIRECTIONS: Tuple[Direction, Direction, Direction] = (
    Direction.D1,
    Direction.D2,
    Direction.D3,
)

#: Translation along the rows of each direction by two vertices.
PERIOD_VECTORS = {
    Direction.D1: (1, 1),
    Direction.D2: (1, -1),
    Direction.D3: (2, 0),
}

#: Change of each row key under one period vector: ``KEY_SHIFT[j][i]`` is
#: how much the direction-``i`` key moves when translating by ``p_j``.
KEY_SHIFT = {
    Direction.D1: {Direction.D1: 0, Direction.D2: 1, Direction.D3: 1},
    Direction.D2: {Direction.D1: -1, Direction.D2: 0, Direction.D3: -1},
    Direction.D3: {Direction.D1: -1, Direction.D2: 1, Direction.D3: 0},
}


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected grid edge stored with ``u < v`` lexicographically."""

    u: Vertex
    v: Vertex

    @classmethod
    def of(cls, a: Tuple[int, int], b: Tuple[int, int]) -> "Edge":
        """Build a canonical edge; ``InvalidEdgeError`` if not adjacent."""
        va, vb = Vertex(*a), Vertex(*b)
        if vb not in neighbors(va):
            raise InvalidEdgeError(f"{tuple(va)} and {tuple(vb)} are not adjacent")
        return cls(va, vb) if va < vb else cls(vb, va)

    @property
    def direction(self) -> Direction:
        """Edge class of this edge."""
        return edge_direction(self)


@dataclass(frozen=True)
class FiniteGrid:
    """The finite hexagonal grid ``G_r``."""

    radius: int
    vertices: VertexSet

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)


# ---------------------------------------------------------------------------
# Local structure
# ---------------------------------------------------------------------------

def parity(v: Tuple[int, int]) -> int:
    """``(x + y) mod 2``; decides the side of the vertical neighbour."""
    return (v[0] + v[1]) & 1


def neighbors(v: Tuple[int, int]) -> Tuple[Vertex, Vertex, Vertex]:
    """The three neighbours of ``v``: left, right, vertical."""
    x, y = v
    dy = 1 if (x + y) & 1 == 0 else -1
    return Vertex(x - 1, y), Vertex(x + 1, y), Vertex(x, y + dy)


def are_adjacent(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    """Whether ``a`` and ``b`` are joined by a grid edge."""
    return Vertex(*b) in neighbors(a)


def edge_direction(e: Edge) -> Direction:
    """Direction of an edge.

    Raises:
        InvalidEdgeError: if the endpoints are not adjacent.
    """
    u, v = e.u, e.v
    if not are_adjacent(u, v):
        raise InvalidEdgeError(f"{tuple(u)} and {tuple(v)} are not adjacent")
    if u.x == v.x:
        return Direction.D3
    left = u if u.x < v.x else v
    return Direction.D1 if parity(left) == 0 else Direction.D2


def incident_edges(v: Tuple[int, int]) -> Tuple[Edge, Edge, Edge]:
    """The three edges at ``v``, one per direction."""
    return tuple(Edge.of(v, w) for w in neighbors(v))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Rows
# ---------------------------------------------------------------------------

def row_key(v: Tuple[int, int], d: int) -> int:
    """Index of the direction-``d`` row containing ``v``.

    Keys of one direction are consecutive integers for geometrically
    adjacent rows.
    """
    x, y = v
    if d == 3:
        return y
    if d == 1:
        return (y - x) // 2
    if d == 2:
        return (x + y) // 2
    raise InvalidArgumentsError(f"direction must be 1, 2 or 3, got {d!r}")


def row_position(v: Tuple[int, int], d: int) -> int:
    """Position of ``v`` along its direction-``d`` row.

    Consecutive positions on one row are adjacent vertices.
    """
    x, y = v
    if d == 3:
        return x
    if d == 1:
        return x + y
    if d == 2:
        return x - y
    raise InvalidArgumentsError(f"direction must be 1, 2 or 3, got {d!r}")


def vertex_at(d: int, key: int, position: int) -> Vertex:
    """Inverse of (:func:`row_key`, :func:`row_position`) for direction ``d``."""
    if d == 3:
        return Vertex(position, key)
    if d == 1:
        diff = 2 * key + (position & 1)  # y - x
        return Vertex((position - diff) // 2, (position + diff) // 2)
    if d == 2:
        total = 2 * key + (position & 1)  # x + y
        return Vertex((total + position) // 2, (total - position) // 2)
    raise InvalidArgumentsError(f"direction must be 1, 2 or 3, got {d!r}")


def row_intersection(d1: int, k1: int, d2: int, k2: int) -> VertexSet:
    """The two adjacent vertices shared by two rows of different directions.

    Raises:
        InvalidArgumentsError: if ``d1 == d2`` or a direction is invalid.
    """
    if d1 not in (1, 2, 3) or d2 not in (1, 2, 3):
        raise InvalidArgumentsError(f"directions must be 1, 2 or 3, got {d1!r}, {d2!r}")
    if d1 == d2:
        raise InvalidArgumentsError("row_intersection needs two different directions")
    keys = {d1: k1, d2: k2}
    if 3 not in keys:
        a, b = keys[1], keys[2]
        return frozenset({Vertex(b - a, a + b), Vertex(b - a, a + b + 1)})
    y = keys[3]
    if 1 in keys:
        x = y - 2 * keys[1]
        return frozenset({Vertex(x - 1, y), Vertex(x, y)})
    x = 2 * keys[2] - y
    return frozenset({Vertex(x, y), Vertex(x + 1, y)})


def period_vector(d: int) -> Tuple[int, int]:
    """Translation that moves a vertex two steps along its direction-``d`` row."""
    return PERIOD_VECTORS[Direction(d)]


# ---------------------------------------------------------------------------
# Sets
# ---------------------------------------------------------------------------

def vertex_set(points: Iterable[Tuple[int, int]]) -> VertexSet:
    """Freeze an iterable of coordinate pairs into a :data:`VertexSet`."""
    return frozenset(Vertex(int(p[0]), int(p[1])) for p in points)


def translate(vertices: Iterable[Tuple[int, int]], shift: Tuple[int, int]) -> VertexSet:
    """Translate a set by a parity-preserving vector.

    Raises:
        InvalidArgumentsError: if ``dx + dy`` is odd; such a shift is not a
            grid automorphism in brick-wall coordinates.
    """
    dx, dy = shift
    if (dx + dy) & 1:
        raise InvalidArgumentsError(f"translation {shift!r} does not preserve parity")
    return frozenset(Vertex(v[0] + dx, v[1] + dy) for v in vertices)


def to_graph(vertices: Iterable[Tuple[int, int]]) -> nx.Graph:
    """Induced subgraph of the infinite grid on ``vertices``."""
    members = vertex_set(vertices)
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for v in members:
        for w in neighbors(v):
            if w in members and v < w:
                graph.add_edge(v, w)
    return graph


def is_connected(vertices: Iterable[Tuple[int, int]]) -> bool:
    """Whether the induced subgraph is connected (the empty set is not)."""
    graph = to_graph(vertices)
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def sorted_vertices(vertices: Iterable[Tuple[int, int]]) -> list:
    """Lexicographically sorted ``[[x, y], ...]`` list for serialization."""
    return [[v[0], v[1]] for v in sorted(vertex_set(vertices))]


# ---------------------------------------------------------------------------
# Finite grids
# ---------------------------------------------------------------------------

def _face_vertices(fx: int, fy: int) -> Iterator[Vertex]:
    """Vertices of the hexagonal face whose lower-left corner is ``(fx, fy)``."""
    for dx in (0, 1, 2):
        yield Vertex(fx + dx, fy)
        yield Vertex(fx + dx, fy + 1)


def face_distance(fx: int, fy: int) -> int:
    """Face distance from the central face to the face anchored at ``(fx, fy)``.

    Face anchors have even parity; neighbouring anchors differ by
    ``(+-2, 0)`` or ``(+-1, +-1)``.
    """
    ax, ay = abs(fx), abs(fy)
    return ay + max(0, (ax - ay) // 2)


@lru_cache(maxsize=64)
def finite_grid(r: int) -> FiniteGrid:
    """The finite hexagonal grid ``G_r`` with ``6 r^2`` vertices.

    Raises:
        InvalidArgumentsError: if ``r < 1``.
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidArgumentsError(f"finite_grid needs r >= 1, got {r!r}")
    reach = r - 1
    members = set()
    for fy in range(-reach, reach + 1):
        span = 2 * reach - abs(fy)
        for fx in range(-span, span + 1):
            if (fx + fy) & 1:
                continue
            if face_distance(fx, fy) <= reach:
                members.update(_face_vertices(fx, fy))
    return FiniteGrid(radius=r, vertices=frozenset(members))


__all__ = [
    "Vertex",
    "VertexSet",
    "Direction",
    "DIRECTIONS",
    "PERIOD_VECTORS",
    "KEY_SHIFT",
    "Edge",
    "FiniteGrid",
    "parity",
    "neighbors",
    "are_adjacent",
    "edge_direction",
    "incident_edges",
    "row_key",
    "row_position",
    "vertex_at",
    "row_intersection",
    "period_vector",
    "vertex_set",
    "translate",
    "to_graph",
    "is_connected",
    "sorted_vertices",
    "face_distance",
    "finite_grid",
]
