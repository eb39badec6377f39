"""Unit tests for bad-row elimination and normalization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.hexiso.bounds import eq1_lower, eq2_upper
from src.hexiso.errors import EmptySetError, InvalidArgumentsError, PreconditionError
from src.hexiso.hexgrid import DIRECTIONS, Direction, Vertex, finite_grid, row_key
from src.hexiso.normalize import (
    Parallelogram,
    bounding_parallelogram,
    eliminate_bad_row,
    find_bad_rows,
    has_bad_rows,
    normalize,
    normalized_vertices,
    parallelogram,
)
from src.hexiso.perimeter import gray_keys, gray_row_counts, neighbor_set
from src.hexiso.trace import BadRow

WINDOW = sorted(finite_grid(4).vertices)
vertex_sets = st.lists(st.sampled_from(WINDOW), min_size=1, max_size=16, unique=True).map(frozenset)


def contiguous(keys):
    return len(keys) == max(keys) - min(keys) + 1


# ---------------------------------------------------------------------------
# Bad rows
# ---------------------------------------------------------------------------

class TestFindBadRows:
    def test_vertical_gap(self):
        """{(0,0),(0,3)}, d=3 → keys {1, 2}"""
        assert find_bad_rows([(0, 0), (0, 3)], 3) == [
            BadRow(Direction.D3, 1),
            BadRow(Direction.D3, 2),
        ]

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_hexagon_has_none(self, hexagon, d):
        assert find_bad_rows(hexagon, d) == []

    def test_direction_1_gap(self):
        """{(0,0),(4,0)}, d=1 → key {−1}"""
        assert [b.key for b in find_bad_rows([(0, 0), (4, 0)], 1)] == [-1]

    def test_empty_rejected(self):
        with pytest.raises(EmptySetError):
            find_bad_rows([], 1)

    def test_bad_row_serializes(self):
        assert BadRow(Direction.D2, -3).to_dict() == {"dir": 2, "key": -3}


# ---------------------------------------------------------------------------
# Parallelogram
# ---------------------------------------------------------------------------

class TestParallelogram:
    def test_single_vertex(self):
        p = parallelogram([(0, 0)])
        assert (p.d1_range, p.d2_range, p.vertex_count) == ((0, 0), (0, 0), 2)
        assert p.vertices() == {(0, 0), (0, 1)}

    def test_hexagon(self, hexagon):
        p = parallelogram(hexagon)
        assert (p.width1, p.width2, p.vertex_count) == (2, 2, 8)
        assert hexagon <= p.vertices()

    def test_direction_1_bad_row_rejected(self):
        with pytest.raises(PreconditionError):
            parallelogram([(0, 0), (4, 0)])

    def test_component_counts(self):
        p = Parallelogram((0, 1), (0, 1))
        assert p.count_below(1) == 1
        assert p.count_above(2) == 1
        assert p.count_below(2) == 4
        assert p.count_below(10) == p.vertex_count

    @given(vertex_sets)
    def test_count_matches_enumeration(self, W):
        box = bounding_parallelogram(W)
        cells = box.vertices()
        assert len(cells) == box.vertex_count
        assert W <= cells
        key = min(gray_keys(W, 3)) + 1
        assert box.count_below(key) == sum(1 for v in cells if row_key(v, 3) < key)
        assert box.count_above(key) == sum(1 for v in cells if row_key(v, 3) > key)


# ---------------------------------------------------------------------------
# Single elimination
# ---------------------------------------------------------------------------

class TestEliminateBadRow:
    def test_vertical_gap_closed_along_direction_1(self):
        """W={(0,0),(0,3)}, b=(3, 1), j=1 → {(0,0),(−2,1)} with |N| = 6"""
        W = frozenset({Vertex(0, 0), Vertex(0, 3)})
        result = eliminate_bad_row(W, BadRow(Direction.D3, 1), 1)
        assert result == {(0, 0), (-2, 1)}
        assert len(neighbor_set(result)) == 6 == len(neighbor_set(W))

    def test_lower_side_single_row(self):
        W = frozenset({Vertex(0, 0), Vertex(0, 3)})
        result = eliminate_bad_row(W, BadRow(Direction.D3, 1), 2, side="lower", rows=1)
        assert result == {(-1, 1), (0, 3)}
        assert find_bad_rows(result, 3) == [BadRow(Direction.D3, 2)]

    def test_not_a_bad_row(self, hexagon):
        with pytest.raises(PreconditionError):
            eliminate_bad_row(hexagon, BadRow(Direction.D1, 0), 2)

    def test_row_outside_span(self):
        with pytest.raises(PreconditionError):
            eliminate_bad_row([(0, 0), (0, 3)], BadRow(Direction.D3, 7), 1)

    def test_same_direction_rejected(self):
        with pytest.raises(InvalidArgumentsError):
            eliminate_bad_row([(0, 0), (0, 3)], BadRow(Direction.D3, 1), 3)

    def test_rows_out_of_range(self):
        with pytest.raises(InvalidArgumentsError):
            eliminate_bad_row([(0, 0), (0, 3)], BadRow(Direction.D3, 1), 1, rows=3)

    @given(vertex_sets, st.sampled_from(DIRECTIONS), st.data())
    @settings(max_examples=150)
    def test_elimination_invariants(self, W, i, data):
        bad = find_bad_rows(W, i)
        if not bad:
            return
        b = data.draw(st.sampled_from(bad))
        j = data.draw(st.sampled_from([d for d in DIRECTIONS if d != i]))
        before_j = contiguous(gray_keys(W, j))
        result = eliminate_bad_row(W, b, j)
        assert len(result) == len(W)
        assert len(neighbor_set(result)) <= len(neighbor_set(W))
        assert gray_keys(result, j) == gray_keys(W, j)
        assert contiguous(gray_keys(result, j)) == before_j
        assert len(find_bad_rows(result, i)) < len(bad)


# ---------------------------------------------------------------------------
# Full normalization
# ---------------------------------------------------------------------------

class TestNormalize:
    def test_hexagon_is_fixed(self, hexagon):
        result, trace = normalize(hexagon)
        assert result == hexagon
        assert trace.steps == []
        assert trace.iterations == 0

    def test_vertical_pair(self):
        W = frozenset({Vertex(0, 0), Vertex(0, 3)})
        result, trace = normalize(W)
        assert len(result) == 2
        assert not has_bad_rows(result)
        assert len(neighbor_set(result)) <= 6
        assert trace.replay(W) == result
        assert trace.potential_history == [8, 8]
        assert trace.compressing_passes == [False]
        assert trace.to_dict()["iterations"] == 1

    def test_far_pair_along_direction_1(self):
        W = frozenset({Vertex(0, 0), Vertex(20, 0)})
        result, trace = normalize(W)
        assert not has_bad_rows(result)
        assert trace.steps_by_direction[1] >= 1
        assert trace.potential_history[0] > trace.potential_history[-1]
        assert trace.compressing_passes[0]
        assert trace.potential_history[1] < trace.potential_history[0]

    def test_empty_rejected(self):
        with pytest.raises(EmptySetError):
            normalize([])

    @given(vertex_sets)
    @settings(max_examples=300, deadline=None)
    def test_post_conditions(self, W):
        result, trace = normalize(W)
        assert len(result) == len(W)
        assert len(neighbor_set(result)) <= len(neighbor_set(W))
        for d in DIRECTIONS:
            assert contiguous(gray_keys(result, d))
        assert trace.potential_non_increasing()
        assert trace.potential_strictly_decreasing()
        assert len(trace.compressing_passes) == trace.iterations
        assert trace.replay(W) == result
        assert sum(trace.steps_by_direction.values()) == len(trace.steps)

    @given(vertex_sets)
    @settings(max_examples=300, deadline=None)
    def test_row_count_bounds_on_normalized_sets(self, W):
        result, _ = normalize(W)
        l = gray_row_counts(result)  # noqa: E741
        assert len(neighbor_set(result)) >= eq1_lower(l)
        assert len(result) <= eq2_upper(l)
        assert parallelogram(result).vertex_count == 2 * l[0] * l[1]

    def test_sorted_vertex_list(self):
        assert normalized_vertices([(0, 3), (0, 0)]) == [(-1, 2), (1, 1)]
