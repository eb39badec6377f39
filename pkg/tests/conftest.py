import json

import pytest

from src.hexiso.hexgrid import Vertex


@pytest.fixture
def hexagon():
    """V(G_1): the central 6-cycle."""
    return frozenset(
        Vertex(x, y) for x, y in [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]
    )


@pytest.fixture
def domino():
    """Two vertices joined by a direction-1 edge."""
    return frozenset({Vertex(0, 0), Vertex(1, 0)})


@pytest.fixture
def vertex_file(tmp_path):
    """Write a vertex-set document and return its path."""

    def _write(document, name="set.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write
