"""hexiso - isoperimetric inequalities on the hexagonal grid.

Modules:

- ``hexgrid``: brick-wall coordinates, edge directions, rows, finite grids.
- ``perimeter``: the measures ``N``, ``B``, ``E`` and outermost neighbours.
- ``normalize``: bad-row elimination and the bounding parallelogram.
- ``bounds``: exact checks of the inequalities and the scalar functions.
- ``families``: the extremal grid families.
- ``search``: enumeration, sampling, profiles and exhaustive scans.
- ``report`` / ``cli``: file formats and the command line.
"""

from .bounds import (
    BoundCheck,
    check_conjecture,
    check_fin_B,
    check_fin_E,
    check_fin_N,
    check_inf_B,
    check_inf_E,
    check_inf_N,
    eq1_lower,
    eq2_upper,
    f,
    g,
    r_threshold,
)
from .errors import HexIsoError
from .families import grid_family, grid_with_halo, lemma1_report
from .hexgrid import (
    Direction,
    Edge,
    Vertex,
    edge_direction,
    finite_grid,
    neighbors,
    row_intersection,
    row_key,
)
from .normalize import eliminate_bad_row, find_bad_rows, normalize, parallelogram
from .perimeter import (
    Region,
    boundary_set,
    cut_edges,
    gray_row_counts,
    neighbor_set,
    outermost_multiplicity,
    outermost_neighbors,
    perimeter_report,
)
from .search import (
    canonicalize,
    check_family,
    conjecture_scan,
    enum_connected,
    enum_region_subsets,
    profile,
    sample_random,
)
from .trace import BadRow, NormalizationTrace, ShiftStep

__all__ = [
    "BadRow",
    "BoundCheck",
    "Direction",
    "Edge",
    "HexIsoError",
    "NormalizationTrace",
    "Region",
    "ShiftStep",
    "Vertex",
    "boundary_set",
    "canonicalize",
    "check_conjecture",
    "check_family",
    "check_fin_B",
    "check_fin_E",
    "check_fin_N",
    "check_inf_B",
    "check_inf_E",
    "check_inf_N",
    "conjecture_scan",
    "cut_edges",
    "edge_direction",
    "eliminate_bad_row",
    "enum_connected",
    "enum_region_subsets",
    "eq1_lower",
    "eq2_upper",
    "f",
    "find_bad_rows",
    "finite_grid",
    "g",
    "gray_row_counts",
    "grid_family",
    "grid_with_halo",
    "lemma1_report",
    "neighbor_set",
    "neighbors",
    "normalize",
    "outermost_multiplicity",
    "outermost_neighbors",
    "parallelogram",
    "perimeter_report",
    "profile",
    "r_threshold",
    "row_intersection",
    "row_key",
    "sample_random",
]
