"""Enumeration, sampling and exhaustive scans feeding the bound checks.

Three families of sets are generated:

- connected sets of the infinite grid up to translation
  (:func:`enum_connected`, canonical growth with a seen-set);
- all small subsets of a finite grid ``G_r`` (:func:`enum_region_subsets`,
  and the vectorized bit-mask scan behind :func:`check_family` and
  :func:`conjecture_scan`);
- seeded random subsets of a finite window (:func:`sample_random`).

Parallel work is split into independent partitions (mask prefixes, sample
index ranges, slices of the class list) and merged with exact reductions,
so results do not depend on the worker count.
"""

from __future__ import annotations

import hashlib
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from multiprocessing import Pool
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

import numpy as np

from .bounds import (
    CHECK_MEASURE,
    CHECKS,
    BoundCheck,
    check_conjecture,
    check_fin_E,
    check_fin_N,
    eq1_eq2_chain,
    eq1_lower,
    eq2_upper,
)
from .errors import InvalidArgumentsError, NonTerminationError, ResourceGuardError
from .hexgrid import (
    Vertex,
    VertexSet,
    finite_grid,
    is_connected,
    neighbors,
    parity,
    sorted_vertices,
    translate,
    vertex_set,
)
from .normalize import has_bad_rows, normalize
from .perimeter import (
    boundary_set,
    cut_edges,
    gray_row_counts,
    neighbor_set,
    outermost_multiplicity,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

MAX_CONNECTED_SIZE = 14
MAX_SCAN_RADIUS = 2
MEASURES = ("N", "B", "E")

INFINITE_CHECKS = ("inf_N", "inf_E", "inf_B")
FINITE_CHECKS = ("fin_N", "fin_E", "fin_B")

#: Masks evaluated per partition of the finite-grid scan.
SCAN_CHUNK = 1 << 20
#: Violating witnesses kept per report.
MAX_WITNESSES = 5


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalSet:
    """A vertex set translated to a fixed origin, with a 64-bit digest."""

    vertices: Tuple[Vertex, ...]
    digest: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def as_set(self) -> VertexSet:
        return frozenset(self.vertices)

    def to_list(self) -> List[List[int]]:
        return [[v.x, v.y] for v in self.vertices]


@dataclass
class ProfileRow:
    """Minimum of one perimeter measure over the enumerated sets of size ``n``."""

    n: int
    measure: str
    min_value: int
    argmin: CanonicalSet
    scope: str = "connected-only"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "n": self.n,
            "measure": self.measure,
            "min": self.min_value,
            "witness": self.argmin.to_list(),
            "scope": self.scope,
        }


@dataclass
class ScanResult:
    """Exact minimum of ``measure^2 / |W|`` over the small subsets of ``G_r``."""

    radius: int
    measure: str
    min_ratio_sq: Fraction
    witness: VertexSet
    witness_count: int
    checks: Dict[str, BoundCheck] = field(default_factory=dict)

    @property
    def conjecture_consistent(self) -> bool:
        return self.min_ratio_sq >= Fraction(4, 3)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        ratio = self.min_ratio_sq
        return {
            "r": self.radius,
            "measure": self.measure,
            "min_ratio_sq": f"{ratio.numerator}/{ratio.denominator}",
            "witness": sorted_vertices(self.witness),
            "witness_size": len(self.witness),
            "witness_count": self.witness_count,
            "conjecture_consistent": self.conjecture_consistent,
            "checks": {name: c.to_dict() for name, c in self.checks.items()},
        }


@dataclass
class ViolationReport:
    """Per-check violation counts over one family of sets."""

    family: str
    checked: int = 0
    violations: Dict[str, int] = field(default_factory=dict)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    parameters: Dict[str, Any] = field(default_factory=dict)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    def record(self, name: str, failed: bool, witness: Optional[Dict[str, Any]] = None) -> None:
        """Count one outcome of check ``name``."""
        self.violations.setdefault(name, 0)
        if failed:
            self.violations[name] += 1
            if witness is not None and len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append({"check": name, **witness})

    def merge(self, other: "ViolationReport") -> None:
        """Fold another partition's report into this one."""
        self.checked += other.checked
        for name, count in other.violations.items():
            self.violations[name] = self.violations.get(name, 0) + count
        room = MAX_WITNESSES - len(self.witnesses)
        if room > 0:
            self.witnesses.extend(other.witnesses[:room])

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "family": self.family,
            "checked": self.checked,
            "violations": dict(sorted(self.violations.items())),
            "total_violations": self.total_violations,
            "witnesses": self.witnesses,
            "parameters": self.parameters,
        }


# ---------------------------------------------------------------------------
# Canonical forms and connected enumeration
# ---------------------------------------------------------------------------

def canonicalize(W: Iterable[Tuple[int, int]]) -> CanonicalSet:
    """Translate ``W`` so its smallest vertex sits at ``(0, 0)`` or ``(1, 0)``.

    The origin keeps the parity of the smallest vertex, so the translation is
    a grid automorphism.
    """
    members = vertex_set(W)
    if not members:
        raise InvalidArgumentsError("cannot canonicalize the empty set")
    low = min(members)
    target = (0, 0) if parity(low) == 0 else (1, 0)
    moved = translate(members, (target[0] - low.x, target[1] - low.y))
    ordered = tuple(sorted(moved))
    payload = ";".join(f"{v.x}:{v.y}" for v in ordered).encode()
    digest = int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "big")
    return CanonicalSet(vertices=ordered, digest=digest)


def _require_connected_size(n_max: int) -> None:
    if not isinstance(n_max, int) or not 1 <= n_max <= MAX_CONNECTED_SIZE:
        raise ResourceGuardError(
            f"connected enumeration supports 1 <= n_max <= {MAX_CONNECTED_SIZE}, got {n_max!r}"
        )


def enum_connected_levels(n_max: int) -> Iterator[List[CanonicalSet]]:
    """Connected classes grouped by size, smallest size first, each level sorted."""
    _require_connected_size(n_max)
    level = sorted({canonicalize([(0, 0)]), canonicalize([(1, 0)])}, key=lambda c: c.vertices)
    yield level
    for size in range(2, n_max + 1):
        found: Dict[Tuple[Vertex, ...], CanonicalSet] = {}
        for parent in level:
            members = parent.as_set()
            frontier = {w for v in parent.vertices for w in neighbors(v) if w not in members}
            for w in frontier:
                child = canonicalize(members | {w})
                found.setdefault(child.vertices, child)
        level = [found[k] for k in sorted(found)]
        logger.info("connected classes of size %d: %d", size, len(level))
        yield level


def enum_connected(n_max: int) -> Iterator[CanonicalSet]:
    """Every connected vertex set with at most ``n_max`` vertices, once per translation class.

    Raises:
        ResourceGuardError: unless ``1 <= n_max <= 14``.
    """
    for level in enum_connected_levels(n_max):
        yield from level


# ---------------------------------------------------------------------------
# Finite-grid subsets
# ---------------------------------------------------------------------------

def _require_scan(r: int, k_max: int) -> None:
    if not isinstance(r, int) or not 1 <= r <= MAX_SCAN_RADIUS:
        raise ResourceGuardError(f"exhaustive subsets need r in {{1, 2}}, got {r!r}")
    if not isinstance(k_max, int) or not 1 <= k_max <= 3 * r * r:
        raise InvalidArgumentsError(f"k_max must lie in [1, {3 * r * r}], got {k_max!r}")


def enum_region_subsets(r: int, k_max: int) -> Iterator[VertexSet]:
    """Every non-empty subset of ``V(G_r)`` with at most ``k_max`` vertices.

    Raises:
        ResourceGuardError: for ``r > 2``.
        InvalidArgumentsError: unless ``1 <= k_max <= 3 r^2``.
    """
    _require_scan(r, k_max)
    population = sorted(finite_grid(r).vertices)
    for k in range(1, k_max + 1):
        for combo in combinations(population, k):
            yield frozenset(combo)


_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int32)


def _popcount(values: np.ndarray) -> np.ndarray:
    """Bit count of each ``uint32`` entry."""
    total = np.zeros(values.shape, dtype=np.int32)
    for shift in (0, 8, 16, 24):
        total += _POPCOUNT8[(values >> np.uint32(shift)) & np.uint32(0xFF)]
    return total


@lru_cache(maxsize=4)
def _grid_masks(r: int) -> Tuple[Tuple[Vertex, ...], np.ndarray]:
    """Sorted vertices of ``G_r`` and each vertex's in-grid neighbour mask."""
    vertices = tuple(sorted(finite_grid(r).vertices))
    index = {v: i for i, v in enumerate(vertices)}
    masks = np.zeros(len(vertices), dtype=np.uint32)
    for i, v in enumerate(vertices):
        for w in neighbors(v):
            if w in index:
                masks[i] |= np.uint32(1 << index[w])
    return vertices, masks


def _mask_vertices(r: int, mask: int) -> VertexSet:
    vertices, _ = _grid_masks(r)
    return frozenset(v for i, v in enumerate(vertices) if (mask >> i) & 1)


@dataclass
class ScanSummary:
    """Per-partition result of the mask scan.

    ``pairs[m]`` maps ``(size, count)`` to its multiplicity; ``minima[m]``
    maps ``size`` to ``(min count, first mask attaining it)``.
    """

    pairs: Dict[str, Dict[Tuple[int, int], int]] = field(default_factory=dict)
    minima: Dict[str, Dict[int, Tuple[int, int]]] = field(default_factory=dict)
    subsets: int = 0

    def merge(self, other: "ScanSummary") -> None:
        self.subsets += other.subsets
        for m, table in other.pairs.items():
            mine = self.pairs.setdefault(m, {})
            for key, count in table.items():
                mine[key] = mine.get(key, 0) + count
        for m, table in other.minima.items():
            mine_min = self.minima.setdefault(m, {})
            for size, best in table.items():
                if size not in mine_min or best < mine_min[size]:
                    mine_min[size] = best


def _scan_chunk(args: Tuple[int, int, int, int]) -> ScanSummary:
    """Evaluate ``|W|``, ``N``, ``B`` and ``E`` for masks in ``[start, stop)``."""
    r, k_max, start, stop = args
    vertices, nb = _grid_masks(r)
    full = np.uint32((1 << len(vertices)) - 1)

    masks = np.arange(start, stop, dtype=np.uint32)
    sizes = _popcount(masks)
    keep = (sizes >= 1) & (sizes <= k_max)
    masks, sizes = masks[keep], sizes[keep]
    outside_w = ~masks & full

    reach = np.zeros(masks.shape, dtype=np.uint32)
    b_count = np.zeros(masks.shape, dtype=np.int32)
    e_count = np.zeros(masks.shape, dtype=np.int32)
    zero = np.uint32(0)
    for i in range(len(vertices)):
        member = ((masks >> np.uint32(i)) & np.uint32(1)).astype(bool)
        exits = nb[i] & outside_w
        reach |= np.where(member, nb[i], zero)
        e_count += np.where(member, _popcount(exits), 0).astype(np.int32)
        b_count += (member & (exits != 0)).astype(np.int32)
    n_count = _popcount(reach & outside_w)

    summary = ScanSummary(subsets=int(masks.size))
    for m, counts in (("N", n_count), ("B", b_count), ("E", e_count)):
        stacked = np.stack([sizes, counts])
        uniq, mult = np.unique(stacked, axis=1, return_counts=True)
        summary.pairs[m] = {
            (int(s), int(c)): int(k) for (s, c), k in zip(uniq.T, mult)
        }
        minima: Dict[int, Tuple[int, int]] = {}
        for s in np.unique(sizes):
            sel = np.flatnonzero(sizes == s)
            j = sel[np.argmin(counts[sel])]
            minima[int(s)] = (int(counts[j]), int(masks[j]))
        summary.minima[m] = minima
    return summary


def _parallel_map(fn: Callable[[Any], T], parts: Sequence[Any], threads: int) -> List[T]:
    """Map ``fn`` over ``parts`` in order, in a process pool when ``threads > 1``."""
    if threads > 1 and len(parts) > 1:
        with Pool(min(threads, len(parts))) as pool:
            return pool.map(fn, parts)
    return [fn(p) for p in parts]


def scan_region(r: int, k_max: Optional[int] = None, threads: int = 1) -> ScanSummary:
    """Exhaustive in-grid measures of every subset of ``V(G_r)`` up to ``k_max`` vertices."""
    k_max = 3 * r * r if k_max is None else k_max
    _require_scan(r, k_max)
    total = 1 << len(_grid_masks(r)[0])
    parts = [
        (r, k_max, start, min(start + SCAN_CHUNK, total))
        for start in range(0, total, SCAN_CHUNK)
    ]
    logger.info("scanning G_%d up to size %d in %d partitions", r, k_max, len(parts))
    merged = ScanSummary()
    for done, chunk in enumerate(_parallel_map(_scan_chunk, parts, threads), start=1):
        merged.merge(chunk)
        logger.debug("partition %d/%d merged", done, len(parts))
    return merged


# ---------------------------------------------------------------------------
# Random sets
# ---------------------------------------------------------------------------

_GOLDEN = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One output of the splitmix64 generator whose state is ``x``."""
    z = (x + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _stream_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th sample; independent of how samples are partitioned."""
    return splitmix64((seed + index * _GOLDEN) & _MASK64)


def _window(window_radius: int) -> List[Vertex]:
    if not isinstance(window_radius, int) or window_radius < 1:
        raise InvalidArgumentsError(f"window radius must be positive, got {window_radius!r}")
    return sorted(finite_grid(window_radius).vertices)


def sample_random(
    window_radius: int,
    size: int,
    count: int,
    seed: int,
    start: int = 0,
) -> Iterator[VertexSet]:
    """``count`` uniform ``size``-subsets of ``V(G_window_radius)``, fixed per seed.

    Raises:
        InvalidArgumentsError: for non-positive arguments or ``size`` above
            the window population.
    """
    population = _window(window_radius)
    if size < 1 or count < 0:
        raise InvalidArgumentsError(f"size must be positive and count non-negative, got {size}, {count}")
    if size > len(population):
        raise InvalidArgumentsError(f"size {size} exceeds the {len(population)} window vertices")
    for i in range(start, start + count):
        rng = random.Random(_stream_seed(seed, i))
        yield frozenset(rng.sample(population, size))


def sample_random_sizes(
    window_radius: int,
    max_size: int,
    count: int,
    seed: int,
    start: int = 0,
) -> Iterator[VertexSet]:
    """Like :func:`sample_random` but each sample draws its size from ``[1, max_size]``."""
    population = _window(window_radius)
    if not 1 <= max_size <= len(population):
        raise InvalidArgumentsError(
            f"max_size must lie in [1, {len(population)}], got {max_size!r}"
        )
    for i in range(start, start + count):
        rng = random.Random(_stream_seed(seed, i))
        yield frozenset(rng.sample(population, rng.randint(1, max_size)))


# ---------------------------------------------------------------------------
# Profiles and scans
# ---------------------------------------------------------------------------

_INFINITE_MEASURES: Dict[str, Callable[[VertexSet], int]] = {
    "N": lambda W: len(neighbor_set(W)),
    "B": lambda W: len(boundary_set(W)),
    "E": lambda W: len(cut_edges(W)),
}


def _require_measure(measure: str) -> str:
    if measure not in MEASURES:
        raise InvalidArgumentsError(f"measure must be one of N, B, E, got {measure!r}")
    return measure


def profile(n_max: int, measure: str) -> List[ProfileRow]:
    """Minimum of ``measure`` over connected sets of each size ``1..n_max``.

    For ``E`` the minimum over connected sets is the minimum over all finite
    sets; ``N`` and ``B`` rows are labelled ``connected-only``.
    """
    _require_measure(measure)
    fn = _INFINITE_MEASURES[measure]
    scope = "all-sets" if measure == "E" else "connected-only"
    rows = []
    for level in enum_connected_levels(n_max):
        values = [fn(cls.as_set()) for cls in level]
        best = min(range(len(level)), key=values.__getitem__)
        rows.append(
            ProfileRow(
                n=level[best].size,
                measure=measure,
                min_value=values[best],
                argmin=level[best],
                scope=scope,
            )
        )
    return rows


def conjecture_scan(
    r: int,
    measure: str = "N",
    threads: int = 1,
    summary: Optional[ScanSummary] = None,
) -> ScanResult:
    """Exact minimum of ``|N|^2/|W|`` (or ``|E|^2/|W|``) over ``W`` in ``G_r``, ``|W| <= 3r^2``.

    The result also carries the conjectured and the proven finite-grid
    checks evaluated at the minimizing set.  A ``summary`` from an earlier
    full :func:`scan_region` of the same radius is reused instead of
    scanning again.
    """
    if measure not in ("N", "E"):
        raise InvalidArgumentsError(f"conjecture scan measures N or E, got {measure!r}")
    if summary is None:
        summary = scan_region(r, threads=threads)
    best: Optional[Tuple[Fraction, int, int, int]] = None
    for size, (low, mask) in sorted(summary.minima[measure].items()):
        ratio = Fraction(low * low, size)
        if best is None or ratio < best[0]:
            best = (ratio, size, low, mask)
    assert best is not None
    ratio, size, low, mask = best
    proven = check_fin_N if measure == "N" else check_fin_E
    return ScanResult(
        radius=r,
        measure=measure,
        min_ratio_sq=ratio,
        witness=_mask_vertices(r, mask),
        witness_count=low,
        checks={
            "conjecture": check_conjecture(size, low),
            proven(size, low).name: proven(size, low),
        },
    )


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def _check_sets(family: str, sets: Iterable[VertexSet], names: Sequence[str]) -> ViolationReport:
    report = ViolationReport(family=family)
    for W in sets:
        report.checked += 1
        counts = {m: _INFINITE_MEASURES[m](W) for m in {CHECK_MEASURE[n] for n in names}}
        for name in names:
            count = counts[CHECK_MEASURE[name]]
            if CHECKS[name](len(W), count).holds:
                report.record(name, False)
            else:
                report.record(
                    name, True, {"size": len(W), "count": count, "vertices": sorted_vertices(W)}
                )
    return report


def _connected_part(args: Tuple[List[Tuple[Vertex, ...]], Tuple[str, ...]]) -> ViolationReport:
    chunk, names = args
    return _check_sets("connected", (frozenset(v) for v in chunk), names)


def _random_part(args: Tuple[int, int, int, int, int, Tuple[str, ...]]) -> ViolationReport:
    window, max_size, start, count, seed, names = args
    return _check_sets("random", sample_random_sizes(window, max_size, count, seed, start), names)


def _normalize_part(args: Tuple[int, int, int, int, int]) -> ViolationReport:
    window, max_size, start, count, seed = args
    return normalization_suite(sample_random_sizes(window, max_size, count, seed, start))


def _split(total: int, parts: int) -> List[Tuple[int, int]]:
    """``(start, count)`` pairs covering ``range(total)`` in ``parts`` slices."""
    parts = max(1, min(parts, total)) if total else 1
    base, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        count = base + (1 if i < extra else 0)
        out.append((start, count))
        start += count
    return out


def _merge(family: str, reports: Iterable[ViolationReport], parameters: Dict[str, Any]) -> ViolationReport:
    merged = ViolationReport(family=family, parameters=parameters)
    for part in reports:
        merged.merge(part)
    return merged


def _finite_grid_report(r: int, k_max: int, threads: int) -> ViolationReport:
    summary = scan_region(r, k_max, threads)
    report = ViolationReport(
        family="finite-grid",
        checked=summary.subsets,
        parameters={"radius": r, "max_size": k_max},
    )
    for name in FINITE_CHECKS:
        measure = CHECK_MEASURE[name]
        report.violations[name] = 0
        for (size, count), mult in sorted(summary.pairs[measure].items()):
            if not CHECKS[name](size, count).holds:
                report.violations[name] += mult
        # each check is monotone in the count, so a violating size is witnessed by its minimum
        for size, (low, mask) in sorted(summary.minima[measure].items()):
            if not CHECKS[name](size, low).holds and len(report.witnesses) < MAX_WITNESSES:
                report.witnesses.append(
                    {
                        "check": name,
                        "size": size,
                        "count": low,
                        "vertices": sorted_vertices(_mask_vertices(r, mask)),
                    }
                )
    return report


def check_family(
    family: str,
    max_size: Optional[int] = None,
    radius: Optional[int] = None,
    samples: int = 10_000,
    window: int = 8,
    seed: int = 42,
    threads: int = 1,
) -> ViolationReport:
    """Run the isoperimetric checks over one family of sets.

    Families:
        ``connected``: every connected class up to ``max_size`` vertices,
            infinite-grid checks.
        ``random``: ``samples`` seeded subsets of ``G_window`` with sizes in
            ``[1, max_size]``, infinite-grid checks.
        ``finite-grid``: every subset of ``G_radius`` up to ``max_size``
            vertices, finite-grid checks on in-grid measures.
        ``normalize``: the normalization post-conditions on random sets.
    """
    if not isinstance(samples, int) or isinstance(samples, bool) or samples < 1:
        raise InvalidArgumentsError(f"samples must be a positive integer, got {samples!r}")
    if family == "connected":
        n_max = 12 if max_size is None else max_size
        classes = [c.vertices for c in enum_connected(n_max)]
        chunks = [
            (classes[s : s + c], INFINITE_CHECKS) for s, c in _split(len(classes), threads)
        ]
        reports = _parallel_map(_connected_part, chunks, threads)
        return _merge(family, reports, {"max_size": n_max})

    if family in ("random", "normalize"):
        size_cap = 40 if max_size is None else max_size
        params = {"max_size": size_cap, "samples": samples, "window": window, "seed": seed}
        if family == "random":
            parts: List[Any] = [
                (window, size_cap, s, c, seed, INFINITE_CHECKS) for s, c in _split(samples, threads)
            ]
            return _merge(family, _parallel_map(_random_part, parts, threads), params)
        parts = [(window, size_cap, s, c, seed) for s, c in _split(samples, threads)]
        return _merge(family, _parallel_map(_normalize_part, parts, threads), params)

    if family == "finite-grid":
        if radius is None:
            raise InvalidArgumentsError("the finite-grid family needs a radius")
        if not isinstance(radius, int) or radius < 1:
            raise InvalidArgumentsError(f"radius must be a positive integer, got {radius!r}")
        k_max = 3 * radius * radius if max_size is None else max_size
        return _finite_grid_report(radius, k_max, threads)

    raise InvalidArgumentsError(
        f"family must be connected, random, finite-grid or normalize, got {family!r}"
    )


def normalization_suite(sets: Iterable[Iterable[Tuple[int, int]]]) -> ViolationReport:
    """Normalize every set and check the post-conditions and row-count bounds.

    Checks: ``cardinality``, ``neighbors`` (``|N|`` does not grow),
    ``bad_rows`` (none left), ``potential`` (non-increasing history),
    ``potential_strict`` (every pass that closes a direction-1 or
    direction-2 run shrinks the potential),
    ``termination``, ``eq1`` (``|N| >= l1 + l2 + l3``), ``eq2``
    (``|W| <= eq2_upper``), ``chain`` and ``multiplicity`` (outermost
    neighbours shared by at most two directions).
    """
    report = ViolationReport(family="normalize")
    for raw in sets:
        W = vertex_set(raw)
        if not W:
            continue
        report.checked += 1
        witness = {"size": len(W), "vertices": sorted_vertices(W)}
        try:
            result, trace = normalize(W)
        except NonTerminationError:
            report.record("termination", True, witness)
            continue
        report.record("termination", False)
        n_before = len(neighbor_set(W))
        n_after = len(neighbor_set(result))
        l = gray_row_counts(result)  # noqa: E741
        report.record("cardinality", len(result) != len(W), witness)
        report.record("neighbors", n_after > n_before, witness)
        report.record("bad_rows", has_bad_rows(result), witness)
        report.record("potential", not trace.potential_non_increasing(), witness)
        report.record("potential_strict", not trace.potential_strictly_decreasing(), witness)
        report.record("eq1", n_after < eq1_lower(l), witness)
        report.record("eq2", len(result) > eq2_upper(l), witness)
        report.record("chain", not eq1_eq2_chain(l).holds, witness)
        report.record(
            "multiplicity",
            max(outermost_multiplicity(result).values()) > 2,
            witness,
        )
    return report


def is_connected_class(c: CanonicalSet) -> bool:
    """Whether an enumerated class really is connected."""
    return is_connected(c.vertices)


__all__ = [
    "CanonicalSet",
    "ProfileRow",
    "ScanResult",
    "ScanSummary",
    "ViolationReport",
    "MAX_CONNECTED_SIZE",
    "MEASURES",
    "canonicalize",
    "enum_connected",
    "enum_connected_levels",
    "enum_region_subsets",
    "scan_region",
    "splitmix64",
    "sample_random",
    "sample_random_sizes",
    "profile",
    "conjecture_scan",
    "check_family",
    "normalization_suite",
    "is_connected_class",
]
