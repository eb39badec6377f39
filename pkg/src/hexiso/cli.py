"""Command-line front end.

Subcommands::

    grid        --radius R
    measure     --input FILE [--region infinite|finite:R]
    normalize   --input FILE [--trace]
    check       --family connected|random|finite-grid|normalize --max-size N
                [--radius R] [--samples K] [--window R] [--seed S] [--format text|json]
    profile     --max-size N --measure N|B|E [--format csv|json]
    conjecture  --radius R
    bounds      --eval f|g|rc --c VALUE

Global flags ``--threads``, ``--log-level`` and ``--output`` go before the
subcommand.  Exit codes: 0 success, 1 violations found, 2 usage or domain
error, 3 resource guard or non-termination.
"""

import argparse
import logging
import math
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from jsonschema import ValidationError

from . import config
from .bounds import CONSTANTS, f, g, r_threshold
from .errors import HexIsoError, InvalidArgumentsError, NonTerminationError, ResourceGuardError
from .families import lemma1_report
from .hexgrid import sorted_vertices
from .normalize import normalize, parallelogram
from .perimeter import Region, neighbor_set, perimeter_report
from .report import dumps_json, load_vertex_sets, profile_csv, write_text
from .search import check_family, conjecture_scan, profile, scan_region

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class _ArgumentError(Exception):
    """Raised by the parser instead of exiting the process."""

    def __init__(self, status: int, message: str = "") -> None:
        super().__init__(message)
        self.status = status
        self.message = message


class _Parser(argparse.ArgumentParser):
    def exit(self, status: int = 0, message: Optional[str] = None) -> None:  # type: ignore[override]
        if message:
            sys.stderr.write(message)
        raise _ArgumentError(status, message or "")

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all subcommands."""
    parser = _Parser(
        prog="hexiso",
        description="Isoperimetric measurements and checks on the hexagonal grid",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker processes for partitioned scans (default: HEXISO_THREADS or CPU count)",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="Logging level (default: HEXISO_LOG_LEVEL or WARNING)",
    )
    parser.add_argument(
        "--output",
        default=None,
        help="Write the result to this file instead of stdout",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    grid = sub.add_parser("grid", help="Vertex, neighbour and edge counts of G_r")
    grid.add_argument("--radius", type=int, required=True)

    measure = sub.add_parser("measure", help="Perimeter measures of vertex sets")
    measure.add_argument("--input", required=True, help="Vertex-set JSON file")
    measure.add_argument("--region", default="infinite", help="infinite or finite:R")

    norm = sub.add_parser("normalize", help="Remove bad rows from vertex sets")
    norm.add_argument("--input", required=True, help="Vertex-set JSON file")
    norm.add_argument("--trace", action="store_true", help="Include the elimination trace")

    check = sub.add_parser("check", help="Run the isoperimetric checks over a family")
    check.add_argument(
        "--family",
        choices=["connected", "random", "finite-grid", "normalize"],
        required=True,
    )
    check.add_argument("--max-size", type=int, required=True)
    check.add_argument("--radius", type=int, default=None)
    check.add_argument("--samples", type=int, default=10_000)
    check.add_argument("--window", type=int, default=8)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--format", choices=["text", "json"], default="text")

    prof = sub.add_parser("profile", help="Minimum perimeter per set size")
    prof.add_argument("--max-size", type=int, required=True)
    prof.add_argument("--measure", choices=["N", "B", "E"], required=True)
    prof.add_argument("--format", choices=["csv", "json"], default="csv")

    conj = sub.add_parser("conjecture", help="Exact minimum ratio over small subsets of G_r")
    conj.add_argument("--radius", type=int, required=True)

    bnd = sub.add_parser("bounds", help="Evaluate f(c), g(c) or the radius threshold")
    bnd.add_argument("--eval", choices=["f", "g", "rc"], required=True)
    bnd.add_argument("--c", type=float, required=True)

    return parser


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_grid(args: argparse.Namespace) -> Tuple[str, int]:
    result = lemma1_report(args.radius)
    return dumps_json(result.to_dict()), EXIT_OK if result.ok else EXIT_VIOLATIONS


def _cmd_measure(args: argparse.Namespace) -> Tuple[str, int]:
    region = Region.parse(args.region)
    reports = [perimeter_report(W, region).to_dict() for W in load_vertex_sets(args.input)]
    return dumps_json({"reports": reports}), EXIT_OK


def _cmd_normalize(args: argparse.Namespace) -> Tuple[str, int]:
    results: List[Dict[str, Any]] = []
    for W in load_vertex_sets(args.input):
        normalized, trace = normalize(W)
        entry: Dict[str, Any] = {
            "vertices": sorted_vertices(normalized),
            "size": len(normalized),
            "n_before": len(neighbor_set(W)),
            "n_after": len(neighbor_set(normalized)),
        }
        if args.trace:
            entry["trace"] = trace.to_dict()
            entry["parallelogram"] = parallelogram(normalized).to_dict()
        results.append(entry)
    return dumps_json({"results": results}), EXIT_OK


def _cmd_check(args: argparse.Namespace) -> Tuple[str, int]:
    report = check_family(
        args.family,
        max_size=args.max_size,
        radius=args.radius,
        samples=args.samples,
        window=args.window,
        seed=config.resolve_seed(args.seed),
        threads=config.resolve_threads(args.threads),
    )
    status = EXIT_VIOLATIONS if report.total_violations else EXIT_OK
    if args.format == "json":
        return dumps_json(report.to_dict()), status
    lines = [
        f"family: {report.family}",
        f"checked: {report.checked}",
        f"violations: {report.total_violations}",
    ]
    lines.extend(f"  {name}: {count}" for name, count in sorted(report.violations.items()))
    for witness in report.witnesses:
        lines.append(f"  witness {witness['check']}: {witness['vertices']}")
    return "\n".join(lines), status


def _cmd_profile(args: argparse.Namespace) -> Tuple[str, int]:
    rows = profile(args.max_size, args.measure)
    if args.format == "json":
        return dumps_json({"rows": [r.to_dict() for r in rows]}), EXIT_OK
    return profile_csv(rows), EXIT_OK


def _cmd_conjecture(args: argparse.Namespace) -> Tuple[str, int]:
    threads = config.resolve_threads(args.threads)
    summary = scan_region(args.radius, threads=threads)
    results = {
        m: conjecture_scan(args.radius, m, summary=summary).to_dict() for m in ("N", "E")
    }
    return dumps_json(results), EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> Tuple[str, int]:
    if not math.isfinite(args.c):
        raise InvalidArgumentsError(f"--c must be a finite number, got {args.c!r}")
    fn = {"f": f, "g": g, "rc": r_threshold}[args.eval]
    payload = {
        "eval": args.eval,
        "c": args.c,
        "value": fn(args.c),
        "constants": {role: c.to_dict() for role, c in CONSTANTS.items()},
    }
    return dumps_json(payload), EXIT_OK


_COMMANDS = {
    "grid": _cmd_grid,
    "measure": _cmd_measure,
    "normalize": _cmd_normalize,
    "check": _cmd_check,
    "profile": _cmd_profile,
    "conjecture": _cmd_conjecture,
    "bounds": _cmd_bounds,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run one subcommand and return the exit code."""
    config.load_environment()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        return exc.status

    logging.basicConfig(
        stream=sys.stderr,
        level=config.resolve_log_level(args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        text, status = _COMMANDS[args.command](args)
    except (ResourceGuardError, NonTerminationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except (HexIsoError, ValidationError) as exc:
        message = exc.message if isinstance(exc, ValidationError) else str(exc)
        sys.stderr.write(f"error: {message}\n")
        return EXIT_USAGE

    output = write_text(text, args.output)
    if not args.output:
        sys.stdout.write(output)
    logger.info("%s finished with exit code %d", args.command, status)
    return status


def main() -> None:
    """Console entry point."""
    sys.exit(run())


__all__ = ["build_parser", "run", "main"]
