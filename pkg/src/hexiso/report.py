"""Report I/O - vertex-set input files, JSON documents and profile CSV."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from jsonschema import ValidationError, validate

from .errors import InvalidArgumentsError
from .hexgrid import VertexSet, vertex_set
from .search import ProfileRow

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Schemas
# ---------------------------------------------------------------------------

VERTEX_SET_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "vertices": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
            "uniqueItems": True,
        }
    },
    "required": ["vertices"],
}

VERTEX_SET_FILE_SCHEMA: Dict[str, Any] = {
    "oneOf": [
        VERTEX_SET_SCHEMA,
        {
            "type": "object",
            "properties": {"sets": {"type": "array", "items": VERTEX_SET_SCHEMA}},
            "required": ["sets"],
        },
    ]
}

PROFILE_CSV_HEADER = "n,measure,min,witness"


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------

def parse_vertex_sets(document: Any) -> List[VertexSet]:
    """Validate a decoded vertex-set document and return its sets.

    Accepts ``{"vertices": [...]}`` or ``{"sets": [{"vertices": [...]}, ...]}``.

    Raises:
        jsonschema.ValidationError: on malformed input or duplicate vertices.
    """
    validate(instance=document, schema=VERTEX_SET_FILE_SCHEMA)
    entries = document["sets"] if "sets" in document else [document]
    return [vertex_set(entry["vertices"]) for entry in entries]


def load_vertex_sets(path: Union[str, Path]) -> List[VertexSet]:
    """Read and validate a vertex-set file.

    Raises:
        InvalidArgumentsError: if the file is missing or not JSON.
        jsonschema.ValidationError: if the document does not match the schema.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except OSError as exc:
        raise InvalidArgumentsError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidArgumentsError(f"{path} is not valid JSON: {exc}") from exc
    sets = parse_vertex_sets(document)
    logger.info("loaded %d vertex set(s) from %s", len(sets), path)
    return sets


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def dumps_json(payload: Any) -> str:
    """Deterministic JSON text (sorted keys, two-space indent)."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def write_text(text: str, output_path: Optional[Union[str, Path]] = None) -> str:
    """Write ``text`` (newline-terminated) to ``output_path`` when given; return it."""
    if not text.endswith("\n"):
        text += "\n"
    if output_path:
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(text)
    return text


def format_witness(vertices: Iterable[Iterable[int]]) -> str:
    """Compact ``x:y;x:y`` form of a sorted vertex list."""
    return ";".join(f"{x}:{y}" for x, y in vertices)


def profile_csv(rows: Iterable[ProfileRow]) -> str:
    """Profile rows as CSV with header ``n,measure,min,witness``."""
    lines = [PROFILE_CSV_HEADER]
    for row in rows:
        lines.append(f"{row.n},{row.measure},{row.min_value},{format_witness(row.argmin.to_list())}")
    return "\n".join(lines)


__all__ = [
    "VERTEX_SET_SCHEMA",
    "VERTEX_SET_FILE_SCHEMA",
    "PROFILE_CSV_HEADER",
    "ValidationError",
    "parse_vertex_sets",
    "load_vertex_sets",
    "dumps_json",
    "write_text",
    "format_witness",
    "profile_csv",
]
