"""JSON, CSV and DOT documents for graphs, colorings, reports and reproduction rows."""
import csv
import io
import json
import logging
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from src.exceptions import DocumentError, InvalidColoringError
from src.models import (
    CSV_COLUMNS,
    BoundReport,
    Graph,
    PredictedValue,
    ReproduceRow,
    SolveResult,
    VerificationReport,
    VertexColoring,
    VertexLabel,
)

logger = logging.getLogger(__name__)


def dumps(document: Any) -> str:
    """Stable JSON text with a trailing newline."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


# ==================== Graphs ====================

def graph_to_document(g: Graph) -> dict[str, Any]:
    return {
        "name": g.name,
        "vertices": [{"id": vid, "label": str(label)} for vid, label in enumerate(g.labels)],
        "edges": [[u, v] for u, v in g.edges],
    }


def graph_from_document(document: dict[str, Any]) -> Graph:
    """
    Parse a graph document; vertex ids must be exactly 0..|V|-1.

    Raises:
        DocumentError: ids are not contiguous, a label is malformed or the edges are invalid
    """
    vertices = sorted(document["vertices"], key=lambda v: v["id"])
    ids = [v["id"] for v in vertices]
    if ids != list(range(len(vertices))):
        raise DocumentError(f"vertex ids must be 0..{len(vertices) - 1}, got {ids}")
    try:
        return Graph(
            name=document.get("name", "graph"),
            labels=tuple(VertexLabel.parse(v["label"]) for v in vertices),
            edges=tuple(tuple(edge) for edge in document["edges"]),
        )
    except (ValueError, ValidationError) as exc:
        raise DocumentError(f"invalid graph document: {exc}") from exc


def graph_to_dot(g: Graph, coloring: Optional[VertexColoring] = None) -> str:
    """Undirected DOT text; nodes are named by label and carry ``color`` when a coloring is given."""
    if coloring is not None and coloring.vertex_count != g.vertex_count:
        raise InvalidColoringError(f"coloring covers {coloring.vertex_count} vertices, {g.name} has {g.vertex_count}")
    lines = [f'graph "{g.name}" {{']
    for vid, label in enumerate(g.labels):
        attributes = f' [color="{coloring.color_of(vid)}"]' if coloring is not None else ""
        lines.append(f'  "{label}"{attributes};')
    for u, v in g.edges:
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ==================== Colorings ====================

def coloring_to_document(c: VertexColoring) -> dict[str, Any]:
    return {"k": c.k, "colors": {str(vid): color for vid, color in enumerate(c.colors)}}


def coloring_from_document(document: dict[str, Any], vertex_count: Optional[int] = None) -> VertexColoring:
    """
    Parse a coloring document.

    Args:
        document: {"k": int, "colors": {"<id>": int}}
        vertex_count: Order of the graph the coloring must cover

    Raises:
        InvalidColoringError: ids do not match the graph, or k is not the used color count
    """
    try:
        assigned = {int(vid): int(color) for vid, color in document["colors"].items()}
    except (TypeError, ValueError) as exc:
        raise InvalidColoringError(f"malformed coloring entries: {exc}") from exc

    expected = set(range(vertex_count if vertex_count is not None else len(assigned)))
    if set(assigned) != expected:
        missing = sorted(expected - set(assigned))
        extra = sorted(set(assigned) - expected)
        raise InvalidColoringError(f"coloring ids do not match the graph: missing {missing}, unknown {extra}")
    try:
        return VertexColoring(k=document["k"], colors=tuple(assigned[v] for v in sorted(assigned)))
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        raise InvalidColoringError(messages) from exc


# ==================== Reports ====================

def report_to_document(report: VerificationReport) -> dict[str, Any]:
    document = report.model_dump(mode="json")
    document["passed"] = report.passed
    return document


def solve_result_to_document(result: SolveResult) -> dict[str, Any]:
    return {
        "target": result.target.value,
        "value": result.value,
        "status": result.status.value,
        "witness": coloring_to_document(result.witness),
        "nodes": result.nodes_explored,
        "elapsed_ms": result.elapsed_ms,
        "lower_bound_rule": result.lower_bound_rule,
        "lower": result.lower,
        "upper": result.upper,
        "stats": result.stats.model_dump(mode="json"),
    }


def bounds_to_document(report: BoundReport) -> dict[str, Any]:
    return report.model_dump(mode="json")


def prediction_to_document(prediction: PredictedValue) -> dict[str, Any]:
    document: dict[str, Any] = {
        "target": prediction.target.value,
        "value": prediction.value,
        "branch": prediction.branch,
    }
    if prediction.bounds_only:
        document["lower"] = prediction.lower
        document["upper"] = prediction.upper
    return document


# ==================== Reproduction Rows ====================

def rows_to_csv(rows: Sequence[ReproduceRow]) -> str:
    """CSV text with the frozen column order."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.csv_record())
    return buffer.getvalue()


def rows_to_document(rows: Sequence[ReproduceRow]) -> list[dict[str, Any]]:
    return [row.model_dump(mode="json") for row in rows]


def load_json(text: str, source: str = "<input>") -> Any:
    """
    Parse JSON text.

    Raises:
        DocumentError: the text is not JSON
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source} is not valid JSON: {exc}") from exc
