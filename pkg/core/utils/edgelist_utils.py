from __future__ import annotations

from typing import Iterable

from core.models.graph import Graph, GraphError
from core.utils.graph6_utils import GraphFormatError


def _content_lines(text: str):
    """Yield ``(line_number, fields)`` for lines that are not blank or comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _parse_ints(number: int, fields: list[str], expected: int) -> list[int]:
    if len(fields) != expected:
        raise GraphFormatError(f"line {number}: expected {expected} integers, got {' '.join(fields)!r}")
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise GraphFormatError(f"line {number}: {' '.join(fields)!r} is not a list of integers") from None


def read_edgelist(text: str) -> list[Graph]:
    """
    Parse one or more edge-list graphs.

    Each graph is a header line ``n m`` followed by ``m`` lines ``u v`` with
    0-based ids. ``#`` starts a comment; blank lines are ignored.
    """
    graphs = []
    lines = _content_lines(text)
    for number, fields in lines:
        n, m = _parse_ints(number, fields, 2)
        if n < 0 or m < 0:
            raise GraphFormatError(f"line {number}: negative header {n} {m}")

        edges = []
        for _ in range(m):
            try:
                edge_number, edge_fields = next(lines)
            except StopIteration:
                raise GraphFormatError(f"line {number}: header announces {m} edges, input ended early") from None
            edges.append(_parse_ints(edge_number, edge_fields, 2))

        try:
            graphs.append(Graph.from_edges(n, edges))
        except GraphError as e:
            raise GraphFormatError(f"graph starting at line {number}: {e}") from e
    return graphs


def write_edgelist(graphs: Iterable[Graph]) -> str:
    out = []
    for g in graphs:
        edges = g.edges()
        out.append(f"{g.n} {len(edges)}\n")
        out.extend(f"{u} {v}\n" for u, v in edges)
    return "".join(out)
