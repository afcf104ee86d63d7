from __future__ import annotations

from django.db import models

from core.models.graph import Graph
from core.utils.edgelist_utils import read_edgelist
from core.utils.graph6_utils import looks_like_graph6, read_graph6


class GraphFormat(models.TextChoices):
    GRAPH6 = "graph6", "graph6"
    EDGELIST = "edgelist", "Edge list"


def infer_format(text: str) -> GraphFormat:
    """graph6 when the first non-blank line parses as graph6, edge list otherwise."""
    for line in text.splitlines():
        if line.strip():
            return GraphFormat.GRAPH6 if looks_like_graph6(line) else GraphFormat.EDGELIST
    return GraphFormat.GRAPH6


def parse_graphs(text: str, graph_format: str | None = None) -> list[Graph]:
    graph_format = graph_format or infer_format(text)
    if graph_format == GraphFormat.GRAPH6:
        return read_graph6(text)
    return read_edgelist(text)
