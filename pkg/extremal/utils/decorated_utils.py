from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from django.db import models

from core.models.graph import Graph, GraphError


class CoreKind(models.TextChoices):
    COMPLETE = "complete", "Complete graph"
    CYCLE = "cycle", "Cycle"


@dataclass(frozen=True)
class CoreSpec:
    kind: CoreKind
    order: int

    def __post_init__(self):
        if self.kind == CoreKind.COMPLETE and self.order < 1:
            raise GraphError(f"A complete core needs at least 1 vertex, got {self.order}")
        if self.kind == CoreKind.CYCLE and self.order < 3:
            raise GraphError(f"A cycle core needs at least 3 vertices, got {self.order}")

    def build(self) -> Graph:
        if self.kind == CoreKind.COMPLETE:
            return Graph.complete(self.order)
        return Graph.cycle(self.order)


Attachment = tuple[int, Sequence[int]]


def validate_parent_array(parents: Sequence[int]) -> None:
    """A rooted tree: exactly one root marked -1, every other entry a vertex of the tree, no cycles."""
    size = len(parents)
    if size == 0:
        raise GraphError("A tree needs at least one vertex")
    roots = [i for i, p in enumerate(parents) if p == -1]
    if len(roots) != 1:
        raise GraphError(f"Parent array {list(parents)} must have exactly one root, found {len(roots)}")
    for i, p in enumerate(parents):
        if p != -1 and not 0 <= p < size:
            raise GraphError(f"Parent array {list(parents)}: parent {p} of {i} is out of range")

    # Every walk upwards must reach the root within `size` steps
    for start in range(size):
        v, steps = start, 0
        while parents[v] != -1:
            v = parents[v]
            steps += 1
            if steps > size:
                raise GraphError(f"Parent array {list(parents)} contains a cycle through {start}")


def build_decorated(core: CoreSpec, attachments: Sequence[Attachment] = ()) -> Graph:
    """
    Core graph with rooted trees hung from core vertices.

    Core vertices are 0..order-1. Each tree's vertices follow in attachment
    order, and its root is joined to the anchor by one edge, so a tree with t
    vertices adds exactly t edges. Several trees may share an anchor.
    """
    base = core.build()
    edges = base.edges()
    n = base.n
    for anchor, parents in attachments:
        if not 0 <= anchor < core.order:
            raise GraphError(f"Anchor {anchor} is not a core vertex of {core.kind} {core.order}")
        validate_parent_array(parents)
        for i, p in enumerate(parents):
            edges.append((anchor if p == -1 else n + p, n + i))
        n += len(parents)
    return Graph.from_edges(n, edges)


def random_tree(size: int, rng: np.random.Generator) -> list[int]:
    """Random recursive tree as a parent array rooted at 0."""
    return [-1] + [int(rng.integers(0, i)) for i in range(1, size)]


def random_attachments(core_order: int, extra_vertices: int, rng: np.random.Generator) -> list[Attachment]:
    """Split ``extra_vertices`` into random trees on random anchors."""
    attachments = []
    remaining = extra_vertices
    while remaining > 0:
        size = int(rng.integers(1, remaining + 1))
        anchor = int(rng.integers(0, core_order))
        attachments.append((anchor, random_tree(size, rng)))
        remaining -= size
    return attachments


def parse_tree_spec(spec: str) -> list[tuple[int | None, int]]:
    """
    Parse ``3,1,2`` (sizes on random anchors) or ``0:3,2:1`` (anchor:size).

    The two forms may be mixed; an empty spec means no trees.
    """
    entries: list[tuple[int | None, int]] = []
    for token in filter(None, (part.strip() for part in spec.split(","))):
        anchor_text, _, size_text = token.rpartition(":")
        try:
            anchor = int(anchor_text) if anchor_text else None
            size = int(size_text)
        except ValueError:
            raise GraphError(f"Tree spec entry {token!r} is not 'size' or 'anchor:size'") from None
        if size < 1:
            raise GraphError(f"Tree spec entry {token!r} needs a positive size")
        if anchor is not None and anchor < 0:
            raise GraphError(f"Tree spec entry {token!r} has a negative anchor")
        entries.append((anchor, size))
    return entries


def attachments_from_spec(
    core_order: int, entries: Sequence[tuple[int | None, int]], rng: np.random.Generator
) -> list[Attachment]:
    attachments = []
    for anchor, size in entries:
        if anchor is None:
            anchor = int(rng.integers(0, core_order))
        attachments.append((anchor, random_tree(size, rng)))
    return attachments
