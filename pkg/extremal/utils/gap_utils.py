from __future__ import annotations

import heapq
from dataclasses import dataclass

from django.db import models

from core.models.graph import Graph, GraphError, iter_bits
from core.utils.coloring_utils import chromatic_number


class ClassificationKind(models.TextChoices):
    TYPE_A = "TypeA", "Complete core with trees attached"
    TYPE_B = "TypeB", "Odd cycle core with trees attached"
    NEITHER = "Neither", "Neither"


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class GapReport:
    n_vertices: int
    n_edges: int
    chi: int
    gap: int

    @property
    def bound(self) -> int:
        """chi(chi-1)/2 + |V| - chi, the edge count an extremal graph attains."""
        return self.chi * (self.chi - 1) // 2 + self.n_vertices - self.chi

    @property
    def is_extremal(self) -> bool:
        return self.gap == 0

    def as_line(self) -> str:
        return f"n={self.n_vertices} m={self.n_edges} chi={self.chi} gap={self.gap}"


@dataclass(frozen=True)
class Classification:
    kind: ClassificationKind
    core_order: int | None
    core_vertices: tuple[int, ...]

    @property
    def is_extremal_type(self) -> bool:
        return self.kind != ClassificationKind.NEITHER

    def as_line(self) -> str:
        core = ",".join(str(v) for v in self.core_vertices)
        if self.kind == ClassificationKind.TYPE_A:
            return f"TypeA m={self.core_order} core={core}"
        if self.kind == ClassificationKind.TYPE_B:
            return f"TypeB len={self.core_order} core={core}"
        return f"Neither core={core}"


def gap_value(n_vertices: int, n_edges: int, chi: int) -> int:
    return n_edges - (chi * (chi - 1) // 2 + n_vertices - chi)


def _require_connected(g: Graph) -> None:
    if g.n < 1 or not g.is_connected():
        raise GraphError(f"{g} is not connected")


def gap(g: Graph, chi: int | None = None) -> GapReport:
    """
    Edge surplus over the connected-graph bound.

    ``chi`` may be passed when it is already known; otherwise it is computed
    exactly. A gap of 0 marks an extremal graph.
    """
    _require_connected(g)
    if chi is None:
        chi, _ = chromatic_number(g)
    m = g.num_edges
    return GapReport(n_vertices=g.n, n_edges=m, chi=chi, gap=gap_value(g.n, m, chi))


def strip_to_core(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """
    Remove degree-1 vertices, lowest id first, until none is left.

    A tree ends at a single vertex because a lone vertex has degree 0.
    Returns the surviving induced subgraph and the original ids it keeps.
    """
    _require_connected(g)

    degree = [mask.bit_count() for mask in g.adj]
    alive = (1 << g.n) - 1
    leaves = [v for v in range(g.n) if degree[v] == 1]
    heapq.heapify(leaves)
    while leaves:
        v = heapq.heappop(leaves)
        if degree[v] != 1 or not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        degree[v] = 0
        for u in iter_bits(g.adj[v] & alive):
            degree[u] -= 1
            if degree[u] == 1:
                heapq.heappush(leaves, u)

    kept = tuple(iter_bits(alive))
    return g.induced_subgraph(kept), kept


def _is_complete(core: Graph) -> bool:
    return all(mask.bit_count() == core.n - 1 for mask in core.adj)


def _is_cycle(core: Graph) -> bool:
    # A connected 2-regular graph is a single cycle
    return core.n >= 3 and all(mask.bit_count() == 2 for mask in core.adj) and core.is_connected()


def classify(g: Graph) -> Classification:
    """
    Structural type of a connected graph, from its leaf-stripped core alone.

    K_1 core: TypeA(1). Complete core on m >= 3 vertices: TypeA(m), which
    includes the triangle. Odd cycle of length >= 5: TypeB. Anything else is
    Neither.
    """
    core, kept = strip_to_core(g)
    if core.n == 1:
        return Classification(ClassificationKind.TYPE_A, 1, kept)
    if _is_complete(core):
        return Classification(ClassificationKind.TYPE_A, core.n, kept)
    if _is_cycle(core) and core.n % 2 == 1:
        return Classification(ClassificationKind.TYPE_B, core.n, kept)
    return Classification(ClassificationKind.NEITHER, None, kept)
