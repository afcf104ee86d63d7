from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from core.models.graph import Graph
from core.utils.coloring_utils import chromatic_number
from core.utils.graph6_utils import encode_graph6
from extremal.utils.decorated_utils import CoreKind, CoreSpec, build_decorated, random_attachments
from extremal.utils.enumeration_utils import EnumerationMode, enumerate_connected
from extremal.utils.gap_utils import ClassificationError, ClassificationKind, classify, gap

logger = logging.getLogger(__name__)

MAX_DECORATED_VERTICES = 20


@dataclass(frozen=True)
class DecoratedBounds:
    max_vertices: int = MAX_DECORATED_VERTICES
    complete_orders: tuple[int, int] = (2, 6)
    odd_cycle_lengths: tuple[int, int] = (5, 11)
    even_cycle_lengths: tuple[int, int] = (4, 10)

    def __post_init__(self):
        largest = max(self.complete_orders[1], self.odd_cycle_lengths[1], self.even_cycle_lengths[1])
        if self.max_vertices > MAX_DECORATED_VERTICES:
            raise ClassificationError(f"Decorated graphs are capped at {MAX_DECORATED_VERTICES} vertices")
        if largest > self.max_vertices:
            raise ClassificationError(f"A core of {largest} vertices does not fit in {self.max_vertices}")
        if self.complete_orders[0] < 2 or self.odd_cycle_lengths[0] < 3 or self.even_cycle_lengths[0] < 4:
            raise ClassificationError(f"Core bounds {self} are below the smallest valid cores")


def _require_extremal(g: Graph) -> None:
    if g.n < 2:
        raise ClassificationError("The removal lemma needs at least two vertices")
    report = gap(g)
    if report.gap != 0:
        raise ClassificationError(f"{encode_graph6(g)} is not extremal ({report.as_line()})")


def _removable(g: Graph) -> Iterator[tuple[int, Graph]]:
    """Vertices whose removal leaves ``g`` connected, with the remaining graph."""
    for v in range(g.n):
        rest = g.remove_vertex(v)
        if rest.is_connected():
            yield v, rest


def lemma_big_check(g: Graph) -> bool:
    """
    Vertex-removal lemma on an extremal graph.

    For every v with g - v connected: degree(v) is 1 or equals chi(g - v);
    and when degree(v) = chi(g - v) <= 2, g itself classifies as TypeA/TypeB.
    """
    _require_extremal(g)
    extremal_type = None
    for v, rest in _removable(g):
        degree = g.degree(v)
        chi_rest, _ = chromatic_number(rest)
        if degree != 1 and degree != chi_rest:
            logger.debug("%s: vertex %d has degree %d, chi(G-v)=%d", encode_graph6(g), v, degree, chi_rest)
            return False
        if degree == chi_rest <= 2:
            if extremal_type is None:
                extremal_type = classify(g).is_extremal_type
            if not extremal_type:
                return False
    return True


def removal_heredity_check(g: Graph) -> bool:
    """Every connected g - v of an extremal g is extremal and of TypeA/TypeB."""
    _require_extremal(g)
    for _, rest in _removable(g):
        if gap(rest).gap != 0 or not classify(rest).is_extremal_type:
            return False
    return True


def induction_step_check(g: Graph) -> bool:
    """
    Removing the last vertex of a connected ordering keeps g connected, and
    that vertex has degree 1 or degree chi(g - v).
    """
    _require_extremal(g)
    v = g.connected_ordering()[-1]
    rest = g.remove_vertex(v)
    if not rest.is_connected():
        return False
    degree = g.degree(v)
    return degree == 1 or degree == chromatic_number(rest)[0]


def pendant_closure_check(g: Graph, trials: int, seed: int) -> bool:
    """Adding a pendant vertex at random anchors keeps the kind and core order."""
    before = classify(g)
    if not before.is_extremal_type:
        raise ClassificationError(f"{encode_graph6(g)} classifies as Neither")

    rng = np.random.default_rng(seed)
    for anchor in rng.integers(0, g.n, size=trials):
        after = classify(g.add_pendant(int(anchor)))
        if (after.kind, after.core_order) != (before.kind, before.core_order):
            logger.error(
                "Pendant at %d on %s changed %s to %s", anchor, encode_graph6(g), before.as_line(), after.as_line()
            )
            return False
    return True


def _sample_core(kind: str, rng: np.random.Generator, bounds: DecoratedBounds) -> CoreSpec:
    if kind == "complete":
        low, high = bounds.complete_orders
        return CoreSpec(CoreKind.COMPLETE, int(rng.integers(low, high + 1)))
    low, high = bounds.odd_cycle_lengths if kind == "odd" else bounds.even_cycle_lengths
    parity = 1 if kind == "odd" else 0
    lengths = [length for length in range(low, high + 1) if length % 2 == parity]
    return CoreSpec(CoreKind.CYCLE, int(rng.choice(lengths)))


def random_decorated(kind: str, rng: np.random.Generator, bounds: DecoratedBounds) -> tuple[CoreSpec, Graph]:
    core = _sample_core(kind, rng, bounds)
    extra = int(rng.integers(0, bounds.max_vertices - core.order + 1))
    return core, build_decorated(core, random_attachments(core.order, extra, rng))


def expected_chi(core: CoreSpec) -> int:
    if core.kind == CoreKind.COMPLETE:
        return core.order
    return 3 if core.order % 2 else 2


def decorated_chi_check(trials: int, seed: int, bounds: DecoratedBounds | None = None) -> bool:
    """
    Random decorated graphs keep the chromatic number of their core.

    Each trial draws one complete, one odd-cycle and one even-cycle core with
    random trees, from its own child of ``SeedSequence(seed)``.
    """
    bounds = bounds or DecoratedBounds()
    passed = True
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        for kind in ("complete", "odd", "even"):
            core, g = random_decorated(kind, rng, bounds)
            chi, _ = chromatic_number(g)
            if chi != expected_chi(core):
                logger.error("%s core %d: chi=%d for %s", core.kind, core.order, chi, encode_graph6(g))
                passed = False
    return passed


def extremal_graphs(n_max: int) -> Iterator[Graph]:
    """One representative of every extremal isomorphism class with 2..n_max vertices."""
    for n in range(2, n_max + 1):
        for g in enumerate_connected(n, EnumerationMode.UNLABELED):
            if gap(g).gap == 0:
                yield g


def extremal_corpus(count: int, seed: int, bounds: DecoratedBounds | None = None) -> list[Graph]:
    """Random TypeA/TypeB graphs (trees included) for the pendant closure suite."""
    bounds = bounds or DecoratedBounds()
    corpus = []
    for index, child in enumerate(np.random.SeedSequence(seed).spawn(count)):
        rng = np.random.default_rng(child)
        choice = index % 3
        if choice == 0:
            _, g = random_decorated("complete", rng, bounds)
        elif choice == 1:
            _, g = random_decorated("odd", rng, bounds)
        else:
            size = int(rng.integers(1, bounds.max_vertices + 1))
            g = build_decorated(CoreSpec(CoreKind.COMPLETE, 1), random_attachments(1, size - 1, rng))
        corpus.append(g)
    return corpus


def classification_kind_for(core: CoreSpec) -> tuple[str, int]:
    """Kind and core order that ``classify`` reports for a graph decorated on ``core``."""
    if core.kind == CoreKind.COMPLETE:
        if core.order <= 2:
            return ClassificationKind.TYPE_A, 1
        return ClassificationKind.TYPE_A, core.order
    if core.order == 3:
        return ClassificationKind.TYPE_A, 3
    if core.order % 2:
        return ClassificationKind.TYPE_B, core.order
    return ClassificationKind.NEITHER, None
