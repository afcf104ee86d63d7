"""
Exact vertex coloring.

Color classes are kept as vertex bitmasks. The exact search is a DSATUR
ordered backtracking (saturation, then degree, then lower id) that only
ever opens the next unused color, which removes color-permutation symmetry.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable

from core.models.coloring import Coloring, ColoringError
from core.models.graph import Graph, GraphError, iter_bits

logger = logging.getLogger(__name__)


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff ``coloring`` is proper on ``g``. A vertex without a color is an error."""
    colors = [coloring.color_of(v) for v in range(g.n)]
    return all(colors[u] != colors[v] for u, v in g.edges())


def two_coloring(g: Graph) -> Coloring | None:
    """Breadth-first 2-coloring, or ``None`` when ``g`` has an odd cycle."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Coloring.from_sequence(side)


def greedy_clique(g: Graph) -> list[int]:
    """Clique grown from the max-degree vertex, adding the highest-degree common neighbour each step."""
    if g.n == 0:
        return []
    degrees = [mask.bit_count() for mask in g.adj]
    start = max(range(g.n), key=lambda v: (degrees[v], -v))
    clique = [start]
    candidates = g.adj[start]
    while candidates:
        v = max(iter_bits(candidates), key=lambda u: (degrees[u], -u))
        clique.append(v)
        candidates &= g.adj[v]
    return sorted(clique)


def _saturation(adj_mask: int, classes: list[int]) -> int:
    return sum(1 for members in classes if members & adj_mask)


def _pick_vertex(g: Graph, uncolored: int, classes: list[int], degrees: list[int]) -> int:
    best = -1
    best_key = None
    for v in iter_bits(uncolored):
        key = (_saturation(g.adj[v], classes), degrees[v])
        # Strict comparison keeps the lowest id on ties
        if best_key is None or key > best_key:
            best, best_key = v, key
    return best


def _classes_to_coloring(n: int, classes: list[int]) -> Coloring:
    colors = [0] * n
    for c, members in enumerate(classes):
        for v in iter_bits(members):
            colors[v] = c
    return Coloring.from_sequence(colors)


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy DSATUR coloring: an upper bound on the chromatic number."""
    degrees = [mask.bit_count() for mask in g.adj]
    classes: list[int] = []
    uncolored = (1 << g.n) - 1
    while uncolored:
        v = _pick_vertex(g, uncolored, classes, degrees)
        for c, members in enumerate(classes):
            if not members & g.adj[v]:
                classes[c] |= 1 << v
                break
        else:
            classes.append(1 << v)
        uncolored &= ~(1 << v)
    return _classes_to_coloring(g.n, classes)


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper coloring with at most ``k`` colors, or ``None`` if none exists."""
    if k < 1:
        raise ColoringError(f"k must be positive, got {k}")
    if g.n == 0:
        return Coloring({})

    degrees = [mask.bit_count() for mask in g.adj]
    classes: list[int] = []
    core, peeled = _peel_below(g, k)

    def extend(uncolored: int) -> bool:
        if not uncolored:
            return True
        v = _pick_vertex(g, uncolored, classes, degrees)
        rest = uncolored & ~(1 << v)
        bit = 1 << v
        for c in range(len(classes)):
            if not classes[c] & g.adj[v]:
                classes[c] |= bit
                if extend(rest):
                    return True
                classes[c] ^= bit
        if len(classes) < k:
            classes.append(bit)
            if extend(rest):
                return True
            classes.pop()
        return False

    if not extend(core):
        return None

    # Each peeled vertex saw fewer than k later-colored neighbours, so a color is free
    for v in reversed(peeled):
        for c, members in enumerate(classes):
            if not members & g.adj[v]:
                classes[c] |= 1 << v
                break
        else:
            classes.append(1 << v)
    return _classes_to_coloring(g.n, classes)


def _peel_below(g: Graph, k: int) -> tuple[int, list[int]]:
    """
    Repeatedly drop vertices of degree < k.

    Returns the surviving k-core as a bitmask and the dropped vertices in
    removal order.
    """
    degree = [mask.bit_count() for mask in g.adj]
    alive = (1 << g.n) - 1
    stack = [v for v in range(g.n) if degree[v] < k]
    peeled = []
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        peeled.append(v)
        for u in iter_bits(g.adj[v] & alive):
            degree[u] -= 1
            if degree[u] == k - 1:
                stack.append(u)
    return alive, peeled


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """
    Smallest k with a proper k-coloring, together with a witness.

    Fast paths: no edges gives 1, bipartite gives 2. Otherwise the search runs
    upward from max(greedy clique size, 3) and stops below the DSATUR bound.
    """
    if g.n < 1:
        raise GraphError("The chromatic number needs at least one vertex")

    if g.num_edges == 0:
        return 1, Coloring.from_sequence([0] * g.n)
    bipartite = two_coloring(g)
    if bipartite is not None:
        return 2, bipartite

    lower = max(len(greedy_clique(g)), 3)
    upper = dsatur_coloring(g)
    if lower < upper.k:
        logger.debug("Searching %s for a coloring with %d..%d colors", g, lower, upper.k - 1)
    for k in range(lower, upper.k):
        witness = is_k_colorable(g, k)
        if witness is not None:
            return k, witness
    return upper.k, upper


def extend_coloring(g: Graph, v: int, coloring: Coloring) -> Coloring | None:
    """
    Extend a coloring of ``g - v`` (compacted ids) to ``g`` without a new color.

    Works whenever the neighbours of ``v`` miss one of the colors, which is
    guaranteed when ``degree(v)`` is below the number of colors.
    """
    def original(u: int) -> int:
        return u if u < v else u - 1

    colors = [coloring.color_of(original(u)) if u != v else -1 for u in range(g.n)]
    taken = {colors[u] for u in iter_bits(g.adj[v])}
    free = [c for c in range(coloring.k) if c not in taken]
    if not free:
        return None
    colors[v] = free[0]
    return Coloring.from_sequence(colors)


def odd_cycle_extension_coloring(length: int, neighbours: Iterable[int]) -> tuple[Graph, Coloring]:
    """
    3-color C_length plus one extra vertex joined to ``neighbours``.

    The extra vertex shares color 0 with its lowest-id cycle non-neighbour w;
    the path w+1, ..., w-1 around the cycle has an even number of vertices and
    alternates colors 1 and 2.
    """
    if length < 3 or length % 2 == 0:
        raise GraphError(f"Expected an odd cycle length of at least 3, got {length}")
    attached = sorted(set(neighbours))
    if any(not 0 <= u < length for u in attached):
        raise GraphError(f"Neighbours {attached} must lie on the cycle 0..{length - 1}")
    outside = [u for u in range(length) if u not in attached]
    if not outside:
        raise GraphError("The extra vertex must miss at least one cycle vertex")

    extra = length
    g = Graph.from_edges(
        length + 1, [(i, (i + 1) % length) for i in range(length)] + [(u, extra) for u in attached]
    )
    w = outside[0]
    colors = [0] * (length + 1)
    for step in range(1, length):
        colors[(w + step) % length] = 1 if step % 2 else 2
    colors[w] = colors[extra] = 0
    return g, Coloring.from_sequence(colors)
