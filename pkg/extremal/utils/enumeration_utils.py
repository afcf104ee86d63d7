"""
Connected-graph enumeration.

Labeled graphs on n vertices are the edge subsets of K_n, one bit per slot
in graph6 order, so mask k is decoded and encoded without a lookup table.
Unlabeled graphs are represented by their canonical graph6 string.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterator

import numpy as np
from django.db import models

from core.models.graph import Graph, iter_bits
from core.utils.graph6_utils import bits_to_graph6, decode_graph6, slot_pairs

logger = logging.getLogger(__name__)

MAX_N = 8
MAX_LABELED_N = 7
MAX_DEDUP_N = 7


class EnumerationMode(models.TextChoices):
    LABELED = "labeled", "Labeled"
    UNLABELED = "unlabeled", "Unlabeled"
    SAMPLED = "sampled", "Sampled"


class EnumerationError(ValueError):
    pass


def check_range(n: int, mode: str) -> None:
    if not 1 <= n <= MAX_N:
        raise EnumerationError(f"n must be in 1..{MAX_N}, got {n}")
    if mode == EnumerationMode.LABELED and n > MAX_LABELED_N:
        raise EnumerationError(f"Exhaustive labeled enumeration stops at n={MAX_LABELED_N}; sample n={n} instead")


@lru_cache(maxsize=None)
def _slot_masks(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((k, 1 << i, 1 << j) for k, (i, j) in enumerate(slot_pairs(n)))


def slot_count(n: int) -> int:
    return n * (n - 1) // 2


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for k, bit_i, bit_j in _slot_masks(n):
        if mask >> k & 1:
            i = bit_i.bit_length() - 1
            j = bit_j.bit_length() - 1
            adj[i] |= bit_j
            adj[j] |= bit_i
    return Graph(n, tuple(adj))


def labeled_connected(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Connected graphs among edge masks ``start <= mask < stop`` of K_n, in mask order."""
    if stop is None:
        stop = 1 << slot_count(n)
    for mask in range(start, stop):
        g = graph_from_mask(n, mask)
        if g.is_connected():
            yield g


def canonical_form(g: Graph) -> str:
    """
    Lexicographically smallest graph6 string over all vertex orders.

    Vertices are placed one position at a time; placing position j fixes the
    j-th column of the upper triangle, which is the next block of the graph6
    bit string, so any prefix worse than the best found is cut.
    """
    n = g.n
    adj = g.adj
    if n <= 1:
        return bits_to_graph6(n, ())

    best: list[int] | None = None
    placed: list[int] = []
    columns: list[int] = []

    def column_of(v: int) -> int:
        # First placed vertex is the most significant bit
        value = 0
        for u in placed:
            value = (value << 1) | (adj[u] >> v & 1)
        return value

    def search(free: int) -> None:
        nonlocal best
        depth = len(placed)
        if depth == n:
            if best is None or columns < best:
                best = columns.copy()
            return
        options = sorted((column_of(v), v) for v in iter_bits(free))
        for column, v in options:
            # Options are ascending, so the first losing prefix ends the loop
            if best is not None and columns + [column] > best[: depth + 1]:
                break
            placed.append(v)
            columns.append(column)
            search(free & ~(1 << v))
            placed.pop()
            columns.pop()

    search((1 << n) - 1)

    bits = []
    for j in range(1, n):
        column = best[j]
        bits.extend((column >> (j - 1 - i)) & 1 for i in range(j))
    return bits_to_graph6(n, bits)


@lru_cache(maxsize=None)
def unlabeled_connected_forms(n: int) -> tuple[str, ...]:
    """
    Canonical graph6 strings of the connected graphs on n vertices, sorted.

    Grown from the (n-1)-vertex classes: every connected graph has a vertex
    whose removal keeps it connected, so adding one vertex with a nonempty
    neighbourhood to each smaller class reaches every class.
    """
    check_range(n, EnumerationMode.UNLABELED)
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)

    forms = set()
    for smaller in unlabeled_connected_forms(n - 1):
        h = decode_graph6(smaller)
        for neighbourhood in range(1, 1 << (n - 1)):
            adj = [mask | ((neighbourhood >> v & 1) << (n - 1)) for v, mask in enumerate(h.adj)]
            adj.append(neighbourhood)
            forms.add(canonical_form(Graph(n, tuple(adj))))
    logger.info("Found %d unlabeled connected graphs on %d vertices", len(forms), n)
    return tuple(sorted(forms))


def enumerate_connected(n: int, mode: str = EnumerationMode.LABELED) -> Iterator[Graph]:
    """
    Stream the connected graphs on n vertices.

    Labeled: every connected edge subset of K_n in mask order (n <= 7).
    Unlabeled: one canonical representative per isomorphism class (n <= 8).
    """
    check_range(n, mode)
    if mode == EnumerationMode.LABELED:
        yield from labeled_connected(n)
    elif mode == EnumerationMode.UNLABELED:
        for form in unlabeled_connected_forms(n):
            yield decode_graph6(form)
    else:
        raise EnumerationError(f"Mode {mode!r} cannot be enumerated exhaustively")


def sample_connected(n: int, samples: int, seed: int) -> Iterator[Graph]:
    """Uniform random edge subsets of K_n (seeded PCG64), keeping the connected ones."""
    check_range(n, EnumerationMode.SAMPLED)
    rng = np.random.default_rng(seed)
    slots = slot_count(n)
    for _ in range(samples):
        mask = int(rng.integers(0, 1 << slots)) if slots else 0
        g = graph_from_mask(n, mask)
        if g.is_connected():
            yield g


@lru_cache(maxsize=None)
def count_connected_labeled(n: int) -> int:
    """Labeled connected graphs on n vertices, by the exponential-formula recurrence."""
    if n < 1:
        raise EnumerationError(f"n must be positive, got {n}")
    total = 2 ** comb(n, 2)
    for k in range(1, n):
        total -= comb(n - 1, k - 1) * count_connected_labeled(k) * 2 ** comb(n - k, 2)
    return total


def count_connected_unlabeled(n: int) -> int:
    """
    Isomorphism classes among the labeled connected graphs, by canonical form.

    Only labelings with non-decreasing degrees are canonicalized; relabelling
    any graph in degree order gives one, so every class is still reached.
    """
    if not 1 <= n <= MAX_DEDUP_N:
        raise EnumerationError(f"Dedup recount is limited to n in 1..{MAX_DEDUP_N}, got {n}")
    forms = set()
    for g in labeled_connected(n):
        degrees = [mask.bit_count() for mask in g.adj]
        if all(a <= b for a, b in zip(degrees, degrees[1:])):
            forms.add(canonical_form(g))
    return len(forms)


def _partitions(n: int, largest: int | None = None) -> Iterator[dict[int, int]]:
    """Integer partitions of n as {part: multiplicity}."""
    largest = n if largest is None else largest
    if n == 0:
        yield {}
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            counts = dict(rest)
            counts[part] = counts.get(part, 0) + 1
            yield counts


def _pair_orbits(cycles: dict[int, int]) -> int:
    """Orbits on vertex pairs of a permutation with the given cycle type."""
    orbits = 0
    lengths = sorted(cycles)
    for i, k in enumerate(lengths):
        m = cycles[k]
        orbits += m * (k // 2) + comb(m, 2) * k
        for other in lengths[i + 1 :]:
            orbits += m * cycles[other] * gcd(k, other)
    return orbits


@lru_cache(maxsize=None)
def count_unlabeled(n: int) -> int:
    """All graphs on n vertices up to isomorphism, by Burnside over the cycle types of S_n."""
    total = Fraction(0)
    for cycles in _partitions(n):
        centralizer = 1
        for k, m in cycles.items():
            centralizer *= k**m * factorial(m)
        total += Fraction(2 ** _pair_orbits(cycles), centralizer)
    return int(total)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def count_connected_by_orbits(n: int) -> int:
    """Connected unlabeled graphs on n vertices, inverting the Euler transform of ``count_unlabeled``."""
    if not 1 <= n <= MAX_N:
        raise EnumerationError(f"n must be in 1..{MAX_N}, got {n}")
    totals = [count_unlabeled(k) for k in range(n + 1)]
    weighted = [0] * (n + 1)
    for k in range(1, n + 1):
        weighted[k] = k * totals[k] - sum(weighted[j] * totals[k - j] for j in range(1, k))
    return sum(_mobius(n // d) * weighted[d] for d in range(1, n + 1) if n % d == 0) // n
