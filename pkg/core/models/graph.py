from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexId = int


class GraphError(ValueError):
    """Raised for invalid graph construction or an operation whose precondition fails."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is a bitmask of the neighbours of ``v``. Python integers are
    unbounded, so the same representation covers graphs above 64 vertices.
    """

    n: int
    adj: tuple[int, ...]

    # Construction

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {n}")

        adj = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"Edge ({u}, {v}) is a self-loop")
            # Duplicates collapse into the same bit
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, m: int) -> Graph:
        full = (1 << m) - 1
        return cls(m, tuple(full & ~(1 << v) for v in range(m)))

    @classmethod
    def cycle(cls, length: int) -> Graph:
        if length < 3:
            raise GraphError(f"A cycle needs at least 3 vertices, got {length}")
        return cls.from_edges(length, ((i, (i + 1) % length) for i in range(length)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # Reading

    @property
    def num_edges(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge set as ascending ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: VertexId) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: VertexId) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    # Derived graphs

    def remove_vertex(self, v: VertexId) -> Graph:
        """Delete ``v`` and its edges; ids above ``v`` shift down by one."""
        self._check_vertex(v)
        if self.n < 2:
            raise GraphError("Cannot remove the only vertex of K_1")

        low = (1 << v) - 1
        adj = []
        for u, mask in enumerate(self.adj):
            if u == v:
                continue
            adj.append((mask & low) | (mask >> (v + 1) << v))
        return Graph(self.n - 1, tuple(adj))

    def add_pendant(self, anchor: VertexId) -> Graph:
        """Return a new graph with vertex ``n`` joined only to ``anchor``."""
        self._check_vertex(anchor)
        adj = list(self.adj)
        adj[anchor] |= 1 << self.n
        adj.append(1 << anchor)
        return Graph(self.n + 1, tuple(adj))

    def induced_subgraph(self, vertices: Iterable[VertexId]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled 0..k-1 in ascending order."""
        kept = sorted(set(vertices))
        for v in kept:
            self._check_vertex(v)
        position = {v: i for i, v in enumerate(kept)}
        adj = []
        for v in kept:
            mask = 0
            for u in iter_bits(self.adj[v]):
                if u in position:
                    mask |= 1 << position[u]
            adj.append(mask)
        return Graph(len(kept), tuple(adj))

    def relabel(self, order: Sequence[VertexId]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise GraphError(f"{list(order)} is not a permutation of 0..{self.n - 1}")
        position = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            mask = 0
            for u in iter_bits(self.adj[v]):
                mask |= 1 << position[u]
            adj.append(mask)
        return Graph(self.n, tuple(adj))

    # Connectivity

    def reachable_from(self, source: VertexId) -> int:
        """Bitmask of the vertices reachable from ``source``."""
        self._check_vertex(source)
        seen = frontier = 1 << source
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= self.adj[u]
            frontier = grown & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n < 1:
            raise GraphError("Connectivity is undefined for the empty graph")
        return self.reachable_from(0) == (1 << self.n) - 1

    def connected_ordering(self) -> list[VertexId]:
        """
        Breadth-first order from vertex 0 with neighbours taken in ascending id.

        Every prefix of the returned list induces a connected subgraph.
        """
        if not self.is_connected():
            raise GraphError("A connected ordering needs a connected graph")

        order = [0]
        seen = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in iter_bits(self.adj[u] & ~seen):
                seen |= 1 << w
                order.append(w)
                queue.append(w)
        return order

    def _check_vertex(self, v: VertexId) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"Vertex {v} is not in 0..{self.n - 1}")

    def __str__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"
