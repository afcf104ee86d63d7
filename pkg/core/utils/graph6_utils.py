"""
graph6 reading and writing.

Layout: N(n) followed by the upper triangle of the adjacency matrix, column
by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
character with an offset of 63. Lines are converted through networkx;
``bits_to_graph6`` packs raw slot bits for canonical forms and edge masks.
"""

from __future__ import annotations

from typing import Iterable

import networkx as nx

from core.models.graph import Graph, GraphError

HEADER = ">>graph6<<"
_SMALL_N = 62
_MEDIUM_N = 258047
_LARGE_N = 68719476735


class GraphFormatError(GraphError):
    pass


def slot_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle slots in graph6 bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Graph on 0..n-1; nodes must already be labelled 0..n-1."""
    n = nxg.number_of_nodes()
    if sorted(nxg.nodes) != list(range(n)):
        raise GraphError(f"networkx nodes must be 0..{n - 1}")
    return Graph.from_edges(n, nxg.edges())


def _encode_n(n: int) -> str:
    if n <= _SMALL_N:
        return chr(n + 63)
    if n <= _MEDIUM_N:
        return "~" + _pack_int(n, 3)
    if n <= _LARGE_N:
        return "~~" + _pack_int(n, 6)
    raise GraphFormatError(f"graph6 cannot encode {n} vertices")


def _pack_int(value: int, groups: int) -> str:
    return "".join(chr(((value >> (6 * (groups - 1 - k))) & 63) + 63) for k in range(groups))


def bits_to_graph6(n: int, bits: Iterable[int]) -> str:
    """Pack an upper-triangle bit sequence (graph6 order) behind the size field."""
    out = [_encode_n(n)]
    group = count = 0
    for bit in bits:
        group = (group << 1) | bit
        count += 1
        if count == 6:
            out.append(chr(group + 63))
            group = count = 0
    if count:
        out.append(chr((group << (6 - count)) + 63))
    return "".join(out)


def encode_graph6(g: Graph) -> str:
    if g.n > _LARGE_N:
        raise GraphFormatError(f"graph6 cannot encode {g.n} vertices")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def decode_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise GraphFormatError("Empty graph6 line")
    if any(not 63 <= ord(ch) <= 126 for ch in line):
        raise GraphFormatError(f"{line!r} contains characters outside the graph6 range")

    try:
        nxg = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise GraphFormatError(f"Malformed graph6 line {line!r}: {e}") from None

    g = from_networkx(nxg)
    # Only the canonical spelling is accepted: zero padding bits, shortest size field
    if encode_graph6(g) != line:
        raise GraphFormatError(f"graph6 line {line!r} has non-zero padding bits or an oversized size field")
    return g


def looks_like_graph6(line: str) -> bool:
    try:
        decode_graph6(line)
    except GraphFormatError:
        return False
    return True


def read_graph6(text: str) -> list[Graph]:
    graphs = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(decode_graph6(line))
        except GraphFormatError as e:
            raise GraphFormatError(f"line {number}: {e}") from e
    return graphs


def write_graph6(graphs: Iterable[Graph]) -> str:
    return "".join(encode_graph6(g) + "\n" for g in graphs)
