"""Weighted undirected multigraph model, text I/O, and shortest-path trees.

Vertices are dense integers ``0..n-1`` internally; the text file format is
1-based. Edges carry stable dense ids ``0..m-1`` assigned in order of
appearance, so parallel edges stay distinguishable. Lengths must be finite
and nonnegative; with integer lengths every downstream computation in this
package is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Iterable

INF = math.inf

Cost = int | float


class GraphFormatError(ValueError):
    """Malformed graph or detour-table file."""


class Graph:
    """Undirected multigraph with stable edge identities.

    ``edges[i]`` is the tuple ``(i, u, v, length)``; ``adj[v]`` lists
    ``(edge_id, other_endpoint, length)`` in edge-id order. Instances are
    immutable after construction and safe to share across threads.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edge_list: Iterable[tuple[int, int, Cost]]):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        edges: list[tuple[int, int, int, Cost]] = []
        adj: list[list[tuple[int, int, Cost]]] = [[] for _ in range(n)]
        for eid, (u, v, length) in enumerate(edge_list):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid}: endpoint out of range")
            if u == v:
                raise ValueError(f"edge {eid}: self-loops are not allowed")
            if not 0 <= length < INF:
                raise ValueError(f"edge {eid}: length must be finite and nonnegative")
            edges.append((eid, u, v, length))
            adj[u].append((eid, v, length))
            adj[v].append((eid, u, length))
        self.n = n
        self.edges = edges
        self.adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        _, u, v, _ = self.edges[eid]
        return u, v

    def length(self, eid: int) -> Cost:
        return self.edges[eid][3]

    def is_incident(self, eid: int, v: int) -> bool:
        _, a, b, _ = self.edges[eid]
        return v == a or v == b

    def other_endpoint(self, eid: int, v: int) -> int:
        _, a, b, _ = self.edges[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"edge {eid} is not incident to vertex {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _parse_length(token: str, lineno: int) -> Cost:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise GraphFormatError(f"malformed length at line {lineno}") from None
    if math.isnan(value) or math.isinf(value):
        raise GraphFormatError(f"malformed length at line {lineno}")
    return value


def parse_graph(text) -> Graph:
    """Parse the line-oriented graph format.

    Lines starting with ``c`` are comments. A single header
    ``p orp <n> <m>`` precedes exactly ``m`` edge lines of the form
    ``e <u> <v> <length>`` with 1-based endpoints. Edge ids are assigned
    by order of appearance. Accepts a string or a readable file object.
    """
    if hasattr(text, "read"):
        text = text.read()
    n: int | None = None
    m_declared = 0
    triples: list[tuple[int, int, Cost]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(f"duplicate header at line {lineno}")
            if len(fields) != 4 or fields[1] != "orp":
                raise GraphFormatError(f"malformed header at line {lineno}")
            try:
                n = int(fields[2])
                m_declared = int(fields[3])
            except ValueError:
                raise GraphFormatError(f"malformed header at line {lineno}") from None
            if n < 1 or m_declared < 0:
                raise GraphFormatError(f"malformed header at line {lineno}")
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(f"edge before header at line {lineno}")
            if len(fields) != 4:
                raise GraphFormatError(f"malformed edge at line {lineno}")
            try:
                u = int(fields[1])
                v = int(fields[2])
            except ValueError:
                raise GraphFormatError(f"malformed edge at line {lineno}") from None
            length = _parse_length(fields[3], lineno)
            if length < 0:
                raise GraphFormatError(f"negative length at line {lineno}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range at line {lineno}")
            if u == v:
                raise GraphFormatError(f"self-loop at line {lineno}")
            if len(triples) >= m_declared:
                raise GraphFormatError(f"more edges than declared at line {lineno}")
            triples.append((u - 1, v - 1, length))
        else:
            raise GraphFormatError(f"unrecognized line {lineno}: {fields[0]!r}")
    if n is None:
        raise GraphFormatError("missing header")
    if len(triples) != m_declared:
        raise GraphFormatError(
            f"header declares {m_declared} edges, found {len(triples)}"
        )
    return Graph(n, triples)


def _format_length(length: Cost) -> str:
    if isinstance(length, int):
        return str(length)
    return repr(length)


def write_graph(g: Graph) -> str:
    """Serialize ``g`` in the text format; round-trips through parse_graph."""
    lines = [f"p orp {g.n} {g.m}"]
    for _, u, v, length in g.edges:
        lines.append(f"e {u + 1} {v + 1} {_format_length(length)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ShortestPathTree:
    """Single-destination shortest-path tree.

    ``dstar[u]`` is the u-to-dest distance (INF when unreachable).
    ``parent_edge[u]`` and ``parent_vertex[u]`` give the first hop toward
    the destination; both are None at the destination itself and at
    unreachable vertices. ``pops`` counts finalized heap extractions.
    """

    dest: int
    parent_edge: list[int | None]
    parent_vertex: list[int | None]
    dstar: list[Cost]
    pops: int = field(default=0, compare=False)


def dijkstra_tree(g: Graph, t: int, removed: frozenset[int] = frozenset()) -> ShortestPathTree:
    """Grow the shortest-path tree from every vertex toward ``t``.

    Deterministic: heap ties break toward the smaller vertex id, and equal
    relaxations keep the incumbent parent, which favors the smaller edge id
    because adjacency lists are scanned in edge-id order. Edges in
    ``removed`` are skipped without copying the graph.
    """
    if not 0 <= t < g.n:
        raise ValueError(f"destination {t} out of range")
    n = g.n
    dist: list[Cost] = [INF] * n
    parent_edge: list[int | None] = [None] * n
    parent_vertex: list[int | None] = [None] * n
    dist[t] = 0
    heap: list[tuple[Cost, int]] = [(0, t)]
    adj = g.adj
    pops = 0
    push, pop = heappush, heappop
    while heap:
        d, u = pop(heap)
        if d > dist[u]:
            continue
        pops += 1
        if removed:
            for eid, v, ln in adj[u]:
                if eid in removed:
                    continue
                nd = d + ln
                if nd < dist[v]:
                    dist[v] = nd
                    parent_edge[v] = eid
                    parent_vertex[v] = u
                    push(heap, (nd, v))
        else:
            for eid, v, ln in adj[u]:
                nd = d + ln
                if nd < dist[v]:
                    dist[v] = nd
                    parent_edge[v] = eid
                    parent_vertex[v] = u
                    push(heap, (nd, v))
    return ShortestPathTree(t, parent_edge, parent_vertex, dist, pops)
