"""Cheapest nominal path subject to a hard robust-length bound.

Among all s-t paths whose robust length stays within a budget B, find one
of minimum ordinary length. A modified shortest-path relaxation does it:
an edge uv may extend a path only when the prefix cost at u plus the
detour around uv also fits the budget. Because the robust length includes
the plain path length itself, a final check on the destination label
closes the remaining gap; if it fires, no qualifying path exists at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush

from .detour import DetourTable
from .graph import INF, Cost, Graph
from .solver import robust_length


@dataclass(frozen=True)
class ParetoResult:
    feasible: bool
    path: list[int] | None = None
    length: Cost | None = None
    robust: Cost | None = None
    reason: str | None = None


def solve_pareto(g: Graph, s: int, t: int, bound: Cost, dt: DetourTable) -> ParetoResult:
    """Minimum-length s-t path with robust length at most ``bound``.

    Infeasible results distinguish an unreachable destination from a bound
    that is simply too tight. ``bound`` may be INF, which degenerates to
    the plain shortest path.
    """
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range")
    if dt.tree.dest != t or dt.graph is not g:
        raise ValueError("detour table was built for a different instance")
    if isinstance(bound, float) and math.isnan(bound):
        raise ValueError("bound must be a number")
    if bound < 0:
        raise ValueError("bound must be nonnegative")

    n = g.n
    adj = g.adj
    parent_edge_tree = dt.tree.parent_edge
    dstar = dt.tree.dstar
    sval = dt.svalue
    d: list[Cost] = [INF] * n
    par_edge: list[int | None] = [None] * n
    par_vertex: list[int | None] = [None] * n
    d[s] = 0
    heap: list[tuple[Cost, int]] = [(0, s)]
    while heap:
        du, u = heappop(heap)
        if du > d[u]:
            continue
        if u == t:
            break
        for eid, v, ln in adj[u]:
            # Detour feasibility at u when probing eid fails.
            detour = sval[u] if parent_edge_tree[u] == eid else dstar[u]
            if du + detour > bound:
                continue
            nd = du + ln
            if nd < d[v]:
                d[v] = nd
                par_edge[v] = eid
                par_vertex[v] = u
                heappush(heap, (nd, v))

    if d[t] == INF or d[t] > bound:
        reason = "unreachable" if dstar[s] == INF else "bound"
        return ParetoResult(feasible=False, reason=reason)
    edges: list[int] = []
    v = t
    while v != s:
        edges.append(par_edge[v])
        v = par_vertex[v]
    edges.reverse()
    return ParetoResult(
        feasible=True,
        path=edges,
        length=d[t],
        robust=robust_length(g, dt, edges),
    )
