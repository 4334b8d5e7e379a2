"""Single-failure routing: potentials, nominal paths, and robust lengths.

The robust length of a path is the worst arrival cost one adversarial edge
failure on it can force: the maximum of the full path length and, for each
path edge, the prefix cost up to that edge plus the best detour around it.
The potential y(v) is the least robust length over all v-to-dest paths.
solve_orp computes y for every source at once with a label-setting sweep,
reusing the precomputed detour table for the failure branch of each
relaxation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush

from .detour import DetourTable, svalue_query
from .graph import INF, Cost, Graph


class NoRobustPath(Exception):
    """Requested a nominal path from a vertex with infinite potential."""


@dataclass(frozen=True)
class OrpSolution:
    """Potentials plus successor pointers for one destination.

    Following ``successor_edge`` from any vertex with finite potential
    traces an optimal nominal path to ``dest``. ``finalize_order`` lists
    vertices in the order their labels became final; the corresponding
    potentials are non-decreasing.
    """

    dest: int
    y: list[Cost]
    successor: list[int | None]
    successor_edge: list[int | None]
    detours: DetourTable
    finalize_order: list[int] = field(default_factory=list, compare=False)


def solve_orp(g: Graph, t: int, dt: DetourTable) -> OrpSolution:
    """Potential of every vertex for destination ``t``, plus successors.

    Same determinism contract as dijkstra_tree: heap ties break toward the
    smaller vertex id and equal relaxations keep the incumbent successor.
    Vertices without two edge-disjoint routes to ``t`` end at INF.
    """
    if not 0 <= t < g.n:
        raise ValueError(f"destination {t} out of range")
    if dt.tree.dest != t or dt.graph is not g:
        raise ValueError("detour table was built for a different instance")
    n = g.n
    adj = g.adj
    parent_edge = dt.tree.parent_edge
    dstar = dt.tree.dstar
    sval = dt.svalue
    y: list[Cost] = [INF] * n
    successor: list[int | None] = [None] * n
    successor_edge: list[int | None] = [None] * n
    y[t] = 0
    heap: list[tuple[Cost, int]] = [(0, t)]
    order: list[int] = []
    push, pop = heappush, heappop
    while heap:
        yu, u = pop(heap)
        if yu > y[u]:
            continue
        order.append(u)
        for eid, v, ln in adj[u]:
            # Failure branch: the detour from v when probing edge eid fails.
            s = sval[v] if parent_edge[v] == eid else dstar[v]
            cand = yu + ln
            if s > cand:
                cand = s
            if cand < y[v]:
                y[v] = cand
                successor[v] = u
                successor_edge[v] = eid
                push(heap, (cand, v))
    return OrpSolution(t, y, successor, successor_edge, dt, order)


def robust_length(g: Graph, dt: DetourTable, path) -> Cost:
    """Worst-case arrival cost of committing to ``path``.

    ``path`` is a contiguous, simple sequence of edge ids ending at the
    table's destination; the empty sequence is the destination itself and
    costs 0. The orientation is recovered by walking backward from the
    destination.
    """
    t = dt.tree.dest
    edges = list(path)
    if not edges:
        return 0
    cur = t
    verts = [t]
    for pos, eid in enumerate(reversed(edges)):
        if not 0 <= eid < g.m:
            raise ValueError(f"edge {eid} out of range")
        if not g.is_incident(eid, cur):
            if pos == 0:
                raise ValueError("path does not end at the destination")
            raise ValueError("path is not a contiguous edge sequence")
        cur = g.other_endpoint(eid, cur)
        verts.append(cur)
    verts.reverse()
    if len(set(verts)) != len(verts):
        raise ValueError("path must be simple")
    prefix: Cost = 0
    worst: Cost = 0
    for i, eid in enumerate(edges):
        term = prefix + svalue_query(dt, verts[i], eid)
        if term > worst:
            worst = term
        prefix += g.length(eid)
    return prefix if prefix > worst else worst


def nominal_path(sol: OrpSolution, s: int) -> list[int]:
    """Edge ids of an optimal nominal path from ``s`` to the destination.

    Raises NoRobustPath when the potential of ``s`` is infinite.
    """
    if not 0 <= s < len(sol.y):
        raise ValueError(f"vertex {s} out of range")
    if sol.y[s] == INF:
        raise NoRobustPath(f"no robust path from vertex {s}")
    edges: list[int] = []
    v = s
    while v != sol.dest:
        edges.append(sol.successor_edge[v])
        v = sol.successor[v]
    return edges
