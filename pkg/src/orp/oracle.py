"""Slow reference implementations used to validate the fast algorithms.

Everything here is deliberately independent of the production code paths:
distances come from a queue-based label-correcting sweep instead of the
heap-based solvers, potentials come from exhaustive path enumeration or
plain fixpoint iteration. Guards fail loudly; callers pick sizes under
them. Performance is a non-goal.
"""

from __future__ import annotations

from collections import deque
from math import comb

from .graph import INF, Cost, Graph


def label_correcting_distances(
    g: Graph, t: int, removed: frozenset[int] = frozenset()
) -> list[Cost]:
    """Distances to ``t`` via Bellman-Ford-style label correcting."""
    dist: list[Cost] = [INF] * g.n
    dist[t] = 0
    queue = deque([t])
    queued = [False] * g.n
    queued[t] = True
    while queue:
        u = queue.popleft()
        queued[u] = False
        du = dist[u]
        for eid, v, ln in g.adj[u]:
            if eid in removed:
                continue
            nd = du + ln
            if nd < dist[v]:
                dist[v] = nd
                if not queued[v]:
                    queued[v] = True
                    queue.append(v)
    return dist


def brute_svalue(g: Graph, u: int, e: int, t: int) -> Cost:
    """Shortest u-to-t distance with edge ``e`` removed; INF if disconnected."""
    if not 0 <= e < g.m:
        raise ValueError(f"edge {e} out of range")
    return label_correcting_distances(g, t, frozenset((e,)))[u]


def brute_orp_value(g: Graph, s: int, t: int, *, max_vertices: int = 12) -> Cost:
    """Minimum robust length over all simple s-t paths, by enumeration.

    The robust length of a path is the maximum of its total length and,
    for each path edge, the prefix cost up to that edge plus the shortest
    detour around it computed on the edge-deleted graph.
    """
    if g.n > max_vertices:
        raise ValueError(f"guard exceeded: n={g.n} > {max_vertices}")
    if s == t:
        return 0
    avoid_cache: dict[int, list[Cost]] = {}

    def avoid(eid: int) -> list[Cost]:
        vec = avoid_cache.get(eid)
        if vec is None:
            vec = label_correcting_distances(g, t, frozenset((eid,)))
            avoid_cache[eid] = vec
        return vec

    best: Cost = INF
    visited = [False] * g.n
    visited[s] = True

    def dfs(u: int, prefix: Cost, worst: Cost) -> None:
        nonlocal best
        if worst >= best or prefix >= best:
            return
        if u == t:
            value = prefix if prefix > worst else worst
            if value < best:
                best = value
            return
        for eid, v, ln in g.adj[u]:
            if visited[v]:
                continue
            term = prefix + avoid(eid)[u]
            visited[v] = True
            dfs(v, prefix + ln, term if term > worst else worst)
            visited[v] = False

    dfs(s, 0, 0)
    return best


def enumerate_simple_path_values(
    g: Graph, s: int, t: int, *, max_vertices: int = 12
) -> list[tuple[Cost, Cost]]:
    """All simple s-t paths as (length, robust length) pairs, unpruned."""
    if g.n > max_vertices:
        raise ValueError(f"guard exceeded: n={g.n} > {max_vertices}")
    if s == t:
        return [(0, 0)]
    avoid_cache: dict[int, list[Cost]] = {}

    def avoid(eid: int) -> list[Cost]:
        vec = avoid_cache.get(eid)
        if vec is None:
            vec = label_correcting_distances(g, t, frozenset((eid,)))
            avoid_cache[eid] = vec
        return vec

    out: list[tuple[Cost, Cost]] = []
    visited = [False] * g.n
    visited[s] = True

    def dfs(u: int, prefix: Cost, worst: Cost) -> None:
        if u == t:
            out.append((prefix, prefix if prefix > worst else worst))
            return
        for eid, v, ln in g.adj[u]:
            if visited[v]:
                continue
            term = prefix + avoid(eid)[u]
            visited[v] = True
            dfs(v, prefix + ln, term if term > worst else worst)
            visited[v] = False

    dfs(s, 0, 0)
    return out


def brute_korp_values(
    g: Graph, t: int, k: int, *, max_states: int = 250_000
) -> list[Cost]:
    """Fixpoint iteration for the k-failure potential, all sources at once.

    States are (vertex, removed edge set); values start at INF except 0 at
    the destination and only ever decrease, so iteration terminates.
    """
    if k < 0:
        raise ValueError("failure parameter must be nonnegative")
    m = g.m
    subsets = sum(comb(m, i) for i in range(min(k, m) + 1))
    if g.n * subsets > max_states:
        raise ValueError(
            f"guard exceeded: {g.n * subsets} states > {max_states}"
        )
    memo: dict[frozenset[int], list[Cost]] = {}

    def values(removed: frozenset[int], budget: int) -> list[Cost]:
        cached = memo.get(removed)
        if cached is not None:
            return cached
        if budget == 0:
            vals = label_correcting_distances(g, t, removed)
            memo[removed] = vals
            return vals
        active = [e for e in g.edges if e[0] not in removed]
        subs = {
            eid: values(removed | {eid}, budget - 1) for eid, _, _, _ in active
        }
        vals: list[Cost] = [INF] * g.n
        vals[t] = 0
        changed = True
        while changed:
            changed = False
            for eid, u, v, ln in active:
                sub = subs[eid]
                for a, b in ((u, v), (v, u)):
                    if a == t:
                        continue
                    cand = ln + vals[b]
                    blocked = sub[a]
                    if blocked > cand:
                        cand = blocked
                    if cand < vals[a]:
                        vals[a] = cand
                        changed = True
        memo[removed] = vals
        return vals

    return values(frozenset(), k)


def brute_korp_value(
    g: Graph, s: int, t: int, k: int, *, max_states: int = 250_000
) -> Cost:
    """k-failure potential of a single source; see brute_korp_values."""
    return brute_korp_values(g, t, k, max_states=max_states)[s]


def has_two_edge_disjoint_paths(g: Graph, s: int, t: int) -> bool:
    """True iff two edge-disjoint s-t paths exist (two augmenting rounds)."""
    if s == t:
        return True
    # Each undirected edge becomes a unit-capacity arc in both directions.
    cap: dict[tuple[int, int], int] = {}
    for eid, _, _, _ in g.edges:
        cap[(eid, 0)] = 1
        cap[(eid, 1)] = 1

    def augment() -> bool:
        parent: dict[int, tuple[int, int, int]] = {}
        queue = deque([s])
        seen = {s}
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for eid, v, _ in g.adj[u]:
                a, b = g.endpoints(eid)
                direction = 0 if u == a else 1
                if cap[(eid, direction)] == 0 or v in seen:
                    continue
                seen.add(v)
                parent[v] = (u, eid, direction)
                queue.append(v)
        if t not in seen:
            return False
        v = t
        while v != s:
            u, eid, direction = parent[v]
            cap[(eid, direction)] -= 1
            cap[(eid, 1 - direction)] += 1
            v = u
        return True

    flow = 0
    for _ in range(2):
        if not augment():
            break
        flow += 1
    return flow >= 2
