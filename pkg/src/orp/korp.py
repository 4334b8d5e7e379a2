"""Routing against up to k adversarial edge failures.

The k-failure potential of a vertex satisfies a min-max recursion over its
incident edges: either the probed edge survives and the walk pays its
length plus the potential of the far endpoint at the same budget, or the
probe fails and the walk continues from the same vertex with one budget
unit less and the edge removed. solve_korp evaluates the recursion with
the same label-setting sweep as the single-failure solver, memoizing
subproblems by their removed-edge set. The induced optimal strategy simply
re-solves on the failure set discovered so far.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from typing import NamedTuple, Protocol

from .graph import INF, Cost, Graph, dijkstra_tree

DEFAULT_K_CAP = 3


class Stranded(Exception):
    """The strategy has no surviving route to the destination."""


class RoutingStrategy(Protocol):
    """Deterministic decision rule for the walk executor.

    ``choose`` maps (known failed edge ids, current vertex) to the next
    incident edge to probe, returns None to halt at the destination, and
    raises Stranded when no route survives.
    """

    def choose(self, failed: frozenset[int], v: int) -> int | None: ...


@dataclass(frozen=True)
class KorpSolution:
    """Potentials for failure budget ``k`` and the minimizing first edges."""

    k: int
    yk: list[Cost]
    successor_edge: list[int | None]


class _Level(NamedTuple):
    y: list[Cost]
    successor_edge: list[int | None]


def _solve_level(
    g: Graph,
    t: int,
    removed: frozenset[int],
    budget: int,
    memo: dict[frozenset[int], _Level],
) -> _Level:
    cached = memo.get(removed)
    if cached is not None:
        return cached
    if budget == 0:
        spt = dijkstra_tree(g, t, removed=removed)
        level = _Level(spt.dstar, spt.parent_edge)
        memo[removed] = level
        return level
    n = g.n
    y: list[Cost] = [INF] * n
    successor_edge: list[int | None] = [None] * n
    y[t] = 0
    heap: list[tuple[Cost, int]] = [(0, t)]
    while heap:
        yu, u = heappop(heap)
        if yu > y[u]:
            continue
        for eid, v, ln in g.adj[u]:
            if eid in removed:
                continue
            cand = yu + ln
            if cand >= y[v]:
                # The failure branch can only raise the candidate further.
                continue
            blocked = _solve_level(g, t, removed | {eid}, budget - 1, memo).y[v]
            if blocked > cand:
                cand = blocked
            if cand < y[v]:
                y[v] = cand
                successor_edge[v] = eid
                heappush(heap, (cand, v))
    level = _Level(y, successor_edge)
    memo[removed] = level
    return level


def _check_params(g: Graph, t: int, k: int, cap: int) -> None:
    if not 0 <= t < g.n:
        raise ValueError(f"destination {t} out of range")
    if k < 0:
        raise ValueError("failure parameter must be nonnegative")
    if k > cap:
        raise ValueError(
            f"failure parameter {k} exceeds the configured cap {cap}"
        )


def solve_korp(g: Graph, t: int, k: int, *, cap: int = DEFAULT_K_CAP) -> KorpSolution:
    """Potential of every vertex against up to ``k`` failures.

    Budget 0 is the plain shortest-path distance; budget 1 matches
    solve_orp exactly. Runtime grows steeply with ``k``, hence the cap.
    """
    _check_params(g, t, k, cap)
    memo: dict[frozenset[int], _Level] = {}
    level = _solve_level(g, t, frozenset(), k, memo)
    return KorpSolution(k, level.y, level.successor_edge)


class OptimalStrategy:
    """Worst-case-optimal routing decisions for up to ``k`` failures.

    At each decision point the remaining budget is k minus the number of
    known failures; the strategy follows the minimizing edge of the
    subproblem on the surviving graph. Subproblem solutions are memoized
    across calls, so repeated decisions are cheap.
    """

    def __init__(self, g: Graph, t: int, k: int, *, cap: int = DEFAULT_K_CAP):
        _check_params(g, t, k, cap)
        self.graph = g
        self.dest = t
        self.k = k
        self._memo: dict[frozenset[int], _Level] = {}

    def choose(self, failed: frozenset[int], v: int) -> int | None:
        failed = frozenset(failed)
        if len(failed) > self.k:
            raise ValueError(
                f"budget exceeded: {len(failed)} known failures with k={self.k}"
            )
        if v == self.dest:
            return None
        level = _solve_level(
            self.graph, self.dest, failed, self.k - len(failed), self._memo
        )
        if level.y[v] == INF:
            raise Stranded(
                f"no surviving route from vertex {v} after failures {sorted(failed)}"
            )
        return level.successor_edge[v]


def optimal_strategy(
    g: Graph, t: int, k: int, *, cap: int = DEFAULT_K_CAP
) -> OptimalStrategy:
    """Strategy whose worst case over all scenarios equals the potential."""
    return OptimalStrategy(g, t, k, cap=cap)
