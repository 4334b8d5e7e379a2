"""Strategy execution against failure scenarios, plus instance generators.

A scenario fixes a set of failed edges before the walk starts; the walk
only learns about a failure by probing the edge. A failed probe costs
nothing and leaves the walk where it is. Because strategies are
deterministic, maximizing over fixed scenarios already captures an
adaptive adversary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import INF, Cost, Graph, dijkstra_tree
from .korp import RoutingStrategy, Stranded


class StepCapExceeded(Exception):
    """The walk did not terminate within the cycle-guard step budget."""


@dataclass(frozen=True)
class Scenario:
    """A set of edge ids the adversary has failed."""

    failed: frozenset[int]

    def __init__(self, failed=()):
        object.__setattr__(self, "failed", frozenset(failed))


@dataclass(frozen=True)
class WalkStep:
    """One probe: a traversal, or a failed probe that stays in place."""

    source: int
    edge: int
    target: int
    failed: bool


@dataclass(frozen=True)
class Walk:
    steps: tuple[WalkStep, ...]
    total_cost: Cost
    probed_failures: tuple[int, ...]


def execute_walk(
    g: Graph, strategy: RoutingStrategy, s: int, t: int, scenario: Scenario
) -> Walk:
    """Run ``strategy`` from ``s`` until it reaches ``t`` or strands.

    Only traversed edges are paid for; failed probes add nothing. A
    stranded strategy yields a walk of infinite total cost. Walks longer
    than (|failures| + 1) * n + m steps raise StepCapExceeded.
    """
    for name, v in (("source", s), ("destination", t)):
        if not 0 <= v < g.n:
            raise ValueError(f"{name} {v} out of range")
    for eid in scenario.failed:
        if not 0 <= eid < g.m:
            raise ValueError(f"scenario edge {eid} out of range")
    cap = (len(scenario.failed) + 1) * g.n + g.m
    known: frozenset[int] = frozenset()
    steps: list[WalkStep] = []
    probed: list[int] = []
    cost: Cost = 0
    v = s
    while v != t:
        if len(steps) >= cap:
            raise StepCapExceeded(f"step cap exceeded after {cap} steps")
        try:
            eid = strategy.choose(known, v)
        except Stranded:
            return Walk(tuple(steps), INF, tuple(probed))
        if eid is None or not 0 <= eid < g.m or not g.is_incident(eid, v):
            raise ValueError(
                f"strategy returned non-incident edge {eid} at vertex {v}"
            )
        if eid in scenario.failed:
            steps.append(WalkStep(v, eid, v, True))
            if eid not in known:
                known = known | {eid}
                probed.append(eid)
        else:
            w = g.other_endpoint(eid, v)
            steps.append(WalkStep(v, eid, w, False))
            cost += g.length(eid)
            v = w
    return Walk(tuple(steps), cost, tuple(probed))


def evaluate_worst_case(
    g: Graph,
    strategy: RoutingStrategy,
    s: int,
    t: int,
    k: int,
    *,
    max_scenarios: int = 1_000_000,
) -> tuple[Cost, Scenario]:
    """Exact maximum walk cost over every scenario of at most ``k`` edges.

    Returns the cost and the lexicographically smallest maximizing
    scenario. Refuses instances whose scenario count exceeds the budget.
    """
    if k < 0:
        raise ValueError("failure parameter must be nonnegative")
    m = g.m
    total = sum(comb(m, i) for i in range(min(k, m) + 1))
    if total > max_scenarios:
        raise ValueError(
            f"scenario budget exceeded: {total} scenarios > {max_scenarios}"
        )
    best_cost: Cost = -INF
    best: tuple[int, ...] = ()
    for size in range(min(k, m) + 1):
        for combo in combinations(range(m), size):
            walk = execute_walk(g, strategy, s, t, Scenario(combo))
            cost = walk.total_cost
            if cost > best_cost or (cost == best_cost and combo < best):
                best_cost = cost
                best = combo
    return best_cost, Scenario(best)


class GreedyStrategy:
    """Always head down a shortest path in the surviving graph.

    Recomputes the shortest-path tree whenever a new failure is learned,
    with the same tie-breaking as dijkstra_tree. Simple, widely deployed,
    and exponentially worse than optimal in the failure budget.
    """

    def __init__(self, g: Graph, t: int):
        if not 0 <= t < g.n:
            raise ValueError(f"destination {t} out of range")
        self.graph = g
        self.dest = t
        self._trees: dict[frozenset[int], object] = {}

    def choose(self, failed: frozenset[int], v: int) -> int | None:
        if v == self.dest:
            return None
        failed = frozenset(failed)
        spt = self._trees.get(failed)
        if spt is None:
            spt = dijkstra_tree(self.graph, self.dest, removed=failed)
            self._trees[failed] = spt
        eid = spt.parent_edge[v]
        if eid is None:
            raise Stranded(
                f"no surviving route from vertex {v} after failures {sorted(failed)}"
            )
        return eid


def greedy_strategy(g: Graph, t: int) -> GreedyStrategy:
    return GreedyStrategy(g, t)


def gen_bad_example(k: int, scale: int) -> tuple[Graph, int, int]:
    """Adversarial instance where the greedy strategy pays almost
    (2^(k+1) - 1) times the optimum.

    k+1 parallel source-destination edges of length scale+1 guarantee the
    optimum scale+1. A chain of spokes with doubling lengths and
    zero-length links to the destination baits the greedy walk into
    riding the chain out and all the way back.
    """
    if k < 1:
        raise ValueError("failure parameter must be at least 1")
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    s, t = 0, 1
    edges: list[tuple[int, int, Cost]] = [(s, t, scale + 1) for _ in range(k + 1)]
    edges.append((s, 2, scale))
    for i in range(1, k):
        edges.append((1 + i, 2 + i, (2**i) * scale))
    for i in range(1, k + 1):
        edges.append((1 + i, t, 0))
    return Graph(k + 2, edges), s, t


def gen_random_graph(
    n: int, m: int, max_weight: int, seed: int, *, connected: bool = True
) -> Graph:
    """Seeded random multigraph with uniform integer weights.

    Connected mode lays down a random spanning tree first and tops it up
    with uniformly random extra edges; parallel edges are allowed.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if m < 0 or max_weight < 0:
        raise ValueError("edge count and weights must be nonnegative")
    if n == 1 and m > 0:
        raise ValueError("a single vertex admits no edges")
    if connected and m < n - 1:
        raise ValueError(f"connected mode needs at least {n - 1} edges")
    rng = random.Random(seed)
    edges: list[tuple[int, int, Cost]] = []
    if connected and n > 1:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            u = order[i]
            v = order[rng.randrange(i)]
            edges.append((u, v, rng.randint(0, max_weight)))
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edges.append((u, v, rng.randint(0, max_weight)))
    return Graph(n, edges)
