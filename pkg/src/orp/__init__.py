"""Worst-case-optimal routing under online edge-failure discovery.

Compute, for every source and one destination on an undirected weighted
multigraph, the cheapest path-plus-detours commitment whose worst-case
arrival cost over unknown edge failures is minimal; generalize to k
failures via routing strategies; simulate strategies against adversarial
scenarios; and cross-check everything with brute-force oracles.
"""

from . import oracle
from .detour import (
    DetourTable,
    build_detour_table,
    compute_c_values,
    compute_lca_labels,
    load_detour_table,
    save_detour_table,
    svalue_query,
)
from .graph import (
    INF,
    Cost,
    Graph,
    GraphFormatError,
    ShortestPathTree,
    dijkstra_tree,
    parse_graph,
    write_graph,
)
from .korp import (
    DEFAULT_K_CAP,
    KorpSolution,
    OptimalStrategy,
    RoutingStrategy,
    Stranded,
    optimal_strategy,
    solve_korp,
)
from .pareto import ParetoResult, solve_pareto
from .simulate import (
    Scenario,
    StepCapExceeded,
    Walk,
    WalkStep,
    evaluate_worst_case,
    execute_walk,
    gen_bad_example,
    gen_random_graph,
    greedy_strategy,
)
from .solver import NoRobustPath, OrpSolution, nominal_path, robust_length, solve_orp

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Cost",
    "DEFAULT_K_CAP",
    "DetourTable",
    "Graph",
    "GraphFormatError",
    "KorpSolution",
    "NoRobustPath",
    "OptimalStrategy",
    "OrpSolution",
    "ParetoResult",
    "RoutingStrategy",
    "Scenario",
    "ShortestPathTree",
    "StepCapExceeded",
    "Stranded",
    "Walk",
    "WalkStep",
    "build_detour_table",
    "compute_c_values",
    "compute_lca_labels",
    "dijkstra_tree",
    "evaluate_worst_case",
    "execute_walk",
    "gen_bad_example",
    "gen_random_graph",
    "greedy_strategy",
    "load_detour_table",
    "nominal_path",
    "optimal_strategy",
    "oracle",
    "parse_graph",
    "robust_length",
    "save_detour_table",
    "solve_korp",
    "solve_orp",
    "solve_pareto",
    "svalue_query",
    "write_graph",
]
