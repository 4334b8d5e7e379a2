"""Command-line front end.

All subcommands read the text graph format (``-g FILE``, or ``-`` for
stdin), emit JSON on stdout, and report diagnostics on stderr. Vertices on
the command line and in JSON are 1-based like the file format; edge ids
are 0-based positions in the file. Exit codes: 0 success, 1 domain results
(infeasible bound, no robust path), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle
from .detour import build_detour_table, load_detour_table, save_detour_table
from .graph import INF, Graph, GraphFormatError, dijkstra_tree, parse_graph, write_graph
from .korp import solve_korp, optimal_strategy
from .pareto import solve_pareto
from .simulate import (
    Scenario,
    StepCapExceeded,
    evaluate_worst_case,
    execute_walk,
    gen_bad_example,
    gen_random_graph,
    greedy_strategy,
)
from .solver import NoRobustPath, solve_orp


def _load_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _vertex(g: Graph, value: int, what: str) -> int:
    if not 1 <= value <= g.n:
        raise ValueError(f"{what} {value} out of range 1..{g.n}")
    return value - 1


def _cost_json(c):
    return "inf" if c == INF else c


def _parse_bound(text: str):
    if text.strip().lower() == "inf":
        return INF
    try:
        return int(text)
    except ValueError:
        return float(text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _vertex_records(g, y, successor_edge, swap_edge, source=None):
    records = []
    for v in range(g.n):
        if source is not None and v != source:
            continue
        se = successor_edge[v]
        records.append(
            {
                "id": v + 1,
                "y": _cost_json(y[v]),
                "successor": None if se is None else g.other_endpoint(se, v) + 1,
                "successorEdge": se,
                "swapEdge": None if swap_edge is None else swap_edge[v],
            }
        )
    return records


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    t = _vertex(g, args.dest, "destination")
    source = None if args.source is None else _vertex(g, args.source, "source")
    spt = dijkstra_tree(g, t)
    dt = build_detour_table(g, spt)
    sol = solve_orp(g, t, dt)
    if args.save_table:
        with open(args.save_table, "w", encoding="utf-8") as fh:
            fh.write(save_detour_table(dt, sol.successor_edge))
    _emit(
        {
            "dest": t + 1,
            "vertices": _vertex_records(g, sol.y, sol.successor_edge, dt.swap_edge, source),
        }
    )
    if source is not None and sol.y[source] == INF:
        print(f"error: no robust path from vertex {args.source}", file=sys.stderr)
        return 1
    return 0


def _cmd_svalues(args) -> int:
    g = _load_graph(args.graph)
    t = _vertex(g, args.dest, "destination")
    spt = dijkstra_tree(g, t)
    dt = build_detour_table(g, spt)
    records = []
    for v in range(g.n):
        records.append(
            {
                "id": v + 1,
                "dstar": _cost_json(spt.dstar[v]),
                "svalue": _cost_json(dt.svalue[v]),
                "parentEdge": spt.parent_edge[v],
                "swapEdge": dt.swap_edge[v],
            }
        )
    _emit({"dest": t + 1, "vertices": records})
    return 0


def _cmd_korp(args) -> int:
    g = _load_graph(args.graph)
    t = _vertex(g, args.dest, "destination")
    source = None if args.source is None else _vertex(g, args.source, "source")
    sol = solve_korp(g, t, args.k)
    _emit(
        {
            "dest": t + 1,
            "k": args.k,
            "vertices": _vertex_records(g, sol.yk, sol.successor_edge, None, source),
        }
    )
    if source is not None and sol.yk[source] == INF:
        print(f"error: no robust path from vertex {args.source}", file=sys.stderr)
        return 1
    return 0


def _cmd_pareto(args) -> int:
    g = _load_graph(args.graph)
    t = _vertex(g, args.dest, "destination")
    s = _vertex(g, args.source, "source")
    bound = _parse_bound(args.bound)
    spt = dijkstra_tree(g, t)
    dt = build_detour_table(g, spt)
    result = solve_pareto(g, s, t, bound, dt)
    _emit(
        {
            "feasible": result.feasible,
            "length": None if result.length is None else _cost_json(result.length),
            "robustLength": None if result.robust is None else _cost_json(result.robust),
            "path": result.path,
            "reason": result.reason,
        }
    )
    return 0 if result.feasible else 1


def _walk_json(walk, scenario) -> dict:
    return {
        "scenario": sorted(scenario.failed),
        "steps": [
            {
                "from": st.source + 1,
                "edge": st.edge,
                "to": st.target + 1,
                "failed": st.failed,
            }
            for st in walk.steps
        ],
        "totalCost": _cost_json(walk.total_cost),
        "probedFailures": list(walk.probed_failures),
    }


def _cmd_simulate(args) -> int:
    g = _load_graph(args.graph)
    t = _vertex(g, args.dest, "destination")
    s = _vertex(g, args.source, "source")
    if args.strategy == "optimal":
        strat = optimal_strategy(g, t, args.k)
    else:
        strat = greedy_strategy(g, t)
    if args.worst_case:
        cost, scenario = evaluate_worst_case(g, strat, s, t, args.k)
        walk = execute_walk(g, strat, s, t, scenario)
        _emit(_walk_json(walk, scenario))
        return 0
    failed = [int(x) for x in args.fail.split(",")] if args.fail else []
    for eid in failed:
        if not 0 <= eid < g.m:
            raise ValueError(f"failed edge {eid} out of range 0..{g.m - 1}")
    if len(failed) > args.k:
        raise ValueError(f"scenario has {len(failed)} edges but k={args.k}")
    scenario = Scenario(failed)
    walk = execute_walk(g, strat, s, t, scenario)
    _emit(_walk_json(walk, scenario))
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "bad-example":
        g, _, _ = gen_bad_example(args.k, args.scale)
    else:
        g = gen_random_graph(args.n, args.m, args.max_weight, args.seed)
    sys.stdout.write(write_graph(g))
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    t = _vertex(g, args.dest, "destination")
    if args.oracle_op == "svalue":
        u = _vertex(g, args.vertex, "vertex")
        _emit({"svalue": _cost_json(oracle.brute_svalue(g, u, args.edge, t))})
    elif args.oracle_op == "orp":
        s = _vertex(g, args.source, "source")
        _emit({"y": _cost_json(oracle.brute_orp_value(g, s, t))})
    elif args.oracle_op == "korp":
        s = _vertex(g, args.source, "source")
        _emit({"y": _cost_json(oracle.brute_korp_value(g, s, t, args.k))})
    else:
        s = _vertex(g, args.source, "source")
        _emit({"twoEdgeDisjoint": oracle.has_two_edge_disjoint_paths(g, s, t)})
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    rows = []
    for m in sizes:
        n = max(2, m // 4)
        g = gen_random_graph(n, m, 1000, args.seed)
        start = time.perf_counter()
        spt = dijkstra_tree(g, 0)
        dt = build_detour_table(g, spt)
        sol = solve_orp(g, 0, dt)
        elapsed = time.perf_counter() - start
        rows.append(
            {
                "m": m,
                "n": n,
                "seconds": elapsed,
                "heapPops": spt.pops + len(sol.finalize_order),
                "traversals": dt.traversals,
            }
        )
    _emit({"seed": args.seed, "results": rows})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orp",
        description="Worst-case-optimal routing under online edge-failure discovery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="potentials and detours for one destination")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-t", "--dest", type=int, required=True)
    p.add_argument("--source", type=int)
    p.add_argument("--save-table")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("svalues", help="per-vertex detour lengths")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-t", "--dest", type=int, required=True)
    p.set_defaults(func=_cmd_svalues)

    p = sub.add_parser("korp", help="potentials against k failures")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-t", "--dest", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--source", type=int)
    p.set_defaults(func=_cmd_korp)

    p = sub.add_parser("pareto", help="shortest path under a robust-length bound")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-s", "--source", type=int, required=True)
    p.add_argument("-t", "--dest", type=int, required=True)
    p.add_argument("-B", "--bound", required=True)
    p.set_defaults(func=_cmd_pareto)

    p = sub.add_parser("simulate", help="run a strategy against a scenario")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-s", "--source", type=int, required=True)
    p.add_argument("-t", "--dest", type=int, required=True)
    p.add_argument("--strategy", choices=("optimal", "greedy"), required=True)
    p.add_argument("-k", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fail", help="comma-separated failed edge ids")
    group.add_argument("--worst-case", action="store_true")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("gen", help="write a generated graph to stdout")
    gsub = p.add_subparsers(dest="kind", required=True)
    pb = gsub.add_parser("bad-example")
    pb.add_argument("-k", type=int, required=True)
    pb.add_argument("-M", "--scale", type=int, required=True)
    pb.set_defaults(func=_cmd_gen)
    pr = gsub.add_parser("random")
    pr.add_argument("-n", type=int, required=True)
    pr.add_argument("-m", type=int, required=True)
    pr.add_argument("--max-weight", type=int, default=1000)
    pr.add_argument("--seed", type=int, default=0)
    pr.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    osub = p.add_subparsers(dest="oracle_op", required=True)
    po = osub.add_parser("svalue")
    po.add_argument("-g", "--graph", required=True)
    po.add_argument("-t", "--dest", type=int, required=True)
    po.add_argument("-u", "--vertex", type=int, required=True)
    po.add_argument("-e", "--edge", type=int, required=True)
    po.set_defaults(func=_cmd_oracle)
    for name in ("orp", "disjoint"):
        po = osub.add_parser(name)
        po.add_argument("-g", "--graph", required=True)
        po.add_argument("-s", "--source", type=int, required=True)
        po.add_argument("-t", "--dest", type=int, required=True)
        po.set_defaults(func=_cmd_oracle)
    po = osub.add_parser("korp")
    po.add_argument("-g", "--graph", required=True)
    po.add_argument("-s", "--source", type=int, required=True)
    po.add_argument("-t", "--dest", type=int, required=True)
    po.add_argument("-k", type=int, required=True)
    po.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="time the full pipeline at given sizes")
    p.add_argument("--sizes", required=True, help="comma-separated edge counts")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoRobustPath as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except StepCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
