"""Detour tables: the best escape route past each tree edge.

For a vertex u whose next hop toward the destination uses tree edge uu',
the table stores the length of the shortest u-to-dest route avoiding uu'
together with the non-tree swap edge where that route leaves u's subtree.
Construction sweeps non-tree edges in increasing detour cost
``c_e = dstar(u) + dstar(v) + length(e)`` and walks the tree upward from
both endpoints, contracting every tree edge it crosses so none is ever
traversed twice. The table serializes to exactly one record per vertex;
detour lengths are recomputed from the swap edge on load.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import INF, Cost, Graph, GraphFormatError, ShortestPathTree


@dataclass(frozen=True)
class DetourTable:
    """Per-vertex detour lengths around each vertex's own tree edge.

    ``svalue[u]`` is INF when no detour exists (the tree edge is a bridge
    toward the destination). ``traversals`` counts tree-edge contractions
    performed during the build; it never exceeds n - 1.
    """

    graph: Graph
    tree: ShortestPathTree
    svalue: list[Cost]
    swap_edge: list[int | None]
    cvalue: dict[int, Cost]
    traversals: int = field(default=0, compare=False)


def tree_edge_ids(spt: ShortestPathTree) -> set[int]:
    return {e for e in spt.parent_edge if e is not None}


def compute_c_values(g: Graph, spt: ShortestPathTree) -> dict[int, Cost]:
    """Detour sort keys for every non-tree edge.

    ``c_e = dstar(u) + dstar(v) + length(e)``, INF when either endpoint
    cannot reach the destination.
    """
    in_tree = tree_edge_ids(spt)
    dstar = spt.dstar
    out: dict[int, Cost] = {}
    for eid, u, v, ln in g.edges:
        if eid in in_tree:
            continue
        du, dv = dstar[u], dstar[v]
        out[eid] = INF if du == INF or dv == INF else du + dv + ln
    return out


def compute_lca_labels(
    spt: ShortestPathTree, non_tree_edges: list[tuple[int, int, int, Cost]]
) -> dict[int, int]:
    """Lowest common ancestor of both endpoints, per queried edge.

    Offline union-find over one traversal of the tree. Both endpoints of
    every query must lie in the tree (reach the destination).
    """
    n = len(spt.dstar)
    for eid, u, v, _ in non_tree_edges:
        if spt.dstar[u] == INF or spt.dstar[v] == INF:
            raise ValueError(f"edge {eid}: endpoint not in the tree")

    children: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(spt.parent_vertex):
        if p is not None:
            children[p].append(v)
    queries: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, u, v, _ in non_tree_edges:
        queries[u].append((v, eid))
        queries[v].append((u, eid))

    up = list(range(n))

    def find(x: int) -> int:
        root = x
        while up[root] != root:
            root = up[root]
        while up[x] != root:
            up[x], x = root, up[x]
        return root

    ancestor = list(range(n))
    done = [False] * n
    out: dict[int, int] = {}
    # Post-order walk: answer a query once both endpoints are finished.
    stack: list[tuple[int, bool]] = [(spt.dest, False)]
    while stack:
        u, processed = stack.pop()
        if not processed:
            stack.append((u, True))
            for c in children[u]:
                stack.append((c, False))
            continue
        done[u] = True
        for other, eid in queries[u]:
            if done[other] and eid not in out:
                out[eid] = ancestor[find(other)]
        p = spt.parent_vertex[u]
        if p is not None:
            up[find(u)] = find(p)
            ancestor[find(p)] = p
    return out


def build_detour_table(g: Graph, spt: ShortestPathTree) -> DetourTable:
    """Assign every vertex its cheapest covering non-tree edge.

    Non-tree edges are processed in increasing (c, edge id) order; the
    first edge whose endpoints straddle a tree edge claims it, which makes
    the assignment optimal. Claimed tree edges are contracted in a
    disjoint-set structure, so each endpoint walk jumps straight to the
    deepest unclaimed ancestor and total contraction work stays linear.
    """
    n = g.n
    dstar = spt.dstar
    parent_vertex = spt.parent_vertex
    svalue: list[Cost] = [INF] * n
    swap_edge: list[int | None] = [None] * n
    cvals = compute_c_values(g, spt)

    depth = [0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent_vertex):
        if p is not None:
            children[p].append(v)
    stack = [spt.dest]
    while stack:
        u = stack.pop()
        du = depth[u] + 1
        for c in children[u]:
            depth[c] = du
            stack.append(c)

    up = list(range(n))

    def find(x: int) -> int:
        root = x
        while up[root] != root:
            root = up[root]
        while up[x] != root:
            up[x], x = root, up[x]
        return root

    ordered = sorted((c, eid) for eid, c in cvals.items() if c != INF)
    remaining = sum(1 for e in spt.parent_edge if e is not None)
    traversals = 0
    edges = g.edges
    for c, eid in ordered:
        if remaining == 0:
            break
        _, x, y, _ = edges[eid]
        rx = find(x)
        ry = find(y)
        while rx != ry:
            if depth[rx] < depth[ry]:
                rx, ry = ry, rx
            svalue[rx] = c - dstar[rx]
            swap_edge[rx] = eid
            traversals += 1
            remaining -= 1
            parent = parent_vertex[rx]
            up[rx] = parent
            rx = find(parent)
    return DetourTable(g, spt, svalue, swap_edge, cvals, traversals)


def svalue_query(dt: DetourTable, v: int, e: int) -> Cost:
    """Shortest v-to-dest distance when edge ``e`` has failed.

    Unless ``e`` is v's own tree edge the nominal shortest route survives,
    so the answer is dstar(v); otherwise it is the stored detour length.
    """
    g = dt.graph
    if not 0 <= e < g.m:
        raise ValueError(f"edge {e} out of range")
    if not g.is_incident(e, v):
        raise ValueError(f"edge {e} is not incident to vertex {v}")
    if dt.tree.parent_edge[v] == e:
        return dt.svalue[v]
    return dt.tree.dstar[v]


def save_detour_table(dt: DetourTable, successor_edge: list[int | None] | None = None) -> str:
    """Serialize to one record per vertex: parent edge, swap edge, and an
    optional successor edge column; absent ids are written as -1."""
    n = len(dt.svalue)
    lines = [f"p orptab {n} {dt.tree.dest + 1}"]
    for v in range(n):
        pe = dt.tree.parent_edge[v]
        sw = dt.swap_edge[v]
        rec = f"{-1 if pe is None else pe} {-1 if sw is None else sw}"
        if successor_edge is not None:
            se = successor_edge[v]
            rec += f" {-1 if se is None else se}"
        lines.append(rec)
    return "\n".join(lines) + "\n"


def load_detour_table(
    g: Graph, text
) -> tuple[DetourTable, list[int | None] | None]:
    """Rebuild a detour table saved by save_detour_table.

    Distances follow the stored parent edges and detour lengths are
    recomputed from the swap edges, so integer inputs reload bit-exactly.
    Returns the table and the successor column when one was saved.
    """
    if hasattr(text, "read"):
        text = text.read()
    n: int | None = None
    dest = -1
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(f"duplicate header at line {lineno}")
            if len(fields) != 4 or fields[1] != "orptab":
                raise GraphFormatError(f"malformed header at line {lineno}")
            try:
                n = int(fields[2])
                dest = int(fields[3]) - 1
            except ValueError:
                raise GraphFormatError(f"malformed header at line {lineno}") from None
        else:
            if n is None:
                raise GraphFormatError(f"record before header at line {lineno}")
            if len(fields) not in (2, 3):
                raise GraphFormatError(f"malformed record at line {lineno}")
            try:
                rows.append(tuple(int(f) for f in fields))
            except ValueError:
                raise GraphFormatError(f"malformed record at line {lineno}") from None
    if n is None:
        raise GraphFormatError("missing header")
    if n != g.n:
        raise GraphFormatError(f"table is for {n} vertices, graph has {g.n}")
    if not 0 <= dest < n:
        raise GraphFormatError("destination out of range")
    if len(rows) != n:
        raise GraphFormatError(f"expected {n} records, found {len(rows)}")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise GraphFormatError("mixed record widths")
    has_successors = widths.pop() == 3

    parent_edge: list[int | None] = [None] * n
    parent_vertex: list[int | None] = [None] * n
    for v, row in enumerate(rows):
        pe = row[0]
        if pe == -1:
            continue
        if not 0 <= pe < g.m or not g.is_incident(pe, v):
            raise GraphFormatError(f"record {v}: invalid parent edge {pe}")
        parent_edge[v] = pe
        parent_vertex[v] = g.other_endpoint(pe, v)
    if parent_edge[dest] is not None:
        raise GraphFormatError("destination must not have a parent edge")

    dstar: list[Cost | None] = [None] * n
    dstar[dest] = 0
    for v0 in range(n):
        if dstar[v0] is not None:
            continue
        chain: list[int] = []
        seen: set[int] = set()
        x = v0
        while dstar[x] is None:
            if x in seen:
                raise GraphFormatError("parent records form a cycle")
            seen.add(x)
            chain.append(x)
            p = parent_vertex[x]
            if p is None:
                dstar[x] = INF
                break
            x = p
        for u in reversed(chain):
            if dstar[u] is None:
                dstar[u] = g.length(parent_edge[u]) + dstar[parent_vertex[u]]

    tree = ShortestPathTree(dest, parent_edge, parent_vertex, dstar, 0)
    cvals = compute_c_values(g, tree)
    svalue: list[Cost] = [INF] * n
    swap_edge: list[int | None] = [None] * n
    for v, row in enumerate(rows):
        sw = row[1]
        if sw == -1:
            continue
        if parent_edge[v] is None:
            raise GraphFormatError(f"record {v}: swap edge without a parent edge")
        c = cvals.get(sw)
        if c is None:
            raise GraphFormatError(f"record {v}: swap edge {sw} is not a non-tree edge")
        if c == INF or dstar[v] == INF:
            raise GraphFormatError(f"record {v}: swap edge {sw} has no finite detour")
        svalue[v] = c - dstar[v]
        swap_edge[v] = sw

    successors: list[int | None] | None = None
    if has_successors:
        successors = []
        for v, row in enumerate(rows):
            se = row[2]
            if se == -1:
                successors.append(None)
            elif 0 <= se < g.m and g.is_incident(se, v):
                successors.append(se)
            else:
                raise GraphFormatError(f"record {v}: invalid successor edge {se}")
    return DetourTable(g, tree, svalue, swap_edge, cvals, 0), successors
