"""Exact Thue, rainbow-Thue and tuple-coloring feasibility on small instances
by branch and bound, plus the independent brute-force oracle used in tests.

The search assigns vertices in a fixed order (BFS from vertex 0), so the
colored set is always a prefix of that order.  All even simple paths are
enumerated once up front and bucketed by the last vertex of the path in
assignment order: when a vertex is (re)assigned, exactly the paths completed
by it need rechecking, each as a flat list of positions that must agree in
color.  Value symmetry is broken by allowing color c+1 only after c has been
used; ascending-q optimum searches make the dominant infeasibility proofs as
small as possible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .colorings import Coloring, TupleColoring
from .graphs import Graph, ProductGraph

DEFAULT_NODE_BUDGET = 100_000_000

STATUS_EXACT = "exact"
STATUS_LOWER_BOUND = "lower_bound_only"
STATUS_TIMEOUT = "timeout"


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for one solver invocation (nodes = color assignments tried)."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    time_budget: float = float("inf")
    palette_cap: int = 64

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_budget <= 0 or self.palette_cap <= 0:
            raise ValueError("all limits must be positive")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solver call.

    status "exact": ``value`` is the decided feasibility (bool) or optimum
    (int), with a witness for feasible/optimum results.  "lower_bound_only":
    an optimum search proved value >= ``value`` before running out of budget.
    "timeout": a single feasibility decision ran out of budget.
    """

    status: str
    value: int | bool | None
    witness: Coloring | TupleColoring | None
    nodes_explored: int


class _Budget:
    __slots__ = ("remaining", "deadline", "spent")

    def __init__(self, limits: SearchLimits):
        self.remaining = limits.max_nodes
        self.deadline = (
            None
            if limits.time_budget == float("inf")
            else time.monotonic() + limits.time_budget
        )
        self.spent = 0

    def charge(self, nodes: int) -> bool:
        """Account for work; False once the budget is gone."""
        self.spent += nodes
        self.remaining -= nodes
        if self.remaining < 0:
            return False
        if self.deadline is not None and time.monotonic() > self.deadline:
            return False
        return True


def bfs_order(g: Graph, start: int = 0) -> list[int]:
    """BFS order from ``start``; restarts at the smallest unvisited vertex."""
    order: list[int] = []
    seen = bytearray(g.n)
    for root in [start] + list(range(g.n)):
        if seen[root]:
            continue
        seen[root] = 1
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            order.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = 1
                    queue.append(u)
    return order


def _path_buckets(
    g: Graph, order: list[int], max_vertices: int, budget: "_Budget | None" = None
) -> list[list[tuple]] | None:
    """All even simple paths up to max_vertices, as flat (a0,b0,a1,b1,...)
    agreement-pair tuples, bucketed by the rank at which they complete.

    The enumeration itself is charged against the budget (one unit per path
    extension) so oversized inputs time out instead of hanging; returns None
    when the budget runs out."""
    rank = [0] * g.n
    for r, v in enumerate(order):
        rank[v] = r
    buckets: list[list[tuple]] = [[] for _ in range(g.n)]
    limit = min(max_vertices, g.n)
    adj = g.adj
    in_path = bytearray(g.n)
    path: list[int] = []

    def emit():
        m = len(path)
        l = m // 2
        pairs = []
        for i in range(l):
            pairs.append(path[i])
            pairs.append(path[i + l])
        buckets[max(rank[v] for v in path)].append(tuple(pairs))

    def extend(v: int) -> bool:
        if budget is not None and not budget.charge(1):
            return False
        path.append(v)
        in_path[v] = 1
        m = len(path)
        if m % 2 == 0 and path[0] < path[-1]:
            emit()
        alive = True
        if m < limit:
            for u in adj[v]:
                if not in_path[u] and not extend(u):
                    alive = False
                    break
        path.pop()
        in_path[v] = 0
        return alive

    for start in range(g.n):
        if not extend(start):
            return None
    for lst in buckets:
        lst.sort(key=lambda pr: (len(pr), pr))
    return buckets


def _paths_ok(bucket: list[tuple], colors: list[int]) -> bool:
    """True iff no bucketed path has all its agreement pairs equal."""
    for pr in bucket:
        i = 0
        m = len(pr)
        while i < m:
            if colors[pr[i]] != colors[pr[i + 1]]:
                break
            i += 2
        else:
            return False
    return True


def _solve_plain(
    g: Graph,
    q: int,
    budget: _Budget,
    *,
    symmetry_breaking: bool = True,
    max_path_vertices: int | None = None,
    layer_size: int = 0,
    order: list[int] | None = None,
) -> tuple[str, bool, list[int] | None]:
    """Shared engine for plain and rainbow feasibility.

    layer_size > 0 adds the rainbow constraint (vertices v//layer_size share
    a layer and must take distinct colors); rainbow callers pass a
    layer-major assignment order."""
    n = g.n
    if n == 0:
        return STATUS_EXACT, True, []
    if order is None:
        order = bfs_order(g)
    buckets = _path_buckets(g, order, max_path_vertices or n, budget)
    if buckets is None:
        return STATUS_TIMEOUT, False, None
    colors = [-1] * n
    try_next = [0] * n
    placed = [0] * n
    maxused = [-1] * (n + 1)
    layer_mask = [0] * (n // layer_size if layer_size else 0)
    r = 0
    while True:
        v = order[r]
        limit = min(q - 1, maxused[r] + 1) if symmetry_breaking else q - 1
        bucket = buckets[r]
        lay = v // layer_size if layer_size else -1
        pick = -1
        c = try_next[r]
        while c <= limit:
            if not budget.charge(1):
                return STATUS_TIMEOUT, False, None
            if layer_size and (layer_mask[lay] >> c) & 1:
                c += 1
                continue
            colors[v] = c
            if _paths_ok(bucket, colors):
                pick = c
                break
            c += 1
        if pick >= 0:
            try_next[r] = pick + 1
            placed[r] = pick
            if layer_size:
                layer_mask[lay] |= 1 << pick
            maxused[r + 1] = maxused[r] if pick <= maxused[r] else pick
            r += 1
            if r == n:
                out = [0] * n
                for rr in range(n):
                    out[order[rr]] = placed[rr]
                return STATUS_EXACT, True, out
            try_next[r] = 0
        else:
            colors[v] = -1
            r -= 1
            if r < 0:
                return STATUS_EXACT, False, None
            if layer_size:
                pv = order[r]
                layer_mask[pv // layer_size] &= ~(1 << placed[r])
            colors[order[r]] = -1


def _layer_major_order(pg: ProductGraph) -> list[int]:
    """Assignment order for rainbow searches: base BFS order, whole layers."""
    return [b * pg.k + j for b in bfs_order(pg.base) for j in range(pg.k)]


def exists_coloring(
    g: Graph,
    q: int,
    limits: SearchLimits | None = None,
    *,
    symmetry_breaking: bool = True,
) -> SolveResult:
    """Decide whether a nonrepetitive q-coloring of g exists (exact unless
    the budget runs out)."""
    if q < 1:
        raise ValueError("palette size must be positive")
    budget = _Budget(limits or SearchLimits())
    status, feasible, witness = _solve_plain(
        g, q, budget, symmetry_breaking=symmetry_breaking
    )
    if status == STATUS_TIMEOUT:
        return SolveResult(STATUS_TIMEOUT, None, None, budget.spent)
    col = Coloring(q, tuple(witness)) if feasible else None
    return SolveResult(STATUS_EXACT, feasible, col, budget.spent)


def find_coloring_bounded(
    g: Graph, q: int, max_path_vertices: int, limits: SearchLimits | None = None
) -> tuple[int, ...] | None:
    """First q-coloring with no repetitive path of at most max_path_vertices
    vertices, or None if none exists.  Raises ResourceLimitError on budget
    exhaustion.  Used by construction fallbacks; not an exactness claim."""
    from .errors import ResourceLimitError

    budget = _Budget(limits or SearchLimits())
    status, feasible, witness = _solve_plain(
        g, q, budget, max_path_vertices=max(2, max_path_vertices - max_path_vertices % 2)
    )
    if status == STATUS_TIMEOUT:
        raise ResourceLimitError("bounded coloring search ran out of budget")
    return tuple(witness) if feasible else None


def thue_number(g: Graph, limits: SearchLimits | None = None) -> SolveResult:
    """Smallest q admitting a nonrepetitive q-coloring, by ascending search;
    exact only when feasibility at q and infeasibility at q-1 both are."""
    limits = limits or SearchLimits()
    budget = _Budget(limits)
    cap = min(limits.palette_cap, max(g.n, 1))
    for q in range(1, cap + 1):
        status, feasible, witness = _solve_plain(g, q, budget)
        if status == STATUS_TIMEOUT:
            return SolveResult(STATUS_LOWER_BOUND, q, None, budget.spent)
        if feasible:
            return SolveResult(
                STATUS_EXACT, q, Coloring(q, tuple(witness)), budget.spent
            )
    return SolveResult(STATUS_LOWER_BOUND, cap + 1, None, budget.spent)


def rainbow_exists_coloring(
    pg: ProductGraph, q: int, limits: SearchLimits | None = None
) -> SolveResult:
    """Decide existence of a nonrepetitive coloring with every layer rainbow.

    Branches over ordered layer tuples (vertex by vertex within the layer,
    which prunes tuple prefixes early); the first layer is canonically
    colored 0..k-1 by the combination of value symmetry breaking and the
    rainbow constraint."""
    if q < 1:
        raise ValueError("palette size must be positive")
    budget = _Budget(limits or SearchLimits())
    status, feasible, witness = _solve_plain(
        pg.view, q, budget, layer_size=pg.k, order=_layer_major_order(pg)
    )
    if status == STATUS_TIMEOUT:
        return SolveResult(STATUS_TIMEOUT, None, None, budget.spent)
    col = Coloring(q, tuple(witness)) if feasible else None
    return SolveResult(STATUS_EXACT, feasible, col, budget.spent)


def rainbow_thue_number(
    pg: ProductGraph, limits: SearchLimits | None = None
) -> SolveResult:
    """Smallest palette for a rainbow nonrepetitive coloring of the product."""
    limits = limits or SearchLimits()
    budget = _Budget(limits)
    cap = min(limits.palette_cap, max(pg.view.n, 1))
    order = _layer_major_order(pg)
    for q in range(pg.k, cap + 1):
        status, feasible, witness = _solve_plain(
            pg.view, q, budget, layer_size=pg.k, order=order
        )
        if status == STATUS_TIMEOUT:
            return SolveResult(STATUS_LOWER_BOUND, q, None, budget.spent)
        if feasible:
            return SolveResult(
                STATUS_EXACT, q, Coloring(q, tuple(witness)), budget.spent
            )
    return SolveResult(STATUS_LOWER_BOUND, cap + 1, None, budget.spent)


def _tuple_candidates(maxused: int, p: int, q: int) -> list[tuple[int, tuple[int, ...]]]:
    """Canonical p-subsets available when colors 0..maxused are in use: any
    number of fresh colors must form the consecutive block right above
    maxused.  Returned as (bitmask, ascending tuple), sorted by tuple."""
    out = []
    for fresh in range(p + 1):
        if maxused + fresh >= q:
            continue
        new_block = tuple(range(maxused + 1, maxused + 1 + fresh))
        for old in combinations(range(maxused + 1), p - fresh):
            s = old + new_block
            m = 0
            for c in s:
                m |= 1 << c
            out.append((m, s))
    out.sort(key=lambda t: t[1])
    return out


def exists_tuple_coloring(
    g: Graph, p: int, q: int, limits: SearchLimits | None = None
) -> SolveResult:
    """Decide existence of a p-tuple nonrepetitive q-coloring: no even simple
    path may have intersecting color sets at every pair of positions half a
    length apart."""
    if not 1 <= p < q:
        raise ValueError("need 1 <= p < q")
    budget = _Budget(limits or SearchLimits())
    n = g.n
    if n == 0:
        return SolveResult(STATUS_EXACT, True, TupleColoring(p, q, ()), budget.spent)
    order = bfs_order(g)
    buckets = _path_buckets(g, order, n, budget)
    if buckets is None:
        return SolveResult(STATUS_TIMEOUT, None, None, budget.spent)
    cand_cache: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    masks = [0] * n
    chosen: list[tuple[int, ...] | None] = [None] * n
    try_next = [0] * n
    maxused = [-1] * (n + 1)
    r = 0
    while True:
        v = order[r]
        cands = cand_cache.get(maxused[r])
        if cands is None:
            cands = cand_cache.setdefault(maxused[r], _tuple_candidates(maxused[r], p, q))
        bucket = buckets[r]
        pick = -1
        i = try_next[r]
        while i < len(cands):
            if not budget.charge(1):
                return SolveResult(STATUS_TIMEOUT, None, None, budget.spent)
            m, s = cands[i]
            masks[v] = m
            ok = True
            for pr in bucket:
                jj = 0
                mm = len(pr)
                while jj < mm:
                    if not masks[pr[jj]] & masks[pr[jj + 1]]:
                        break
                    jj += 2
                else:
                    ok = False
                    break
            if ok:
                pick = i
                break
            i += 1
        if pick >= 0:
            try_next[r] = pick + 1
            chosen[v] = cands[pick][1]
            maxused[r + 1] = max(maxused[r], cands[pick][1][-1])
            r += 1
            if r == n:
                return SolveResult(
                    STATUS_EXACT,
                    True,
                    TupleColoring(p, q, tuple(chosen)),  # type: ignore[arg-type]
                    budget.spent,
                )
            try_next[r] = 0
        else:
            masks[v] = 0
            r -= 1
            if r < 0:
                return SolveResult(STATUS_EXACT, False, None, budget.spent)
            masks[order[r]] = 0
            chosen[order[r]] = None


def brute_oracle(g: Graph, coloring: Coloring) -> bool:
    """True iff some simple path of even order is repetitively colored,
    by literal enumeration of every simple path (no pruning).  Test oracle;
    capped at 12 vertices."""
    if g.n > 12:
        raise ValueError("brute oracle capped at 12 vertices")
    if len(coloring.colors) != g.n:
        raise ValueError("coloring does not cover the graph")
    colors = coloring.colors
    adj = g.adj
    in_path = bytearray(g.n)
    path: list[int] = []

    def extend(v: int) -> bool:
        path.append(v)
        in_path[v] = 1
        m = len(path)
        hit = False
        if m % 2 == 0:
            l = m // 2
            hit = all(colors[path[i]] == colors[path[i + l]] for i in range(l))
        if not hit and m < g.n:
            for u in adj[v]:
                if not in_path[u] and extend(u):
                    hit = True
                    break
        path.pop()
        in_path[v] = 0
        return hit

    return any(extend(start) for start in range(g.n))
