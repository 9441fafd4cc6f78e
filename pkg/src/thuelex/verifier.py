"""Decide whether colorings are nonrepetitive, rainbow, tuple-nonrepetitive
or walk-nonrepetitive, producing re-checkable witnesses.

Path searches iterate the target half-length l outermost and enumerate simple
paths by DFS from each start vertex; at depth >= l an extension must repeat
the color l positions back, which prunes almost everything.  Each undirected
path is reported in one canonical orientation (smaller endpoint first); the
reversal of a repetition is again a repetition, so this loses nothing.

With max_vertices = |V| rounded down to even the check is exact; smaller
bounds give sound but partial verification and the caller must say so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .graphs import Graph, ProductGraph

DEFAULT_WALK_BUDGET = 100_000_000


@dataclass(frozen=True)
class RepetitionWitness:
    """An even path whose color string is a repetition; ``half_colors`` are
    the l colors of the first half (for tuple colorings, a common color per
    position)."""

    path: tuple[int, ...]
    half_colors: tuple[int, ...]


def _check_coloring_size(g: Graph, n_colors: int):
    if n_colors != g.n:
        raise ValueError(f"coloring covers {n_colors} vertices, graph has {g.n}")


def _even_bound(g: Graph, max_vertices: int) -> int:
    if max_vertices < 2 or max_vertices % 2 != 0:
        raise ValueError("path bound must be even and at least 2")
    return min(max_vertices, g.n - (g.n % 2))


def is_exact_bound(g: Graph, max_vertices: int) -> bool:
    """True iff the bound covers every even simple path of the graph."""
    return max_vertices >= g.n - (g.n % 2)


def find_repetitive_path(
    g: Graph, colors, max_vertices: int
) -> RepetitionWitness | None:
    """First (in l, then start-vertex, then lexicographic extension order)
    even simple path of at most max_vertices vertices whose colors form a
    repetition, or None."""
    colors = tuple(colors)
    _check_coloring_size(g, len(colors))
    bound = _even_bound(g, max_vertices)
    adj = g.adj
    in_path = bytearray(g.n)

    def extend(path: list[int], l: int) -> list[int] | None:
        d = len(path)
        if d == 2 * l:
            return path[:] if path[0] < path[-1] else None
        want = colors[path[d - l]] if d >= l else None
        for u in adj[path[-1]]:
            if in_path[u]:
                continue
            if want is not None and colors[u] != want:
                continue
            in_path[u] = 1
            path.append(u)
            hit = extend(path, l)
            path.pop()
            in_path[u] = 0
            if hit is not None:
                return hit
        return None

    for l in range(1, bound // 2 + 1):
        if l == 1:
            for u, v in g.edges():
                if colors[u] == colors[v]:
                    return RepetitionWitness((u, v), (colors[u],))
            continue
        for start in range(g.n):
            in_path[start] = 1
            hit = extend([start], l)
            in_path[start] = 0
            if hit is not None:
                return RepetitionWitness(tuple(hit), tuple(colors[v] for v in hit[:l]))
    return None


def is_rainbow(pg: ProductGraph, colors) -> bool:
    """True iff every layer's colors are pairwise distinct."""
    colors = tuple(colors)
    _check_coloring_size(pg.view, len(colors))
    k = pg.k
    for b in range(pg.base.n):
        layer = colors[b * k : (b + 1) * k]
        if len(set(layer)) != k:
            return False
    return True


def find_tuple_repetitive_path(
    g: Graph, sets, max_vertices: int
) -> RepetitionWitness | None:
    """Tuple-coloring analogue: an even path admits a repetitive choice iff
    the color sets at positions i and i+l intersect for every i (positions
    are distinct vertices, so the choices are independent)."""
    masks = []
    for s in sets:
        m = 0
        for c in s:
            m |= 1 << c
        masks.append(m)
    _check_coloring_size(g, len(masks))
    bound = _even_bound(g, max_vertices)
    adj = g.adj
    in_path = bytearray(g.n)

    def extend(path: list[int], l: int) -> list[int] | None:
        d = len(path)
        if d == 2 * l:
            return path[:] if path[0] < path[-1] else None
        need = masks[path[d - l]] if d >= l else ~0
        for u in adj[path[-1]]:
            if in_path[u] or not masks[u] & need:
                continue
            in_path[u] = 1
            path.append(u)
            hit = extend(path, l)
            path.pop()
            in_path[u] = 0
            if hit is not None:
                return hit
        return None

    for l in range(1, bound // 2 + 1):
        for start in range(g.n):
            in_path[start] = 1
            hit = extend([start], l)
            in_path[start] = 0
            if hit is not None:
                common = [masks[hit[i]] & masks[hit[i + l]] for i in range(l)]
                half = tuple((m & -m).bit_length() - 1 for m in common)
                return RepetitionWitness(tuple(hit), half)
    return None


def _count_walks_up_to(g: Graph, max_vertices: int) -> int:
    """Number of walks with an even vertex count up to the bound."""
    counts = [1] * g.n
    total = 0
    for length in range(2, max_vertices + 1):
        counts = [sum(counts[u] for u in g.adj[v]) for v in range(g.n)]
        if length % 2 == 0:
            total += sum(counts)
    return total


def is_walk_nonrepetitive(
    g: Graph, colors, max_walk_vertices: int, *, node_budget: int = DEFAULT_WALK_BUDGET
) -> bool:
    """True iff no non-boring walk of at most the given even vertex count is
    repetitively colored.  A boring walk (second half revisits the first
    vertex-by-vertex) is repetitively colored under every coloring and is
    exempt by definition."""
    colors = tuple(colors)
    _check_coloring_size(g, len(colors))
    if max_walk_vertices < 2 or max_walk_vertices % 2 != 0:
        raise ValueError("walk bound must be even and at least 2")
    projected = _count_walks_up_to(g, max_walk_vertices)
    if projected > node_budget:
        raise ResourceLimitError(
            f"projected {projected} walks exceeds budget {node_budget}"
        )
    adj = g.adj
    walk: list[int] = []

    def extend(t: int) -> bool:
        """True iff a repetitively colored non-boring 2t-walk extends."""
        d = len(walk)
        if d == 2 * t:
            return any(walk[i] != walk[t + i] for i in range(t))
        for u in adj[walk[-1]]:
            if d >= t and colors[u] != colors[walk[d - t]]:
                continue
            walk.append(u)
            if extend(t):
                return True
            walk.pop()
        return False

    for t in range(1, max_walk_vertices // 2 + 1):
        for start in range(g.n):
            walk[:] = [start]
            if extend(t):
                return False
    return True


def check_path4_trichotomy(pg: ProductGraph, colors) -> bool:
    """For every 4-vertex path in the base graph, the color sets of the first
    three layers or of the last three layers must be pairwise disjoint."""
    colors = tuple(colors)
    _check_coloring_size(pg.view, len(colors))
    k = pg.k
    layer_sets = [
        frozenset(colors[b * k : (b + 1) * k]) for b in range(pg.base.n)
    ]

    def disjoint3(a, b, c):
        return not (a & b or a & c or b & c)

    base = pg.base
    for a in range(base.n):
        for b in base.adj[a]:
            for c in base.adj[b]:
                if c == a:
                    continue
                for d in base.adj[c]:
                    if d == a or d == b or d < a:
                        continue
                    s = [layer_sets[v] for v in (a, b, c, d)]
                    if not (disjoint3(*s[:3]) or disjoint3(*s[1:])):
                        return False
    return True
