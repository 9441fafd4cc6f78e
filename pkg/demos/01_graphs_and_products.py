#!/usr/bin/env python3
"""Tour of the graph builders and lexicographic products.

A lexicographic product G[H] substitutes a copy of H for every vertex of G
and a complete bipartite join for every edge.  Here H is always the empty
graph E_k or the complete graph K_k; the product vertex (b, j) gets id b*k+j,
so layers are contiguous id ranges.
"""

import json

from thuelex import (
    COMPLETE,
    EMPTY,
    build_cycle,
    build_outerplanar_g0,
    build_path,
    build_rooted_tree,
    layer_vertices,
    lex_product,
)
from thuelex.graphs import graph_to_json_dict, product_to_json_dict, to_dot

# Paths, cycles and the regular rooted trees used by the lower bounds.
p10 = build_path(10)
c7 = build_cycle(7)
print(f"P_10: {p10.n} vertices, {p10.m} edges")
print(f"C_7:  {c7.n} vertices, {c7.m} edges")

t36, meta = build_rooted_tree(3, 2, 5)
print(f"T_3,6 (every non-leaf has degree three, leaves at depth 5): "
      f"{t36.n} vertices, levels 0..{max(meta.level)}")

t47, _ = build_rooted_tree(4, 3, 6)
print(f"T_4,7: {t47.n} vertices")

# The outerplanar gadget: a 251-vertex core plus six pendant leaves per
# core vertex.
g0, core = build_outerplanar_g0()
print(f"G_0: {g0.n} vertices total, core {len(core)}, apex degree {g0.degree(10)}")

# Products.  P_2[E_2] is a 4-cycle; P_3[K_2] picks up k^2 copies of each base
# edge plus a clique inside every layer.
c4 = lex_product(build_path(2), EMPTY, 2)
print(f"\nP_2[E_2]: {c4.view.n} vertices, {c4.view.m} edges (a 4-cycle)")

pk = lex_product(build_path(3), COMPLETE, 2)
print(f"P_3[K_2]: {pk.view.n} vertices, {pk.view.m} edges "
      f"(= 2^2 * 2 base edges + 3 layer edges)")
print(f"layer over base vertex 1: {layer_vertices(pk, 1)}")

# Serialization: canonical JSON for graphs and products, DOT for drawing.
print("\ngraph JSON:", json.dumps(graph_to_json_dict(build_path(3))))
print("product JSON:", json.dumps(product_to_json_dict(c4)))
print("\nDOT form of P_3:")
print(to_dot(build_path(3)), end="")
