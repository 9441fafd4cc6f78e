#!/usr/bin/env python3
"""Exact Thue numbers on desk-scale instances.

thue_number runs ascending-palette branch and bound; a value is exact only
when the feasibility witness and the infeasibility proof one palette lower
both completed.  The same engine handles rainbow-constrained layers and
p-subset (fractional) colorings.
"""

from thuelex import (
    COMPLETE,
    EMPTY,
    build_complete,
    build_cycle,
    build_path,
    c7_fractional_example,
    exists_coloring,
    exists_tuple_coloring,
    find_tuple_repetitive_path,
    lex_product,
    rainbow_thue_number,
    thue_number,
)

# Small exact values.  Thue: three symbols suffice for arbitrarily long paths.
for n in (2, 3, 4, 5, 8, 10):
    r = thue_number(build_path(n))
    print(f"pi(P_{n}) = {r.value}  ({r.nodes_explored} nodes)")
print(f"pi(C_7) = {thue_number(build_cycle(7)).value}")
print(f"pi(K_4) = {thue_number(build_complete(4)).value}")

# The chain pi(G[E_k]) <= pi_R(G[E_k]) <= pi(G[K_k]) on P_4, k=2.
pe = lex_product(build_path(4), EMPTY, 2)
pk = lex_product(build_path(4), COMPLETE, 2)
a = thue_number(pe.view)
b = rainbow_thue_number(pe)
c = thue_number(pk.view)
print(f"\npi(P_4[E_2]) = {a.value} <= pi_R(P_4[E_2]) = {b.value} "
      f"<= pi(P_4[K_2]) = {c.value}")

# Theorem 1's lower bound at desk scale: no 4-coloring of P_6[E_2].
r = exists_coloring(lex_product(build_path(6), EMPTY, 2).view, 4)
print(f"P_6[E_2] with 4 colors: feasible={r.value} "
      f"({r.nodes_explored} nodes, exact)")

# Fractional: C_7 admits a (7,2)-coloring but no (6,2)-coloring, so
# pi_f(C_7) <= 3.5 < 4 = pi(C_7).
c7 = build_cycle(7)
col = c7_fractional_example()
print(f"\nC_7 (7,2)-listing verifies exactly: "
      f"{find_tuple_repetitive_path(c7, col.sets, 6) is None}")
for q in (7, 6):
    r = exists_tuple_coloring(c7, 2, q)
    print(f"2-subsets from {q} colors on C_7: feasible={r.value} "
          f"({r.nodes_explored} nodes)")
solver_sets = exists_tuple_coloring(c7, 2, 7).witness.sets
print(f"solver's own (7,2)-witness: {[tuple(c + 1 for c in s) for s in solver_sets]}")
