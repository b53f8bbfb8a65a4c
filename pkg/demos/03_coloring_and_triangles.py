"""The coloring on eventually-zero points, switched relations, and triangles.

A parameter point switches colors on and off; whenever a color is on, a
shipped triple of points forms a triangle of exactly that color, so none of
the switched relations is acyclic.
"""

import itertools

from cantorpairs.coloring import (
    PI02,
    color_c,
    cycle_witness,
    g_beta_diagfree_contains,
    r_beta_contains,
    witness_pair,
)
from cantorpairs.words import alpha, parse_point, q_word

print("colors of the first few enumeration points:")
pts = [alpha(n) for n in range(7)]
header = "      " + "".join(f"a{n:<4}" for n in range(7))
print(header)
for m, x in enumerate(pts):
    row = "".join(f"{color_c(x, y) if x != y else '-':<5}" for y in pts)
    print(f"  a{m:<3} {row}")

print("\ntriangles, one per color:")
for p in (1, 2, 3, 4, 7, 12):
    triple = cycle_witness(p)
    names = ", ".join(q_word(x) or "e" for x in triple)
    colors = {color_c(a, b) for a, b in itertools.combinations(triple, 2)}
    print(f"  p={p:2}: ({names})  pairwise colors {colors}")

beta = parse_point("01(0)")  # only color 1 switched on
print(f"\nwith switch parameter {beta} (color 1 only):")
zero, one, two = alpha(0), alpha(1), alpha(3)
for x, y in ((zero, one), (one, two), (zero, zero)):
    val = r_beta_contains(PI02, beta, x, y)
    print(f"  related({x}, {y}) = {val}")
print("  diagonal removed:",
      g_beta_diagfree_contains(beta, zero, zero),
      "; off-diagonal edge kept:",
      g_beta_diagfree_contains(beta, zero, one))

print("\nwitness pairs put any color inside any cylinder:")
for s in ("", "11"):
    x, y = witness_pair(5, s)
    print(f"  color 5 inside cylinder '{s or 'e'}': ({x}, {y}) -> {color_c(x, y)}")
