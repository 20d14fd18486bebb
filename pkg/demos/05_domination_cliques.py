"""Domination hypergraphs: coloring rule and the common clique finder.

An integer matrix with strictly monotone rows plus a threshold colors each
column tuple: color 0 when every diagonal entry is at most the threshold,
color j when row j's entry clears the threshold by 4 and every other
diagonal entry by 2.  The finder returns one vertex set monochromatic in
every given instance, re-verified unconditionally.
"""

from itertools import combinations

from slramsey import (
    DominationInstance,
    domination_clique,
    domination_color,
    domination_sharpness_instance,
    max_common_monochromatic,
)

inst = DominationInstance(((4, 5, 6, 7, 8), (0, 1, 2, 8, 9), (0, 1, 2, 3, 6)), 0)
print("worked 3 x 5 instance, threshold 0:")
for t in combinations(range(1, 6), 3):
    print("  ", t, "->", domination_color(inst, t))

res = domination_clique([inst])
print("clique:", res.vertices, "colors:", res.colors)

# two instances over shared columns, both all-increasing: the arithmetic
# sample case fires and the last row dominates in each
n = 2000
a = DominationInstance(
    tuple(tuple(i * q for q in range(1, n + 1)) for i in (1, 2)), -n - 4
)
b = DominationInstance(
    tuple(tuple(i * q + 5 for q in range(1, n + 1)) for i in (3, 4)), -n - 4
)
res = domination_clique([a, b])
print(f"\nshared columns n={n}: |C| = {len(res.vertices)}, colors = {res.colors}")
print("recursion trace:", [step["step"] for step in res.trace])

# the matching upper bound family: q - n**(tau+i) rows cap every common
# monochromatic clique at R*n + 2R
instances, bound = domination_sharpness_instance(1, [2], 3)
best, colors = max_common_monochromatic(instances)
print(f"\nsharpness family n=3: exhaustive best |C| = {len(best)}, bound = {bound}")
