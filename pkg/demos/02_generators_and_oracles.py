"""Hypergraph generators and the exhaustive clique/independence oracles.

The shift hypergraph on [n] (x < y < z an edge iff x + z < 2y) keeps both
its clique and independence number at or below ceil(log2 n) + 1; the
brute-force oracles verify this exactly and return certified witnesses.
"""

from fractions import Fraction as F

from slramsey import (
    GrowthParams,
    brute_alpha,
    brute_omega,
    growth_bounds,
    growth_hypergraph,
    is_clique,
    is_independent,
    shift3_bound,
    shift3_hypergraph,
)

for n in (8, 16, 32):
    h = shift3_hypergraph(n)
    omega, w_clique = brute_omega(h)
    alpha, w_indep = brute_alpha(h)
    print(
        f"shift[{n}]: omega={omega} alpha={alpha} bound={shift3_bound(n)} "
        f"clique witness={w_clique} independent witness={w_indep}"
    )
    assert is_clique(h, w_clique) and is_independent(h, w_indep)

# The higher-uniformity growth family: an alternating weighted sum of nested
# gaps decides edges.  At q=1 with scale s, an increasing quadruple
# (x0, x1, y1, y0) is an edge iff (y0 - x0) > s * (y1 - x1).
params = GrowthParams((F(6),))
h = growth_hypergraph(params, 48)
omega, _ = brute_omega(h)
alpha, _ = brute_alpha(h)
gb = growth_bounds(params, 48)
print(
    f"\ngrowth(s=6)[48]: omega={omega} alpha={alpha} "
    f"clique_bound={float(gb.clique_bound):.1f} "
    f"independence_bound={float(gb.independence_bound):.1f} "
    f"(formula values; proved regime flag: {gb.proved_regime})"
)
