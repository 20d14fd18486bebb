"""Stepping a graph up to a 3-uniform hypergraph, exactly witnessed.

Binary words a < b < c form an edge of the step-up iff the first position
where a, b differ precedes the one where b, c differ and those positions are
adjacent in the base graph.  Clique numbers grow by at most one and
independence numbers at most exponentiate, which turns dense triangle-free
graphs with small independent sets (the grid incidence construction) into
strong 3-uniform examples.  The same hypergraph is realized by points in one
higher dimension and sign conditions of lifted polynomials, with the
contraction parameter found by exact halving.
"""

from fractions import Fraction as F

from slramsey import (
    OrderedHypergraph,
    PolynomialFunction,
    SignTable,
    brute_alpha,
    brute_omega,
    incidence_graph,
    lower_bound_3uniform,
    step_up,
    step_up_witness,
)
from slramsey.constructions import graph_from_pair_description

g = OrderedHypergraph(3, 2, frozenset({(1, 2), (2, 3)}))
h = step_up(g)
print(f"step-up of a path on [3]: {h.n_vertices} vertices, {len(h.edges)} edges")
print("  omega:", brute_omega(h)[0], " alpha:", brute_alpha(h)[0])

inc = incidence_graph(2)
print(
    f"\nincidence grid k=2: {inc.graph.n_vertices} incidence vertices, "
    f"omega={brute_omega(inc.graph)[0]}, alpha={brute_alpha(inc.graph)[0]} "
    f"(bound 2m = {2 * inc.m})"
)
h2, meta = lower_bound_3uniform(1)
print("composed generator at k=1:", h2.n_vertices, "vertices,", meta)

# the exact witness: same edge set from sign patterns in one higher dimension
pts = [(F(0),), (F(1),)]
f = PolynomialFunction(2, 1, (((1, 0), F(1)), ((0, 1), F(-1)), ((0, 0), F(1, 3))))
phi = SignTable.from_function(1, lambda s: s[0] == -1)
wit = step_up_witness(pts, [f], phi)
base = graph_from_pair_description(pts, [f], phi)
print(
    f"\nwitness found at eps = {wit.epsilon}; lifted degree "
    f"{max(p.degree for p in wit.sign_functions)}; edge sets equal:",
    wit.realize().edges == step_up(base).edges,
)
