"""Every semi-linear hypergraph is a Boolean combination of primitive ones.

A primitive hypergraph is witnessed by an r x N matrix: a column tuple is an
edge iff its diagonal sum is negative.  Decomposition splits each linear
function f into the pair (f, -f), spreads the constant term evenly across
the r rows, and rebuilds the original edge set through a truth table over
the 2m strict sign memberships.  The equality is machine-checked here.
"""

from fractions import Fraction as F

from slramsey import (
    LinearDescription,
    LinearFunction,
    SignTable,
    boolean_combination,
    decompose_primitive,
    primitive_hypergraph,
    realize,
    stack,
)

points = tuple((F(j),) for j in range(1, 13))
f = LinearFunction(1, ((F(1),), (F(-2),), (F(1),)), F(0))
phi = SignTable.from_function(1, lambda s: s[0] == -1)
desc = LinearDescription(1, 3, points, (f,), phi)

direct = realize(desc)
witnesses, combiner = decompose_primitive(desc)
print("witness matrices:", len(witnesses))
print("first witness rows:")
for row in witnesses[0].entries:
    print("  ", [str(v) for v in row])

parts = [primitive_hypergraph(w) for w in witnesses]
recombined = boolean_combination(parts, combiner)
print("edge sets equal:", recombined.edges == direct.edges)
print("stacked shape:", stack(witnesses).rows, "x", stack(witnesses).cols)
