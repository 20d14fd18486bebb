"""The full pipeline: description in, verified homogeneous set out.

Starting from points on the line and one linear sign condition, the chain
decomposes into primitive witnesses, extracts monotone then cup/cap columns,
samples and shifts every row into exact exponential growth, floors the logs
into integer domination instances, finds one commonly monochromatic set, and
maps it back.  The result is re-verified edge by edge in the original
hypergraph, and sizes grow as the point count grows.
"""

from fractions import Fraction as F
from itertools import combinations

from slramsey import (
    LinearDescription,
    LinearFunction,
    SignTable,
    multicolor_extract,
    semilinear_ramsey_extract,
)


def shift_description(n, phi=None):
    points = tuple((F(j),) for j in range(1, n + 1))
    f = LinearFunction(1, ((F(1),), (F(-2),), (F(1),)), F(0))
    if phi is None:
        phi = SignTable.from_function(1, lambda s: s[0] == -1)
    return LinearDescription(1, 3, points, (f,), phi)


for n in (256, 1024, 4096):
    desc = shift_description(n)
    res = semilinear_ramsey_extract(desc)
    ok = all(
        desc.has_edge(t) == (res.kind == "clique")
        for t in combinations(res.vertices, 3)
    )
    print(
        f"n={n}: {res.kind} {res.vertices} widths={res.widths} "
        f"re-verified={ok or res.vacuous}"
    )

# the multicolor variant: classes covering every triple yield a clique that
# is monochromatic in one class (here: a hypergraph and its complement)
n = 4096
pts = tuple((F(j),) for j in range(1, n + 1))
f = LinearFunction(1, ((F(1),), (F(-2),), (F(1),)), F(0))
cls1 = LinearDescription(1, 3, pts, (f,), SignTable.from_function(1, lambda s: s[0] == -1))
cls2 = LinearDescription(1, 3, pts, (f,), SignTable.from_function(1, lambda s: s[0] != -1))
mc = multicolor_extract([cls1, cls2])
print(f"\nmulticolor: class {mc.color_index} holds a clique {mc.vertices}")
