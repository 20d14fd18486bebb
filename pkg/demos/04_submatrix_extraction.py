"""Structured submatrix extraction, stage by stage.

From any matrix with repetition-free rows one can keep columns so that every
row becomes strictly monotone, then so that every row becomes a cup
(x_i + x_l >= 2 x_j on all triples) or a cap (<=), and finally sample every
z-th column and shift each row by an endpoint so the values grow or decay by
a factor above Delta at every step.  Each stage's output re-verifies against
its defining inequalities.
"""

import random
from fractions import Fraction as F

from slramsey import (
    cup_or_cap,
    cupcap_submatrix,
    exponential_shift,
    is_cap,
    is_cup,
    is_delta_exponential,
    monotone_subsequence,
    row_monotone_submatrix,
)

rng = random.Random(0)

# classic guarantee: any k*l+1 distinct values contain an increasing run of
# k+1 or a decreasing run of l+1
xs = rng.sample(range(100), 13)
kind, idx = monotone_subsequence(xs, 3, 4)
print("sequence:", xs)
print("monotone outcome:", kind, [xs[i] for i in idx])

# row-monotone extraction keeps at least N**(1/2**q) columns
matrix = [rng.sample(range(1000), 81) for _ in range(2)]
stage = row_monotone_submatrix(matrix)
print("\nrow-monotone width:", len(stage.columns), "directions:", stage.directions)

# cups or caps from a strictly increasing sequence of length 2**(s+t)
seq = [0]
for _ in range(63):
    seq.append(seq[-1] + rng.randint(1, 9))
kind, pos = cup_or_cap(seq, 3, 3)
vals = [seq[p] for p in pos]
print("\ncup_or_cap outcome:", kind, vals)
assert is_cap(vals) if kind == "cap" else is_cup(vals)

# a full cupcap submatrix, then the exponential shift of each row
rows = [[F(2) ** j for j in range(70)], [-(F(3) ** j) for j in range(70)]]
stage = cupcap_submatrix(rows, 2)
print("\ncupcap columns:", stage.columns, "kinds:", stage.kinds)

geometric = [F(2) ** j for j in range(1, 12)]
shift = exponential_shift(geometric, F(4))
shifted = [geometric[p] + shift.shift for p in shift.sample_positions]
print(
    "exponential sample:", [str(v) for v in shifted],
    "type:", shift.tau, "stride:", shift.z,
)
assert is_delta_exponential(shifted, F(4), shift.tau)
