"""Exact scalars: floor logarithms and symbolic tie-breaking.

Every number in this package is an arbitrary-precision rational; comparisons
and logarithm floors are computed by exact integer power tests, so results
are identical on every machine and at every magnitude.
"""

from fractions import Fraction as F

from slramsey import PerturbedValue, floor_log, perturb_matrix

print("floor_log(2, 8)      =", floor_log(2, F(8)))
print("floor_log(6, 1/7)    =", floor_log(6, F(1, 7)), " (1/36 <= 1/7 < 1/6)")
print("floor_log(10, 10**40)=", floor_log(10, F(10) ** 40))
print("floor_log(3, 1/3**25)=", floor_log(3, F(1, 3**25)))

# Ties are broken by a formal positive infinitesimal, not a tiny rational:
# (0, w) sorts strictly above 0 for any positive weight w, and below every
# positive rational.
a = PerturbedValue(F(0), F(1, 7))
b = PerturbedValue(F(0), F(2, 7))
print("\n(0 + iota/7) < (0 + 2*iota/7):", a < b)
print("(0 + iota/7) > 0:", a > 0, "   (0 + iota/7) < 1/10**9:", a < F(1, 10**9))

# perturb_matrix makes every row repetition-free without changing which
# column tuples have negative diagonal sums
matrix = [[F(0), F(0), F(1)], [F(2), F(2), F(2)]]
for row in perturb_matrix(matrix):
    print([f"{v.value}+{v.weight}i" for v in row])
