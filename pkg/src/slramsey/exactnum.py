"""Exact arithmetic substrate: rationals, symbolic tie-breaking, exact logs.

All scalar values in this package are arbitrary-precision rationals
(``fractions.Fraction``, canonical by construction).  Floating point is never
used.  Where an algorithm needs every row of a matrix to be repetition-free,
ties are broken with a formal positive infinitesimal instead of a concrete
small rational: a :class:`PerturbedValue` is a pair ``value + weight * iota``
ordered lexicographically, which is exact and never requires computing a
global gap bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to a canonical Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rational_str(x: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    return str(Fraction(x))


def sign_of(x) -> int:
    """Sign in {-1, 0, +1}; works for int, Fraction and PerturbedValue."""
    if isinstance(x, PerturbedValue):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


@dataclass(frozen=True)
class PerturbedValue:
    """value + weight * iota, for a formal positive infinitesimal iota.

    Ordering is lexicographic on (value, weight); addition and subtraction are
    componentwise; multiplication is by ordinary scalars only (iota**2 never
    arises).  A PerturbedValue is positive iff value > 0, or value = 0 and
    weight > 0.
    """

    value: Fraction
    weight: Fraction

    @staticmethod
    def of(value, weight=0) -> "PerturbedValue":
        return PerturbedValue(as_rational(value), as_rational(weight))

    def _coerced(self, other) -> "PerturbedValue":
        if isinstance(other, PerturbedValue):
            return other
        if isinstance(other, (int, Fraction)):
            return PerturbedValue(as_rational(other), Fraction(0))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return NotImplemented
        return PerturbedValue(self.value + o.value, self.weight + o.weight)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return NotImplemented
        return PerturbedValue(self.value - o.value, self.weight - o.weight)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return NotImplemented
        return PerturbedValue(o.value - self.value, o.weight - self.weight)

    def __neg__(self):
        return PerturbedValue(-self.value, -self.weight)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = as_rational(other)
            return PerturbedValue(self.value * k, self.weight * k)
        return NotImplemented

    __rmul__ = __mul__

    def _key(self):
        return (self.value, self.weight)

    def __lt__(self, other):
        o = self._coerced(other)
        return self._key() < o._key()

    def __le__(self, other):
        o = self._coerced(other)
        return self._key() <= o._key()

    def __gt__(self, other):
        o = self._coerced(other)
        return self._key() > o._key()

    def __ge__(self, other):
        o = self._coerced(other)
        return self._key() >= o._key()

    def sign(self) -> int:
        if self.value != 0:
            return 1 if self.value > 0 else -1
        if self.weight != 0:
            return 1 if self.weight > 0 else -1
        return 0

    def is_positive(self) -> bool:
        return self.sign() > 0

    def is_negative(self) -> bool:
        return self.sign() < 0


def _floor_log_ge1(base: int, x: Fraction) -> int:
    """Largest e >= 0 with base**e <= x, for x >= 1.  Exact integer compares."""
    num, den = x.numerator, x.denominator
    if base * den > num:
        return 0
    hi = 1
    while base**hi * den <= num:
        hi <<= 1
    # base**(hi//2) <= x < base**hi; binary search the exact exponent
    lo = hi >> 1
    while lo + 1 < hi:
        mid = (lo + hi) >> 1
        if base**mid * den <= num:
            lo = mid
        else:
            hi = mid
    return lo


def floor_log(base: int, x) -> int:
    """The unique integer e with base**e <= x < base**(e+1).

    ``x`` must be a positive rational; no floating point is involved, so the
    result is exact for arbitrarily large or small inputs (negative exponents
    are handled by inverting).
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    x = as_rational(x) if not isinstance(x, Fraction) else x
    if x <= 0:
        raise ValueError(f"floor_log requires x > 0, got {x}")
    if x >= 1:
        return _floor_log_ge1(base, x)
    y = 1 / x
    f = _floor_log_ge1(base, y)
    if y == base**f:
        return -f
    return -f - 1


def perturb_matrix(matrix: Sequence[Sequence]) -> list[list[PerturbedValue]]:
    """Attach a distinct infinitesimal weight to every entry of a matrix.

    Entry (i, j) of an r x N matrix becomes (M(i,j), ((i-1)*N + j) / (r*N))
    with 1-based i, j, so all weights are distinct and lie in (0, 1].  Within
    each row the perturbed entries are pairwise distinct, and for any tuple of
    columns the perturbed diagonal sum is negative iff the original sum is
    (a zero value-sum gains a strictly positive weight-sum, hence resolves to
    "not negative").  The witnessed primitive hypergraph is unchanged.
    """
    rows = [list(r) for r in matrix]
    r = len(rows)
    if r == 0:
        return []
    n = len(rows[0])
    for row in rows:
        if len(row) != n:
            raise ValueError("ragged matrix")
    denom = r * n
    out = []
    for i, row in enumerate(rows, start=1):
        out.append(
            [
                PerturbedValue(as_rational(v), Fraction((i - 1) * n + j, denom))
                for j, v in enumerate(row, start=1)
            ]
        )
    return out


def log2_interval(x, frac_bits: int = 64, guard_bits: int = 192) -> tuple[Fraction, Fraction]:
    """A dyadic interval [lo, hi] containing log2(x), for rational x > 0.

    Uses square-and-compare digit extraction with outward rounding at
    ``guard_bits`` of working precision, so intermediate numbers stay small.
    The interval width is 2**-frac_bits except in the rare case where rounding
    makes a digit ambiguous, in which case a correct but wider interval is
    returned.
    """
    x = as_rational(x)
    if x <= 0:
        raise ValueError("log2_interval requires x > 0")
    e = floor_log(2, x)
    m = x / Fraction(2) ** e  # in [1, 2)
    G = 1 << guard_bits
    two = 2 * G
    y_lo = (m.numerator * G) // m.denominator
    y_hi = -((-m.numerator * G) // m.denominator)
    acc = 0
    done = 0
    for _ in range(frac_bits):
        y_lo = (y_lo * y_lo) // G
        y_hi = -((-y_hi * y_hi) // G)
        if y_lo >= two:
            acc = acc * 2 + 1
            y_lo >>= 1
            y_hi = -((-y_hi) >> 1)
        elif y_hi < two:
            acc = acc * 2
        else:
            break  # rounding made this digit ambiguous; stop with a wider interval
        done += 1
    lo = Fraction(e) + Fraction(acc, 1 << done)
    hi = Fraction(e) + Fraction(acc + 1, 1 << done)
    return lo, hi


def log_ratio_upper(a, b, frac_bits: int = 64) -> Fraction:
    """A rational upper bound on log(a)/log(b), for rationals a, b > 1.

    Base-invariant (any common base).  The bound overshoots the true ratio by
    at most a few units in the 2**-frac_bits place, which is sound wherever
    the ratio feeds an upper-bound formula.
    """
    a = as_rational(a)
    b = as_rational(b)
    if a <= 1 or b <= 1:
        raise ValueError("log_ratio_upper requires a > 1 and b > 1")
    _, a_hi = log2_interval(a, frac_bits)
    b_lo, _ = log2_interval(b, frac_bits)
    if b_lo <= 0:
        raise ValueError(f"insufficient precision to separate log({b}) from 0")
    return a_hi / b_lo
