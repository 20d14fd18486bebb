"""Semi-linear hypergraphs: point sets, linear sign patterns, and primitive
witness matrices.

A hypergraph on points p_1..p_N in Q^d is realized by m linear functions and
a truth table over their sign patterns.  Every such hypergraph is also the
Boolean combination of 2m "primitive" hypergraphs, each witnessed by an
r x N matrix P where an increasing tuple (q_1..q_r) is an edge iff the
diagonal sum P(1,q_1) + ... + P(r,q_r) is negative.  ``decompose_primitive``
performs that reduction constructively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .exactnum import as_rational, sign_of
from .hypergraph import BoolTable, OrderedHypergraph


@dataclass(frozen=True)
class LinearFunction:
    """Sum of per-argument inner products plus a constant.

    Evaluates on an r-tuple of d-dimensional points as
    sum_i <coeff_blocks[i], x_i> + constant.
    """

    dimension: int
    coeff_blocks: tuple[tuple[Fraction, ...], ...]
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(
            self,
            "coeff_blocks",
            tuple(tuple(as_rational(c) for c in blk) for blk in self.coeff_blocks),
        )
        object.__setattr__(self, "constant", as_rational(self.constant))
        for blk in self.coeff_blocks:
            if len(blk) != self.dimension:
                raise ValueError("coefficient block has wrong dimension")

    @property
    def arity(self) -> int:
        return len(self.coeff_blocks)

    def evaluate(self, points: Sequence[Sequence[Fraction]]) -> Fraction:
        if len(points) != self.arity:
            raise ValueError("wrong number of arguments")
        total = self.constant
        for blk, pt in zip(self.coeff_blocks, points):
            for c, x in zip(blk, pt):
                total += c * x
        return total

    def negated(self) -> "LinearFunction":
        return LinearFunction(
            self.dimension,
            tuple(tuple(-c for c in blk) for blk in self.coeff_blocks),
            -self.constant,
        )


@dataclass(frozen=True)
class SignTable:
    """Dense truth table over sign patterns {-, 0, +}**arity.

    Index of a sign vector s is sum((s[i]+1) * 3**i): digit 0 is '-',
    1 is '0', 2 is '+', little-endian in the function order.
    """

    arity: int
    table: tuple[bool, ...]

    def __post_init__(self):
        if self.arity > 8:
            raise ValueError("sign tables are capped at arity 8")
        if len(self.table) != 3**self.arity:
            raise ValueError("sign table has wrong size")

    @staticmethod
    def from_function(arity: int, fn) -> "SignTable":
        table = [False] * (3**arity)
        for digits in product((-1, 0, 1), repeat=arity):
            idx = sum((s + 1) * 3**i for i, s in enumerate(digits))
            table[idx] = bool(fn(digits))
        return SignTable(arity, tuple(table))

    @staticmethod
    def constant(arity: int, value: bool) -> "SignTable":
        return SignTable(arity, tuple([bool(value)] * (3**arity)))

    def index_of(self, signs: Sequence[int]) -> int:
        idx = 0
        for i, s in enumerate(signs):
            if s not in (-1, 0, 1):
                raise ValueError(f"bad sign {s}")
            idx += (s + 1) * 3**i
        return idx

    def __call__(self, signs: Sequence[int]) -> bool:
        if len(signs) != self.arity:
            raise ValueError("wrong arity")
        return self.table[self.index_of(signs)]


@dataclass(frozen=True)
class LinearDescription:
    """Points, linear functions and a sign combiner realizing a hypergraph."""

    dimension: int
    uniformity: int
    points: tuple[tuple[Fraction, ...], ...]
    functions: tuple[LinearFunction, ...]
    phi: SignTable

    def __post_init__(self):
        object.__setattr__(
            self,
            "points",
            tuple(tuple(as_rational(x) for x in p) for p in self.points),
        )
        for p in self.points:
            if len(p) != self.dimension:
                raise ValueError("point has wrong dimension")
        for f in self.functions:
            if f.dimension != self.dimension or f.arity != self.uniformity:
                raise ValueError("function signature does not match description")
        if self.phi.arity != len(self.functions):
            raise ValueError("phi arity does not match function count")

    @property
    def n_points(self) -> int:
        return len(self.points)

    def edge_signs(self, tup: Sequence[int]) -> tuple[int, ...]:
        pts = [self.points[i - 1] for i in tup]
        return tuple(sign_of(f.evaluate(pts)) for f in self.functions)

    def has_edge(self, tup: Sequence[int]) -> bool:
        return self.phi(self.edge_signs(tup))


def realize(desc: LinearDescription) -> OrderedHypergraph:
    """Evaluate all sign patterns exactly and map them through the combiner."""
    n, r = desc.n_points, desc.uniformity
    edges = {t for t in combinations(range(1, n + 1), r) if desc.has_edge(t)}
    return OrderedHypergraph(n, r, frozenset(edges))


@dataclass(frozen=True)
class WitnessMatrix:
    """Exact rows x cols matrix witnessing primitive hypergraphs.

    Entries are rationals, or PerturbedValues after perturbation.
    """

    entries: tuple[tuple, ...]

    def __post_init__(self):
        if self.entries:
            w = len(self.entries[0])
            for row in self.entries:
                if len(row) != w:
                    raise ValueError("ragged witness matrix")
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple:
        return self.entries[i]


def _rows_of(matrix) -> tuple[tuple, ...]:
    if isinstance(matrix, WitnessMatrix):
        return matrix.entries
    return tuple(tuple(r) for r in matrix)


def primitive_hypergraph(matrix) -> OrderedHypergraph:
    """Edge set of the primitive hypergraph witnessed by an r x N matrix.

    (q_1 < ... < q_r) is an edge iff sum_i P(i, q_i) < 0, compared exactly
    (lexicographically for perturbed entries).
    """
    rows = _rows_of(matrix)
    r = len(rows)
    n = len(rows[0]) if rows else 0
    edges = set()
    for t in combinations(range(n), r):
        total = rows[0][t[0]]
        for i in range(1, r):
            total = total + rows[i][t[i]]
        if sign_of(total) < 0:
            edges.add(tuple(q + 1 for q in t))
    return OrderedHypergraph(n, r, frozenset(edges))


def decompose_primitive(desc: LinearDescription) -> tuple[list[WitnessMatrix], BoolTable]:
    """Split a semi-linear description into 2m primitive witnesses.

    For each function f_j the pair (f_j, -f_j) yields two witnesses with
    entries <a_i, p_q> + b/r, and the returned combiner reconstructs each
    sign from the two strict memberships: '-' iff part 2j-1, '+' iff part 2j,
    '0' iff neither (both is impossible and maps to False).
    """
    r = desc.uniformity
    witnesses: list[WitnessMatrix] = []
    for f in desc.functions:
        for g in (f, f.negated()):
            rows = []
            for i in range(r):
                blk = g.coeff_blocks[i]
                row = []
                for p in desc.points:
                    v = g.constant / r
                    for c, x in zip(blk, p):
                        v += c * x
                    row.append(v)
                rows.append(tuple(row))
            witnesses.append(WitnessMatrix(tuple(rows)))

    m = len(desc.functions)
    phi = desc.phi

    def combined(bits):
        signs = []
        for j in range(m):
            neg, pos = bits[2 * j], bits[2 * j + 1]
            if neg and pos:
                return False  # unreachable: f < 0 and -f < 0 cannot both hold
            signs.append(-1 if neg else (1 if pos else 0))
        return phi(signs)

    return witnesses, BoolTable.from_function(2 * m, combined)


def stack(witnesses: Sequence[WitnessMatrix]) -> WitnessMatrix:
    """Stack k r x N witnesses into one rk x N matrix (block ell = witness ell)."""
    if not witnesses:
        raise ValueError("nothing to stack")
    cols = witnesses[0].cols
    rows_per = witnesses[0].rows
    rows = []
    for w in witnesses:
        if w.cols != cols or w.rows != rows_per:
            raise ValueError("mismatched witness shapes")
        rows.extend(w.entries)
    return WitnessMatrix(tuple(rows))


def blocks(matrix: WitnessMatrix, r: int) -> list[WitnessMatrix]:
    """Inverse of :func:`stack`: split an rk x N matrix into k blocks of r rows."""
    if matrix.rows % r != 0:
        raise ValueError("row count is not a multiple of the block size")
    out = []
    for j in range(matrix.rows // r):
        out.append(WitnessMatrix(matrix.entries[j * r : (j + 1) * r]))
    return out
