"""Ordered uniform hypergraphs and exhaustive clique/independence oracles.

Vertices are 1..N with a fixed order; edges are strictly increasing r-tuples.
The oracles here are ground truth for every clique/independence claim in the
package: branch-and-bound over the vertex order with memoized membership
masks, a hard work budget (explicit :class:`OracleBudgetError` instead of a
timeout or a wrong answer), and a deterministic, lexicographically least
witness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import OracleBudgetError

DEFAULT_BUDGET = 50_000_000


def _budget_default() -> int:
    env = os.environ.get("RAMSEY_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def _validated_edges(n: int, r: int, edges: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for e in edges:
        t = tuple(e)
        if len(t) != r:
            raise ValueError(f"edge {t} does not have {r} vertices")
        if any(not (1 <= v <= n) for v in t):
            raise ValueError(f"edge {t} out of range [1, {n}]")
        if any(t[i] >= t[i + 1] for i in range(r - 1)):
            raise ValueError(f"edge {t} is not strictly increasing")
        out.add(t)
    return frozenset(out)


@dataclass(frozen=True)
class OrderedHypergraph:
    """r-uniform hypergraph on ordered vertices 1..n_vertices."""

    n_vertices: int
    uniformity: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n_vertices < 0 or self.uniformity < 1:
            raise ValueError("need n_vertices >= 0 and uniformity >= 1")
        object.__setattr__(
            self, "edges", _validated_edges(self.n_vertices, self.uniformity, self.edges)
        )

    def has_edge(self, tup: tuple[int, ...]) -> bool:
        return tuple(tup) in self.edges

    def complement(self) -> "OrderedHypergraph":
        n, r = self.n_vertices, self.uniformity
        comp = {t for t in combinations(range(1, n + 1), r) if t not in self.edges}
        return OrderedHypergraph(n, r, frozenset(comp))


@dataclass(frozen=True)
class LazyHypergraph:
    """A hypergraph given by an edge predicate, for instances too large to
    materialize.  Oracles only need n, r and membership tests."""

    n_vertices: int
    uniformity: int
    edge_fn: Callable[[tuple[int, ...]], bool]

    def has_edge(self, tup: tuple[int, ...]) -> bool:
        return self.edge_fn(tuple(tup))


@dataclass(frozen=True)
class ColoredHypergraph:
    """Partial edge coloring: a map from increasing r-tuples to colors."""

    n_vertices: int
    uniformity: int
    coloring: Mapping[tuple[int, ...], int]

    def color_of(self, tup: tuple[int, ...]) -> Optional[int]:
        return self.coloring.get(tuple(tup))


def _search_max(n: int, r: int, passes, budget: int) -> tuple[int, tuple[int, ...]]:
    """Largest S (0-based verts) whose every r-subset satisfies ``passes``.

    Returns (size, lexicographically least maximum witness, 1-based sorted).
    DFS over the vertex order; the membership mask for each (r-1)-subset is
    built once, over vertices above its maximum, and memoized.
    """
    if n == 0:
        return 0, ()
    if r == 1:
        verts = tuple(v for v in range(1, n + 1) if passes((v,)))
        return len(verts), verts

    masks: dict[tuple[int, ...], int] = {}
    ops = 0

    def mask_for(u: tuple[int, ...]) -> int:
        # u: sorted 0-based (r-1)-subset; bit w set iff u+{w} passes, w > max(u)
        nonlocal ops
        m = 0
        base = tuple(v + 1 for v in u)
        lo = u[-1] + 1
        ops += n - lo
        if ops > budget:
            raise OracleBudgetError(f"oracle budget exceeded ({budget})")
        for w in range(lo, n):
            if passes(base + (w + 1,)):
                m |= 1 << w
        return m

    best_size = 0
    best: tuple[int, ...] = ()

    def extend(S: tuple[int, ...], cand: int):
        nonlocal best_size, best, ops
        ops += 1
        if ops > budget:
            raise OracleBudgetError(f"oracle budget exceeded ({budget})")
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            if len(S) + 1 + m.bit_count() <= best_size and len(S) + 1 <= best_size:
                break
            newS = S + (v,)
            if len(newS) > best_size:
                best_size = len(newS)
                best = newS
            child = m
            if child and len(S) >= r - 2:
                for tpr in combinations(S, r - 2):
                    u = tpr + (v,)
                    mk = masks.get(u)
                    if mk is None:
                        mk = mask_for(u)
                        masks[u] = mk
                    child &= mk
                    if not child:
                        break
            if child and len(newS) + child.bit_count() > best_size:
                extend(newS, child)

    extend((), (1 << n) - 1)
    return best_size, tuple(v + 1 for v in best)


def brute_omega(h, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with witness.

    Any set of fewer than r vertices is vacuously a clique, so the result is
    at least min(N, r-1).  Raises OracleBudgetError when the search would
    exceed ``budget`` elementary operations.
    """
    budget = _budget_default() if budget is None else budget
    return _search_max(h.n_vertices, h.uniformity, h.has_edge, budget)


def brute_alpha(h, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with witness (no r-subset is an edge)."""
    budget = _budget_default() if budget is None else budget
    return _search_max(
        h.n_vertices, h.uniformity, lambda t: not h.has_edge(t), budget
    )


@dataclass(frozen=True)
class BoolTable:
    """Dense truth table over {True, False}**arity.

    Index of an input vector b is sum(b[i] << i): little-endian in the part
    order, so table[0] is the all-False row.
    """

    arity: int
    table: tuple[bool, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.arity:
            raise ValueError("truth table has wrong size")

    @staticmethod
    def from_function(arity: int, fn) -> "BoolTable":
        rows = []
        for idx in range(1 << arity):
            bits = tuple(bool((idx >> i) & 1) for i in range(arity))
            rows.append(bool(fn(bits)))
        return BoolTable(arity, tuple(rows))

    def __call__(self, bits: Sequence[bool]) -> bool:
        if len(bits) != self.arity:
            raise ValueError("wrong arity")
        idx = 0
        for i, b in enumerate(bits):
            if b:
                idx |= 1 << i
        return self.table[idx]


def boolean_combination(parts: Sequence, combiner: BoolTable) -> OrderedHypergraph:
    """Combine hypergraphs on a shared ordered vertex set through a truth table.

    A tuple is an edge of the result iff combiner(membership vector) is True.
    """
    if not parts:
        raise ValueError("need at least one part")
    n = parts[0].n_vertices
    r = parts[0].uniformity
    for p in parts:
        if p.n_vertices != n or p.uniformity != r:
            raise ValueError("parts disagree on vertex count or uniformity")
    if combiner.arity != len(parts):
        raise ValueError("combiner arity does not match number of parts")
    edges = set()
    for t in combinations(range(1, n + 1), r):
        if combiner([p.has_edge(t) for p in parts]):
            edges.add(t)
    return OrderedHypergraph(n, r, frozenset(edges))


def is_clique(h, vertices: Iterable[int]) -> bool:
    """Every r-subset of ``vertices`` is an edge (vacuously true below size r)."""
    vs = sorted(set(vertices))
    return all(h.has_edge(t) for t in combinations(vs, h.uniformity))


def is_independent(h, vertices: Iterable[int]) -> bool:
    """No r-subset of ``vertices`` is an edge (vacuously true below size r)."""
    vs = sorted(set(vertices))
    return not any(h.has_edge(t) for t in combinations(vs, h.uniformity))


def is_monochromatic(ch: ColoredHypergraph, vertices: Iterable[int]) -> Optional[int]:
    """The unique color carried by every r-subset of ``vertices``, else None.

    Sets with fewer than r vertices have no r-subsets and hence no witnessed
    color; None is returned for them as well.
    """
    vs = sorted(set(vertices))
    color: Optional[int] = None
    seen = False
    for t in combinations(vs, ch.uniformity):
        c = ch.color_of(t)
        if c is None:
            return None
        if not seen:
            color = c
            seen = True
        elif c != color:
            return None
    return color if seen else None
