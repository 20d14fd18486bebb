"""Extremal generators: the shift hypergraph, the alternating-sum growth
family, binary-word step-up, its exact semi-algebraic witness, and the
point/line incidence graph.

The step-up of a graph G on [N] lives on the 2**N binary words in
lexicographic order: words a < b < c form an edge iff the first position
where a and b differ comes before the first position where b and c differ,
and those two positions are adjacent in G.  ``step_up_witness`` realizes the
same hypergraph with points in Q^(d+1) and polynomial sign conditions,
choosing the contraction parameter by exact halving until every sign
agrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Callable, Optional, Sequence

from .errors import InternalVerificationError, OracleBudgetError
from .exactnum import as_rational, sign_of
from .hypergraph import LazyHypergraph, OrderedHypergraph
from .semilinear import SignTable

# ---------------------------------------------------------------------------
# multivariate polynomials with exact coefficients

Monomial = tuple[int, ...]  # flattened exponents over arity*dimension variables


@dataclass(frozen=True)
class PolynomialFunction:
    """Polynomial over ``arity`` point arguments of ``dimension`` coords each.

    Stored as a monomial map (flattened exponent vector -> coefficient);
    evaluation is exact rational arithmetic.
    """

    arity: int
    dimension: int
    monomials: tuple[tuple[Monomial, Fraction], ...]

    def __post_init__(self):
        nv = self.arity * self.dimension
        canon: dict[Monomial, Fraction] = {}
        for exps, c in self.monomials:
            if len(exps) != nv:
                raise ValueError("monomial exponent vector has wrong length")
            c = as_rational(c)
            if c != 0:
                canon[tuple(exps)] = canon.get(tuple(exps), Fraction(0)) + c
        cleaned = tuple(sorted((e, c) for e, c in canon.items() if c != 0))
        object.__setattr__(self, "monomials", cleaned)

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.monomials), default=0)

    def evaluate(self, points: Sequence[Sequence]) -> Fraction:
        if len(points) != self.arity:
            raise ValueError("wrong number of point arguments")
        flat = [as_rational(x) for p in points for x in p]
        total = Fraction(0)
        for exps, c in self.monomials:
            term = c
            for x, e in zip(flat, exps):
                if e:
                    term *= x**e
            total += term
        return total

    # -- arithmetic ----------------------------------------------------------

    def _same_shape(self, other: "PolynomialFunction"):
        if self.arity != other.arity or self.dimension != other.dimension:
            raise ValueError("polynomial shapes differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = poly_const(self.arity, self.dimension, other)
        self._same_shape(other)
        return PolynomialFunction(
            self.arity, self.dimension, self.monomials + other.monomials
        )

    def __neg__(self):
        return PolynomialFunction(
            self.arity, self.dimension, tuple((e, -c) for e, c in self.monomials)
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = poly_const(self.arity, self.dimension, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = as_rational(other)
            return PolynomialFunction(
                self.arity, self.dimension, tuple((e, c * k) for e, c in self.monomials)
            )
        self._same_shape(other)
        acc: dict[Monomial, Fraction] = {}
        for e1, c1 in self.monomials:
            for e2, c2 in other.monomials:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return PolynomialFunction(self.arity, self.dimension, tuple(acc.items()))

    __rmul__ = __mul__

    def power(self, e: int) -> "PolynomialFunction":
        out = poly_const(self.arity, self.dimension, 1)
        for _ in range(e):
            out = out * self
        return out


def poly_const(arity: int, dimension: int, c) -> PolynomialFunction:
    nv = arity * dimension
    return PolynomialFunction(arity, dimension, (((0,) * nv, as_rational(c)),))


def poly_var(arity: int, dimension: int, block: int, coord: int) -> PolynomialFunction:
    """The coordinate variable x_block(coord), 0-based block and coord."""
    nv = arity * dimension
    exps = [0] * nv
    exps[block * dimension + coord] = 1
    return PolynomialFunction(arity, dimension, ((tuple(exps), Fraction(1)),))


def realize_polynomial(
    points: Sequence[Sequence], polys: Sequence[PolynomialFunction], phi: SignTable
) -> OrderedHypergraph:
    """Hypergraph from sign patterns of arbitrary-degree polynomials.

    Only used to check step-up witnesses; general semi-algebraic realization
    beyond that is out of scope.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    r = polys[0].arity
    n = len(points)
    edges = set()
    for t in combinations(range(1, n + 1), r):
        pts = [points[i - 1] for i in t]
        signs = tuple(sign_of(p.evaluate(pts)) for p in polys)
        if phi(signs):
            edges.add(t)
    return OrderedHypergraph(n, r, frozenset(edges))


# ---------------------------------------------------------------------------
# binary words and step-up


def delta_index(a: Sequence[int], b: Sequence[int]) -> int:
    """First position (1-based) where two equal-length binary words differ."""
    if len(a) != len(b):
        raise ValueError("words have different lengths")
    for i, (x, y) in enumerate(zip(a, b), start=1):
        if x != y:
            return i
    raise ValueError("words are equal")


def word_of(index: int, n: int) -> tuple[int, ...]:
    """The ``index``-th word (1-based) of {0,1}**n in lexicographic order."""
    if not (1 <= index <= 1 << n):
        raise ValueError("word index out of range")
    v = index - 1
    return tuple((v >> (n - 1 - i)) & 1 for i in range(n))


def step_up(
    graph: OrderedHypergraph, cap: int = 16, budget: int = 5_000_000
) -> OrderedHypergraph:
    """The 3-uniform step-up of a graph on [N], on all 2**N binary words.

    Materializes the edge set, so besides the vertex cap there is a triple
    budget: 2**N vertices mean binomial(2**N, 3) candidate triples, which is
    refused (never truncated) when it exceeds ``budget``.
    """
    if graph.uniformity != 2:
        raise ValueError("step-up starts from a graph (uniformity 2)")
    n = graph.n_vertices
    if n > cap:
        raise ValueError(f"step-up cap exceeded: {n} > {cap}")
    n_words = 1 << n
    if comb(n_words, 3) > budget:
        raise OracleBudgetError(
            f"step-up on {n_words} words needs {comb(n_words, 3)} triple tests"
        )
    words = [word_of(i, n) for i in range(1, n_words + 1)]
    edges = set()
    for a, b, c in combinations(range(n_words), 3):
        d1 = delta_index(words[a], words[b])
        d2 = delta_index(words[b], words[c])
        if d1 < d2 and graph.has_edge((d1, d2)):
            edges.add((a + 1, b + 1, c + 1))
    return OrderedHypergraph(n_words, 3, frozenset(edges))


# ---------------------------------------------------------------------------
# step-up witness with exact contraction parameter


@dataclass(frozen=True)
class StepUpWitness:
    """Points in Q^(d+1) and polynomials realizing a graph's step-up.

    ``order_function`` is positive exactly when the second difference gap of
    first coordinates flips, i.e. it decides which of the two first-difference
    positions comes first; ``sign_functions`` reproduce the base functions'
    signs at those positions.  ``phi`` is the base graph's combiner.
    """

    points: tuple[tuple[Fraction, ...], ...]
    order_function: PolynomialFunction
    sign_functions: tuple[PolynomialFunction, ...]
    phi: SignTable
    epsilon: Fraction

    def combined_phi(self) -> SignTable:
        """Sign combiner over (order_function, *sign_functions)."""
        m = len(self.sign_functions)
        base = self.phi

        def fn(signs):
            return signs[0] == -1 and base(tuple(signs[1:]))

        return SignTable.from_function(m + 1, fn)

    def realize(self) -> OrderedHypergraph:
        polys = (self.order_function,) + self.sign_functions
        return realize_polynomial(self.points, polys, self.combined_phi())


def robustify(
    points: Sequence[Sequence],
    polys: Sequence[PolynomialFunction],
    phi: SignTable,
) -> tuple[tuple[PolynomialFunction, ...], SignTable]:
    """Replace (f_i) by (f_i + e, f_i - e) so no function vanishes on a pair.

    ``e`` is half the smallest nonzero |f_i(p, q)| over all ordered pairs,
    which keeps every nonzero sign and turns every zero into the pattern
    (+, -); the returned combiner reconstructs the original signs.
    """
    min_abs: Optional[Fraction] = None
    for f in polys:
        for p in points:
            for q in points:
                v = f.evaluate((p, q))
                if v != 0:
                    a = abs(v)
                    if min_abs is None or a < min_abs:
                        min_abs = a
    eps = (min_abs / 2) if min_abs is not None else Fraction(1)
    out = []
    for f in polys:
        out.append(f + eps)
        out.append(f - eps)

    m = len(polys)

    def fn(signs):
        rec = []
        for j in range(m):
            plus_side, minus_side = signs[2 * j], signs[2 * j + 1]
            if plus_side > 0 and minus_side < 0:
                rec.append(0)
            elif plus_side > 0 and minus_side > 0:
                rec.append(1)
            elif plus_side < 0 and minus_side < 0:
                rec.append(-1)
            else:
                return False  # unreachable for the perturbation above
        return phi(rec)

    return tuple(out), SignTable.from_function(2 * m, fn)


def is_robust(points: Sequence[Sequence], polys: Sequence[PolynomialFunction]) -> bool:
    """No polynomial vanishes on any ordered pair of points."""
    return all(
        f.evaluate((p, q)) != 0 for f in polys for p in points for q in points
    )


def graph_from_pair_description(
    points: Sequence[Sequence], polys: Sequence[PolynomialFunction], phi: SignTable
) -> OrderedHypergraph:
    """Graph on [N] whose edges follow the sign pattern on ordered pairs."""
    n = len(points)
    edges = set()
    for a, b in combinations(range(1, n + 1), 2):
        signs = tuple(sign_of(f.evaluate((points[a - 1], points[b - 1]))) for f in polys)
        if phi(signs):
            edges.add((a, b))
    return OrderedHypergraph(n, 2, frozenset(edges))


def step_up_witness(
    points: Sequence[Sequence],
    polys: Sequence[PolynomialFunction],
    phi: SignTable,
    *,
    cap: int = 6,
    auto_robustify: bool = True,
    max_halvings: int = 200,
) -> StepUpWitness:
    """Exact witness for the step-up of the graph realized by (points, polys, phi).

    Word a maps to q_a = sum_i a(i) * eps**i * (1, p_i) in Q^(d+1).  Each base
    function f of degree at most D lifts to
    h(x,y,z) = (x1-y1)**(2D) * (y1-z1)**(2D) * f(gap(x,y), gap(y,z)) where
    gap divides coordinate differences by the first-coordinate difference; h
    is a polynomial of degree at most 5D.  eps starts at 1/2 and halves until
    the full scan over word triples shows every h sign agreeing with the base
    function at the first-difference positions, and the order polynomial
    x1 - 2*y1 + z1 deciding their order; the scan's success is the
    termination condition and is what the returned witness guarantees.
    """
    pts = [tuple(as_rational(x) for x in p) for p in points]
    n = len(pts)
    if n < 1:
        raise ValueError("need at least one point")
    if n > cap:
        raise ValueError(f"step-up witness cap exceeded: {n} > {cap}")
    d = len(pts[0])
    for f in polys:
        if f.arity != 2 or f.dimension != d:
            raise ValueError("base functions must be binary over the point space")
    if phi.arity != len(polys):
        raise ValueError("phi arity mismatch")

    if not is_robust(pts, polys):
        if not auto_robustify:
            raise ValueError("witness pair is not robust and auto_robustify is off")
        polys, phi = robustify(pts, polys, phi)

    deg = max((f.degree for f in polys), default=1)
    deg = max(deg, 1)

    # lifted polynomials over three (d+1)-dimensional arguments
    dd = d + 1
    x1 = poly_var(3, dd, 0, 0)
    y1 = poly_var(3, dd, 1, 0)
    z1 = poly_var(3, dd, 2, 0)
    A = x1 - y1
    B = y1 - z1
    order_poly = x1 - 2 * y1 + z1  # negative exactly when the first gap is wider

    lifted = []
    for f in polys:
        acc = poly_const(3, dd, 0)
        for exps, c in f.monomials:
            u_exps = exps[:d]
            v_exps = exps[d:]
            su, sv = sum(u_exps), sum(v_exps)
            term = poly_const(3, dd, c)
            for t, e in enumerate(u_exps):
                if e:
                    term = term * (poly_var(3, dd, 0, t + 1) - poly_var(3, dd, 1, t + 1)).power(e)
            for t, e in enumerate(v_exps):
                if e:
                    term = term * (poly_var(3, dd, 1, t + 1) - poly_var(3, dd, 2, t + 1)).power(e)
            term = term * A.power(2 * deg - su) * B.power(2 * deg - sv)
            acc = acc + term
        lifted.append(acc)
    lifted = tuple(lifted)

    words = [word_of(i, n) for i in range(1, (1 << n) + 1)]

    eps = Fraction(1, 2)
    for _ in range(max_halvings):
        qs = []
        for w in words:
            q = [Fraction(0)] * dd
            for i, bit in enumerate(w, start=1):
                if bit:
                    scale = eps**i
                    q[0] += scale
                    for t in range(d):
                        q[t + 1] += scale * pts[i - 1][t]
            qs.append(tuple(q))
        if _scan_agrees(words, qs, pts, polys, lifted, order_poly):
            return StepUpWitness(tuple(qs), order_poly, lifted, phi, eps)
        eps /= 2
    raise InternalVerificationError("halving did not stabilize the sign scan")


def _scan_agrees(words, qs, pts, polys, lifted, order_poly) -> bool:
    n_words = len(words)
    for a, b, c in combinations(range(n_words), 3):
        d1 = delta_index(words[a], words[b])
        d2 = delta_index(words[b], words[c])
        triple = (qs[a], qs[b], qs[c])
        want_order = -1 if d1 < d2 else 1
        if sign_of(order_poly.evaluate(triple)) != want_order:
            return False
        for f, h in zip(polys, lifted):
            want = sign_of(f.evaluate((pts[d1 - 1], pts[d2 - 1])))
            if sign_of(h.evaluate(triple)) != want:
                return False
    return True


# ---------------------------------------------------------------------------
# point/line incidence graph


@dataclass(frozen=True)
class IncidenceGraph:
    graph: OrderedHypergraph
    points: tuple[tuple[int, int], ...]
    lines: tuple[tuple[int, int], ...]  # (slope, intercept): y = a*x + b
    incidences: tuple[tuple[int, int], ...]  # (point index, line index), 0-based
    m: int  # max(#points, #lines); independence is bounded by 2m


def incidence_graph(k: int) -> IncidenceGraph:
    """The grid incidence construction: triangle-free with small independence.

    Points [k] x [2k**2] and lines y = a*x + b with a in [k], b in [k**2];
    every line meets exactly k grid points, giving k**4 incidence vertices.
    Incidences (p, l) and (p', l') are adjacent iff p < p', l < l' and p lies
    on l', under the fixed lexicographic order on points and lines.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if k > 6:
        raise ValueError("incidence grid capped at k = 6")
    points = sorted(product(range(1, k + 1), range(1, 2 * k * k + 1)))
    lines = sorted(product(range(1, k + 1), range(1, k * k + 1)))
    point_idx = {p: i for i, p in enumerate(points)}

    def on_line(p, ln):
        return p[1] == ln[0] * p[0] + ln[1]

    incid = []
    for li, ln in enumerate(lines):
        for x in range(1, k + 1):
            p = (x, ln[0] * x + ln[1])
            if p in point_idx:
                incid.append((point_idx[p], li))
    incid.sort()
    n = len(incid)
    edges = set()
    for ia, ib in combinations(range(n), 2):
        for (u, v) in ((ia, ib), (ib, ia)):
            pu, lu = incid[u]
            pv, lv = incid[v]
            if pu < pv and lu < lv and on_line(points[pu], lines[lv]):
                edges.add((min(ia, ib) + 1, max(ia, ib) + 1))
                break
    return IncidenceGraph(
        graph=OrderedHypergraph(n, 2, frozenset(edges)),
        points=tuple(points),
        lines=tuple(lines),
        incidences=tuple(incid),
        m=max(len(points), len(lines)),
    )


def lower_bound_3uniform(k: int, cap: int = 16) -> tuple[OrderedHypergraph, dict]:
    """Step-up of the incidence graph, with its predicted bounds.

    The step-up of a triangle-free graph has clique number at most 3 and
    independence number at most |V|**alpha + 1; both predictions are emitted
    for test harnesses.  Materialization explodes quickly (2**|V| words), so
    only tiny k are runnable.
    """
    inc = incidence_graph(k)
    g = inc.graph
    if g.n_vertices > cap:
        raise ValueError(f"incidence graph has {g.n_vertices} vertices, cap {cap}")
    h = step_up(g, cap=cap)
    from .hypergraph import brute_alpha, brute_omega

    omega_g, _ = brute_omega(g)
    alpha_g, _ = brute_alpha(g)
    meta = {
        "omega_bound": omega_g + 1,
        "alpha_bound": g.n_vertices**alpha_g + 1,
        "base_vertices": g.n_vertices,
    }
    return h, meta


# ---------------------------------------------------------------------------
# shift hypergraph and the growth family


def shift3_hypergraph(n: int) -> OrderedHypergraph:
    """3-uniform hypergraph on [n]: x < y < z is an edge iff x + z < 2y.

    Both the clique and the independence number stay at or below
    ceil(log2 n) + 1.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    edges = {
        (x, y, z)
        for x, y, z in combinations(range(1, n + 1), 3)
        if x + z < 2 * y
    }
    return OrderedHypergraph(n, 3, frozenset(edges))


def shift3_bound(n: int) -> int:
    """ceil(log2 n) + 1, the shared clique/independence bound."""
    e = 0
    while (1 << e) < n:
        e += 1
    return e + 1


@dataclass(frozen=True)
class GrowthParams:
    """Strictly decreasing scale factors s_1 > ... > s_q.

    The uniformity of the generated family is 2q+2.  The proved bounds
    assume s_q at least 10**6 (the ``proved_regime`` flag); outside it the
    bound formulas are still evaluated but only as formula values.
    """

    scales: tuple[Fraction, ...]

    def __post_init__(self):
        sc = tuple(as_rational(s) for s in self.scales)
        object.__setattr__(self, "scales", sc)
        if not sc:
            raise ValueError("need at least one scale")
        if any(s <= 0 for s in sc):
            raise ValueError("scales must be positive")
        if any(sc[i] <= sc[i + 1] for i in range(len(sc) - 1)):
            raise ValueError("scales must be strictly decreasing")

    @property
    def q(self) -> int:
        return len(self.scales)

    @property
    def uniformity(self) -> int:
        return 2 * self.q + 2

    @property
    def proved_regime(self) -> bool:
        return self.scales[-1] >= 10**6

    def t_values(self) -> tuple[Fraction, ...]:
        # t_0 = 1, t_i = s_i * t_{i-1}
        out = [Fraction(1)]
        for s in self.scales:
            out.append(out[-1] * s)
        return tuple(out)


def growth_edge_function(params: GrowthParams) -> Callable[[tuple[int, ...]], bool]:
    """Edge predicate: the alternating t-weighted sum of nested gaps is positive.

    A sorted tuple e = (x_0..x_q, y_q..y_0) is an edge iff
    sum_i (-1)**i * t_i * (y_i - x_i) > 0.  Integer fast path when all t_i
    are integers.
    """
    q = params.q
    r = params.uniformity
    ts = params.t_values()
    if all(t.denominator == 1 for t in ts):
        ts_int = [t.numerator for t in ts]

        def edge_int(e: tuple[int, ...]) -> bool:
            total = 0
            for i in range(q + 1):
                term = ts_int[i] * (e[r - 1 - i] - e[i])
                total += term if i % 2 == 0 else -term
            return total > 0

        return edge_int

    def edge(e: tuple[int, ...]) -> bool:
        total = Fraction(0)
        for i in range(q + 1):
            term = ts[i] * (e[r - 1 - i] - e[i])
            total += term if i % 2 == 0 else -term
        return total > 0

    return edge


def growth_hypergraph(
    params: GrowthParams, n: int, budget: int = 2_000_000
) -> OrderedHypergraph:
    """Materialized growth hypergraph on [n] (uniformity 2q+2).

    n above the leading scale is the intended regime; smaller n is allowed
    for exploration.  Use :func:`growth_hypergraph_lazy` for oracle runs too
    large to materialize.
    """
    r = params.uniformity
    if comb(n, r) > budget:
        raise OracleBudgetError(
            f"growth hypergraph on [{n}] needs {comb(n, r)} tuple tests"
        )
    fn = growth_edge_function(params)
    edges = {t for t in combinations(range(1, n + 1), r) if fn(t)}
    return OrderedHypergraph(n, r, frozenset(edges))


def growth_hypergraph_lazy(params: GrowthParams, n: int) -> LazyHypergraph:
    return LazyHypergraph(n, params.uniformity, growth_edge_function(params))


@dataclass(frozen=True)
class GrowthBounds:
    clique_bound: Fraction
    independence_bound: Fraction
    proved_regime: bool


def growth_bounds(params: GrowthParams, n: int) -> GrowthBounds:
    """Upper-bound formulas for the growth family's clique and independence.

    clique:      10 * (s_q + 2 + log n / log s_1
                        + sum over i of log s_{2i} / log s_{2i+1})
    independence: 10 * (s_q + 2 + sum over i of log s_{2i-1} / log s_{2i})

    Log ratios are base-invariant and evaluated as exact rational upper
    bounds (rounding up is sound for an upper bound).  Outside the proved
    regime the values are formula evaluations only; the flag says which.
    """
    from .exactnum import log_ratio_upper

    s = params.scales
    q = params.q
    if any(x <= 1 for x in s):
        raise ValueError("bound formulas need every scale above 1")
    if n <= 1:
        raise ValueError("need n >= 2")
    clique = s[-1] + 2 + log_ratio_upper(n, s[0])
    for i in range(1, (q - 1) // 2 + 1):
        clique += log_ratio_upper(s[2 * i - 1], s[2 * i])  # s_{2i}/s_{2i+1}, 1-based
    indep = s[-1] + 2
    for i in range(1, q // 2 + 1):
        indep += log_ratio_upper(s[2 * i - 2], s[2 * i - 1])  # s_{2i-1}/s_{2i}
    return GrowthBounds(10 * clique, 10 * indep, params.proved_regime)
