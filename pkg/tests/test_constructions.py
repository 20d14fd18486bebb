import random
from fractions import Fraction as F
from itertools import combinations, product

import pytest

from slramsey.constructions import (
    GrowthParams,
    PolynomialFunction,
    delta_index,
    graph_from_pair_description,
    growth_bounds,
    growth_edge_function,
    growth_hypergraph,
    incidence_graph,
    is_robust,
    lower_bound_3uniform,
    poly_const,
    poly_var,
    robustify,
    shift3_bound,
    shift3_hypergraph,
    step_up,
    step_up_witness,
    word_of,
)
from slramsey.errors import OracleBudgetError
from slramsey.exactnum import sign_of
from slramsey.hypergraph import OrderedHypergraph, brute_alpha, brute_omega
from slramsey.semilinear import SignTable


def test_delta_examples():
    assert delta_index((0, 1, 1), (0, 1, 0)) == 3
    assert delta_index((0,), (1,)) == 1
    with pytest.raises(ValueError):
        delta_index((0, 1), (0, 1))


def test_delta_first_difference_property_exhaustive():
    for n in (2, 3, 4):
        words = [word_of(i, n) for i in range(1, 2**n + 1)]
        for a, b, c in combinations(range(len(words)), 3):
            d_ab = delta_index(words[a], words[b])
            d_bc = delta_index(words[b], words[c])
            assert d_ab != d_bc
            # the earliest pairwise difference is the chain minimum
            assert delta_index(words[a], words[c]) == min(d_ab, d_bc)


def test_word_order_is_lexicographic():
    words = [word_of(i, 3) for i in range(1, 9)]
    assert words == sorted(words)
    assert words[0] == (0, 0, 0) and words[-1] == (1, 1, 1)


def test_step_up_single_edge():
    g = OrderedHypergraph(2, 2, frozenset({(1, 2)}))
    h = step_up(g)
    assert h.n_vertices == 4
    assert h.edges == frozenset({(1, 3, 4), (2, 3, 4)})


def test_step_up_empty_graph():
    g = OrderedHypergraph(3, 2, frozenset())
    assert not step_up(g).edges


def test_step_up_budget_guard():
    g = OrderedHypergraph(12, 2, frozenset())
    with pytest.raises(OracleBudgetError):
        step_up(g, budget=1000)


def test_step_up_bounds_all_graphs_up_to_4_vertices():
    for n in (1, 2, 3, 4):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = frozenset(p for i, p in enumerate(pairs) if (mask >> i) & 1)
            g = OrderedHypergraph(n, 2, edges)
            h = step_up(g)
            og, _ = brute_omega(g)
            ag, _ = brute_alpha(g)
            oh, _ = brute_omega(h)
            ah, _ = brute_alpha(h)
            assert oh <= og + 1
            assert ah <= n**ag + 1


def test_delta_chain_minimum_unique():
    # along any ordered word chain the minimal adjacent first-difference is
    # unique
    for n in (2, 3):
        words = [word_of(i, n) for i in range(1, 2**n + 1)]
        for chain in combinations(range(len(words)), 4):
            deltas = [
                delta_index(words[chain[i]], words[chain[i + 1]]) for i in range(3)
            ]
            assert deltas.count(min(deltas)) == 1


# ---------------------------------------------------------------------------
# step-up witness


def _linear_pair_poly(a, b, c):
    # f(x, y) = a*x + b*y + c over 1-dimensional points
    return PolynomialFunction(
        2, 1, (((1, 0), F(a)), ((0, 1), F(b)), ((0, 0), F(c)))
    )


def test_polynomial_evaluate():
    f = _linear_pair_poly(1, -1, F(1, 3))
    assert f.evaluate(((F(0),), (F(1),))) == F(-2, 3)
    assert f.degree == 1
    g = poly_var(2, 1, 0, 0) * poly_var(2, 1, 1, 0) + poly_const(2, 1, 2)
    assert g.evaluate(((F(3),), (F(5),))) == 17
    assert g.degree == 2


def test_robustify_keeps_graph():
    pts = [(F(0),), (F(1),), (F(2),)]
    f = _linear_pair_poly(1, -1, 0)  # vanishes on the diagonal
    phi = SignTable.from_function(1, lambda s: s[0] == -1)
    assert not is_robust(pts, [f])
    polys2, phi2 = robustify(pts, [f], phi)
    assert is_robust(pts, polys2)
    assert (
        graph_from_pair_description(pts, polys2, phi2).edges
        == graph_from_pair_description(pts, [f], phi).edges
    )


def test_step_up_witness_halving_and_equivalence():
    pts = [(F(0),), (F(1),)]
    f = _linear_pair_poly(1, -1, F(1, 3))  # robust on {0, 1}
    phi = SignTable.from_function(1, lambda s: s[0] == -1)
    assert is_robust(pts, [f])
    wit = step_up_witness(pts, [f], phi)
    assert 0 < wit.epsilon <= F(1, 2)
    base = graph_from_pair_description(pts, [f], phi)
    assert wit.realize().edges == step_up(base).edges


def test_step_up_witness_no_functions():
    pts = [(F(0),), (F(1),)]
    phi = SignTable.constant(0, True)
    wit = step_up_witness(pts, [], phi)
    base = graph_from_pair_description(pts, [], phi)
    assert wit.realize().edges == step_up(base).edges


def test_step_up_witness_equivalence_n3():
    pts = [(F(0),), (F(1),), (F(3),)]
    f = _linear_pair_poly(1, -2, F(1, 2))
    phi = SignTable.from_function(1, lambda s: s[0] == 1)
    wit = step_up_witness(pts, [f], phi, auto_robustify=True)
    base = graph_from_pair_description(pts, [f], phi)
    assert wit.realize().edges == step_up(base).edges
    # the returned parameter passes the full sign-agreement scan, re-checked
    # here independently at every triple
    words = [word_of(i, 3) for i in range(1, 9)]
    for a, b, c in combinations(range(8), 3):
        d1 = delta_index(words[a], words[b])
        d2 = delta_index(words[b], words[c])
        triple = (wit.points[a], wit.points[b], wit.points[c])
        assert sign_of(wit.order_function.evaluate(triple)) == (
            -1 if d1 < d2 else 1
        )
        for fbase, h in zip([f], wit.sign_functions):
            want = sign_of(fbase.evaluate((pts[d1 - 1], pts[d2 - 1])))
            assert sign_of(h.evaluate(triple)) == want


# ---------------------------------------------------------------------------
# incidence graphs


def test_incidence_k1():
    inc = incidence_graph(1)
    assert len(inc.lines) == 1 and inc.lines[0] == (1, 1)
    assert inc.graph.n_vertices == 1
    assert not inc.graph.edges


def test_incidence_k2():
    inc = incidence_graph(2)
    assert inc.graph.n_vertices == 16  # 8 lines x 2 points each
    assert inc.m == 16
    om, _ = brute_omega(inc.graph)
    assert om == 2
    al, _ = brute_alpha(inc.graph)
    assert al <= 2 * inc.m


def test_incidence_triangle_free_up_to_k3():
    for k in (2, 3):
        g = incidence_graph(k).graph
        om, _ = brute_omega(g)
        assert om == 2


def test_lower_bound_composition_k1():
    h, meta = lower_bound_3uniform(1)
    assert h.n_vertices == 2 and not h.edges
    assert meta["omega_bound"] == 2


# ---------------------------------------------------------------------------
# shift and growth families


def test_shift3_n4():
    h = shift3_hypergraph(4)
    assert h.edges == frozenset({(1, 3, 4)})


def test_shift3_bounds_small():
    for n in (8, 16):
        h = shift3_hypergraph(n)
        om, _ = brute_omega(h)
        al, _ = brute_alpha(h)
        assert om <= shift3_bound(n)
        assert al <= shift3_bound(n)


def test_shift3_alpha_at_64():
    al, w = brute_alpha(shift3_hypergraph(64))
    assert al <= shift3_bound(64)
    assert all(w[i] + w[k] >= 2 * w[j] for i, j, k in combinations(range(al), 3))


def test_growth_edge_examples():
    fn = growth_edge_function(GrowthParams((F(2),)))
    assert fn((1, 2, 3, 4))  # (4-1) - 2*(3-2) = 1 > 0
    assert fn((1, 2, 3, 5)) and fn((1, 3, 4, 5)) and fn((2, 3, 4, 5))
    fn10 = growth_edge_function(GrowthParams((F(10),)))
    assert not fn10((1, 2, 3, 4))  # 3 - 10 < 0


def test_growth_materialized_matches_predicate():
    params = GrowthParams((F(3),))
    h = growth_hypergraph(params, 9)
    fn = growth_edge_function(params)
    for t in combinations(range(1, 10), 4):
        assert h.has_edge(t) == fn(t)


def test_growth_scaling_invariance():
    # scaling every weight by a positive rational leaves the edge set alone
    base = GrowthParams((F(4), F(2)))
    fn = growth_edge_function(base)
    scaled_ts = tuple(F(7, 3) * t for t in base.t_values())

    def fn_scaled(e):
        r = 6
        total = F(0)
        for i in range(3):
            term = scaled_ts[i] * (e[r - 1 - i] - e[i])
            total += term if i % 2 == 0 else -term
        return total > 0

    for t in combinations(range(1, 11), 6):
        assert fn(t) == fn_scaled(t)


def test_growth_params_validation():
    with pytest.raises(ValueError):
        GrowthParams((F(2), F(3)))  # not decreasing
    with pytest.raises(ValueError):
        GrowthParams(())
    assert GrowthParams((F(10**6),)).proved_regime
    assert not GrowthParams((F(10**6 - 1),)).proved_regime


def test_growth_bounds_q1_forms():
    params = GrowthParams((F(4),))
    gb = growth_bounds(params, 64)
    # independence: 10 * (s + 2) exactly, empty sum
    assert gb.independence_bound == 60
    # clique: 10 * (s + 2 + log 64 / log 4) = 90, only upward slack allowed
    assert 90 <= gb.clique_bound < F(901, 10)
    assert not gb.proved_regime


def test_growth_bounds_q2_sums():
    params = GrowthParams((F(16), F(4)))
    gb = growth_bounds(params, 256)
    # independence: 10 * (4 + 2 + log16/log4) = 80
    assert 80 <= gb.independence_bound < F(801, 10)
    # clique: 10 * (4 + 2 + log256/log16) = 80 (the pair sum is empty at q=2)
    assert 80 <= gb.clique_bound < F(801, 10)
