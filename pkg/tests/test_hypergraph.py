import random
from itertools import combinations

import pytest

from slramsey.errors import OracleBudgetError
from slramsey.hypergraph import (
    BoolTable,
    ColoredHypergraph,
    LazyHypergraph,
    OrderedHypergraph,
    boolean_combination,
    brute_alpha,
    brute_omega,
    is_clique,
    is_independent,
    is_monochromatic,
)


def complete(n, r):
    return OrderedHypergraph(n, r, frozenset(combinations(range(1, n + 1), r)))


def empty(n, r):
    return OrderedHypergraph(n, r, frozenset())


def test_edge_validation():
    with pytest.raises(ValueError):
        OrderedHypergraph(3, 2, frozenset({(2, 1)}))
    with pytest.raises(ValueError):
        OrderedHypergraph(3, 2, frozenset({(1, 4)}))
    with pytest.raises(ValueError):
        OrderedHypergraph(3, 2, frozenset({(1, 2, 3)}))


def test_omega_complete_and_empty():
    size, witness = brute_omega(complete(5, 3))
    assert size == 5 and witness == (1, 2, 3, 4, 5)
    size, witness = brute_omega(empty(5, 3))
    assert size == 2 and witness == (1, 2)  # vacuous below the uniformity


def test_alpha_complete_and_empty():
    size, _ = brute_alpha(empty(5, 3))
    assert size == 5
    size, _ = brute_alpha(complete(5, 3))
    assert size == 2


def test_omega_r1():
    h = OrderedHypergraph(4, 1, frozenset({(2,), (4,)}))
    assert brute_omega(h) == (2, (2, 4))
    assert brute_alpha(h) == (2, (1, 3))


def test_budget_error():
    h = complete(18, 2)
    with pytest.raises(OracleBudgetError):
        brute_omega(h, budget=10)


def test_witness_is_lexicographically_least():
    # two maximum cliques {1,5} x {2,3}: expect (1, 5)
    h = OrderedHypergraph(5, 2, frozenset({(1, 5), (2, 3)}))
    assert brute_omega(h) == (2, (1, 5))


def test_complement_duality_random():
    rng = random.Random(99)
    for _ in range(20):
        edges = frozenset(
            e for e in combinations(range(1, 9), 3) if rng.random() < 0.4
        )
        h = OrderedHypergraph(8, 3, edges)
        w_size, w = brute_omega(h)
        a_size, a = brute_alpha(h.complement())
        assert (w_size, w) == (a_size, a)


def test_witnesses_reverify():
    rng = random.Random(5)
    for _ in range(20):
        edges = frozenset(
            e for e in combinations(range(1, 9), 3) if rng.random() < 0.5
        )
        h = OrderedHypergraph(8, 3, edges)
        _, w = brute_omega(h)
        assert is_clique(h, w)
        _, a = brute_alpha(h)
        assert is_independent(h, a)


def test_lazy_hypergraph_oracle_agrees():
    edges = frozenset({(1, 2, 3), (2, 3, 4), (1, 3, 4)})
    h = OrderedHypergraph(4, 3, edges)
    lz = LazyHypergraph(4, 3, lambda t: t in edges)
    assert brute_omega(h) == brute_omega(lz)
    assert brute_alpha(h) == brute_alpha(lz)


def test_boolean_combination_trivials():
    h = OrderedHypergraph(5, 3, frozenset({(1, 2, 3), (2, 4, 5)}))
    proj = BoolTable.from_function(1, lambda b: b[0])
    assert boolean_combination([h], proj).edges == h.edges
    always = BoolTable.from_function(1, lambda b: True)
    assert boolean_combination([h], always).edges == complete(5, 3).edges
    xor = BoolTable.from_function(2, lambda b: b[0] != b[1])
    assert not boolean_combination([h, h], xor).edges


def test_boolean_combination_rejects_mismatch():
    with pytest.raises(ValueError):
        boolean_combination([complete(4, 2), complete(5, 2)], BoolTable.from_function(2, any))


def test_small_sets_vacuously_homogeneous():
    h = complete(6, 3)
    assert is_clique(h, (1, 4)) and is_independent(h, (1, 4))
    assert is_clique(empty(6, 3), (2,)) and is_independent(empty(6, 3), (2,))


def test_is_monochromatic():
    ch = ColoredHypergraph(
        5, 3, {(1, 2, 3): 1, (1, 2, 4): 1, (1, 3, 4): 1, (2, 3, 4): 1, (3, 4, 5): 2}
    )
    assert is_monochromatic(ch, (1, 2, 3, 4)) == 1
    assert is_monochromatic(ch, (1, 2)) is None  # vacuous: no witnessed color
    assert is_monochromatic(ch, (2, 3, 4, 5)) is None  # mixed / partly uncolored
