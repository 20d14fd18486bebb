import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from slramsey.errors import InsufficientInputError
from slramsey.hypergraph import BoolTable, boolean_combination
from slramsey.pipeline import multicolor_extract, semilinear_ramsey_extract
from slramsey.semilinear import (
    LinearDescription,
    LinearFunction,
    SignTable,
    decompose_primitive,
    primitive_hypergraph,
)


def shift_description(n, phi=None):
    points = tuple((F(j),) for j in range(1, n + 1))
    f = LinearFunction(1, ((F(1),), (F(-2),), (F(1),)), F(0))
    if phi is None:
        phi = SignTable.from_function(1, lambda s: s[0] == -1)
    return LinearDescription(1, 3, points, (f,), phi)


def _verify(desc, res):
    if res.vacuous:
        assert len(res.vertices) < desc.uniformity
        return
    want = res.kind == "clique"
    for t in combinations(res.vertices, desc.uniformity):
        assert desc.has_edge(t) == want


def test_complete_hypergraph_trivial():
    desc = shift_description(64, SignTable.constant(1, True))
    res = semilinear_ramsey_extract(desc)
    assert res.kind == "clique"
    _verify(desc, res)


def test_shift_small_run_verifies():
    res = semilinear_ramsey_extract(shift_description(256))
    _verify(shift_description(256), res)
    assert res.widths["cupcap"] >= 8
    assert res.widths["sampled"] >= 2


def test_shift_growing_run():
    res = semilinear_ramsey_extract(shift_description(4096))
    desc = shift_description(4096)
    _verify(desc, res)
    assert len(res.vertices) >= 3
    assert not res.vacuous


def test_stage_records_compose():
    desc = shift_description(1024)
    res = semilinear_ramsey_extract(desc)
    cols = list(range(1024))
    for st in res.stages:
        sel = st["columns"]
        assert all(0 <= c < len(cols) for c in sel)
        assert all(a < b for a, b in zip(sel, sel[1:]))
        cols = [cols[c] for c in sel]
    assert tuple(c + 1 for c in cols) == res.vertices


def test_block_data_consistency():
    desc = shift_description(1024)
    res = semilinear_ramsey_extract(desc)
    assert len(res.blocks) == 2  # one function -> two primitive parts
    for b in res.blocks:
        # every sampled row has one constant sign
        assert set(b.row_signs) <= {-1, 1}
        # thresholds: integer or the minus-infinity sentinel when shifts cancel
        if b.shift_sum == 0:
            assert repr(b.threshold) == "-inf"
        # log rows are strictly monotone integer rows
        for row in b.log_rows:
            assert all(isinstance(v, int) for v in row)
            assert all(a < b2 for a, b2 in zip(row, row[1:])) or all(
                a > b2 for a, b2 in zip(row, row[1:])
            )


def test_homogeneity_transfer_over_combiners():
    # the final set is homogeneous in every primitive part, hence in every
    # Boolean combination of the parts (checked on the induced sub-witnesses)
    desc = shift_description(4096)
    res = semilinear_ramsey_extract(desc)
    verts = res.vertices
    assert len(verts) >= 3
    ws, _ = decompose_primitive(desc)
    from slramsey.semilinear import WitnessMatrix

    restricted = [
        WitnessMatrix(tuple(tuple(row[v - 1] for v in verts) for row in w.entries))
        for w in ws
    ]
    parts = [primitive_hypergraph(w) for w in restricted]
    memberships = []
    for p, b in zip(parts, res.blocks):
        n_edges = len(p.edges)
        assert n_edges in (0, len(list(combinations(verts, 3))))
        member = n_edges > 0
        memberships.append(member)
        assert b.is_complete == member
    rng = random.Random(6)
    for _ in range(5):
        table = BoolTable.from_function(len(parts), lambda bits: rng.random() < 0.5)
        combined = boolean_combination(parts, table)
        vals = {
            combined.has_edge(t)
            for t in combinations(range(1, len(verts) + 1), 3)
        }
        assert len(vals) == 1
        assert vals.pop() == table(memberships)


def test_sign_stability_of_blocks():
    # a block colored j is complete exactly when its j-th sampled row is
    # negative, and a block colored 0 exactly when its shift sum is positive
    desc = shift_description(4096)
    res = semilinear_ramsey_extract(desc)
    assert len(res.vertices) >= 3
    for b in res.blocks:
        if b.color is None:
            continue
        if b.color == 0:
            assert b.is_complete == (b.shift_sum > 0)
        else:
            assert b.is_complete == (b.row_signs[b.color - 1] < 0)


def test_random_descriptions_always_verify():
    rng = random.Random(20260808)
    for _ in range(4):
        n = 512
        points = tuple((F(j),) for j in range(1, n + 1))
        f = LinearFunction(
            1,
            (
                (F(rng.randint(-3, 3)),),
                (F(rng.randint(-3, 3)),),
                (F(rng.randint(1, 3)),),
            ),
            F(rng.randint(-2, 2)),
        )
        table = tuple(rng.random() < 0.5 for _ in range(3))
        desc = LinearDescription(1, 3, points, (f,), SignTable(1, table))
        try:
            res = semilinear_ramsey_extract(desc)
        except InsufficientInputError as exc:
            assert exc.stage is not None
            continue
        _verify(desc, res)


def test_staged_error_for_tiny_input():
    with pytest.raises(InsufficientInputError) as err:
        semilinear_ramsey_extract(shift_description(6))
    assert err.value.stage is not None


def test_multicolor_complementary_pair():
    n = 4096
    points = tuple((F(j),) for j in range(1, n + 1))
    f = LinearFunction(1, ((F(1),), (F(-2),), (F(1),)), F(0))
    phi1 = SignTable.from_function(1, lambda s: s[0] == -1)
    phi2 = SignTable.from_function(1, lambda s: s[0] != -1)
    d1 = LinearDescription(1, 3, points, (f,), phi1)
    d2 = LinearDescription(1, 3, points, (f,), phi2)
    res = multicolor_extract([d1, d2])
    assert len(res.vertices) >= 3
    winner = [d1, d2][res.color_index]
    for t in combinations(res.vertices, 3):
        assert winner.has_edge(t)


def test_multicolor_single_class_reduces():
    desc = shift_description(4096, SignTable.constant(1, True))
    res = multicolor_extract([desc])
    assert res.color_index == 0
    for t in combinations(res.vertices, 3):
        assert desc.has_edge(t)


def test_multicolor_coverage_rejected():
    d1 = shift_description(6, SignTable.constant(1, False))
    d2 = shift_description(6, SignTable.constant(1, False))
    with pytest.raises(ValueError):
        multicolor_extract([d1, d2])
