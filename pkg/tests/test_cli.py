import json
from fractions import Fraction as F

import pytest

from slramsey.cli import main
from slramsey.jsonio import description_to_json, dumps, instances_to_json
from slramsey.domination import DominationInstance
from slramsey.semilinear import LinearDescription, LinearFunction, SignTable


def shift_desc(n):
    points = tuple((F(j),) for j in range(1, n + 1))
    f = LinearFunction(1, ((F(1),), (F(-2),), (F(1),)), F(0))
    phi = SignTable.from_function(1, lambda s: s[0] == -1)
    return LinearDescription(1, 3, points, (f,), phi)


@pytest.fixture
def desc_file(tmp_path):
    p = tmp_path / "desc.json"
    p.write_text(dumps(description_to_json(shift_desc(256))))
    return str(p)


def test_construct_shift3_with_metadata(tmp_path):
    out = tmp_path / "h.json"
    assert main(["construct", "shift3", "--n", "16", "--out", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["n"] == 16 and obj["r"] == 3
    assert obj["metadata"]["omega_bound"] == 5  # ceil(log2 16) + 1


def test_construct_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["construct", "shift3", "--n", "12", "--out", str(a)])
    main(["construct", "shift3", "--n", "12", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_oracle_on_shift3(tmp_path):
    h = tmp_path / "h.json"
    out = tmp_path / "oracle.json"
    main(["construct", "shift3", "--n", "8", "--out", str(h)])
    assert main(["oracle", "--hypergraph", str(h), "--out", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["alpha"]["size"] == 4
    assert obj["omega"]["size"] <= 4


def test_decompose(desc_file, tmp_path):
    out = tmp_path / "dec.json"
    assert main(["decompose", "--input", desc_file, "--out", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert len(obj["witnesses"]) == 2
    assert obj["stacked"]["rows"] == 6


def test_pipeline_and_verify_roundtrip(desc_file, tmp_path):
    cert = tmp_path / "cert.json"
    assert main(["pipeline", "--desc", desc_file, "--emit-certificate", str(cert)]) == 0
    assert main(["verify", "--input", str(cert)]) == 0


def test_verify_rejects_tampered_certificate(desc_file, tmp_path):
    cert = tmp_path / "cert.json"
    main(["pipeline", "--desc", desc_file, "--emit-certificate", str(cert)])
    obj = json.loads(cert.read_text())
    obj["vertices"][0] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert main(["verify", "--input", str(bad)]) == 2


def test_verify_rejects_tampered_stage(desc_file, tmp_path):
    cert = tmp_path / "cert.json"
    main(["pipeline", "--desc", desc_file, "--emit-certificate", str(cert)])
    obj = json.loads(cert.read_text())
    stage = obj["stages"][1]
    stage["columns"][0], stage["columns"][1] = (
        stage["columns"][1],
        stage["columns"][0],
    )
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert main(["verify", "--input", str(bad)]) == 2


def test_dominate_and_verify(tmp_path):
    inst = DominationInstance(((4, 5, 6, 7, 8), (0, 1, 2, 8, 9), (0, 1, 2, 3, 6)), 0)
    f = tmp_path / "inst.json"
    f.write_text(dumps(instances_to_json([inst])))
    out = tmp_path / "dom.json"
    assert main(["dominate", "--instances", str(f), "--out", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["verified"] is True
    assert len(obj["C"]) >= 3
    assert main(["verify", "--input", str(out)]) == 0
    obj["C"][0] = 4  # break monotonicity of the recorded set
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert main(["verify", "--input", str(bad)]) == 2


def test_streamline_certificate(tmp_path):
    entries = [[str(2**j) for j in range(70)], [str(-(3**j)) for j in range(70)]]
    f = tmp_path / "w.json"
    f.write_text(
        json.dumps({"type": "witness", "rows": 2, "cols": 70, "entries": entries})
    )
    out = tmp_path / "cert.json"
    assert main(["streamline", "--input", str(f), "--target-n", "2", "--out", str(out)]) == 0
    assert main(["verify", "--input", str(out)]) == 0


def test_streamline_insufficient_width(tmp_path):
    entries = [[str(j) for j in range(10)]]
    f = tmp_path / "w.json"
    f.write_text(
        json.dumps({"type": "witness", "rows": 1, "cols": 10, "entries": entries})
    )
    assert main(["streamline", "--input", str(f), "--target-n", "3"]) == 2


def test_bench_pipeline_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--kind", "pipeline", "--ns", "256", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,monotone,cupcap,sampled,clique,kind"
    assert lines[1].startswith("256,")


def test_bench_domination_seeded(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["bench", "--kind", "domination", "--ns", "40,60", "--seed", "7", "--out", str(a)])
    main(["bench", "--kind", "domination", "--ns", "40,60", "--seed", "7", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_budget_flag_gives_clean_error(tmp_path):
    h = tmp_path / "h.json"
    main(["construct", "shift3", "--n", "32", "--out", str(h)])
    assert main(["--budget", "10", "oracle", "--hypergraph", str(h)]) == 2


def test_format_flag_validation(tmp_path):
    h = tmp_path / "h.json"
    assert main(["--format", "json", "construct", "shift3", "--n", "8", "--out", str(h)]) == 0
    assert main(["--format", "csv", "construct", "shift3", "--n", "8"]) == 2
    out = tmp_path / "b.csv"
    assert main(["--format", "csv", "bench", "--kind", "pipeline", "--ns", "256", "--out", str(out)]) == 0
    assert main(["--format", "json", "bench", "--kind", "pipeline", "--ns", "256"]) == 2


def test_construct_growth_incidence_stepup(tmp_path):
    g = tmp_path / "g.json"
    assert main(["construct", "growth", "--scales", "4", "--n", "10", "--out", str(g)]) == 0
    obj = json.loads(g.read_text())
    assert obj["r"] == 4 and obj["metadata"]["proved_regime"] is False

    inc = tmp_path / "inc.json"
    assert main(["construct", "incidence", "--k", "2", "--out", str(inc)]) == 0
    obj = json.loads(inc.read_text())
    assert obj["n"] == 16 and obj["metadata"]["omega_claim"] == 2

    # step the incidence graph up (16 vertices exceeds any triple budget, so
    # use a small graph instead)
    base = tmp_path / "base.json"
    base.write_text(
        json.dumps({"type": "hypergraph", "n": 2, "r": 2, "edges": [[1, 2]]})
    )
    up = tmp_path / "up.json"
    assert main(["construct", "stepup", "--input", str(base), "--out", str(up)]) == 0
    obj = json.loads(up.read_text())
    assert obj["n"] == 4 and sorted(map(tuple, obj["edges"])) == [(1, 3, 4), (2, 3, 4)]
    assert obj["metadata"]["omega_bound"] == 3


def test_bench_growth_csv(tmp_path):
    out = tmp_path / "g.csv"
    assert main(
        ["bench", "--kind", "growth", "--scales", "4", "--ns", "16,20", "--out", str(out)]
    ) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("scale,n,omega,alpha")
    assert len(lines) == 3


def test_colored_hypergraph_roundtrip():
    from slramsey.domination import domination_hypergraph
    from slramsey.jsonio import (
        colored_hypergraph_from_json,
        colored_hypergraph_to_json,
    )

    inst = DominationInstance(((4, 5, 6, 7, 8), (0, 1, 2, 8, 9), (0, 1, 2, 3, 6)), 0)
    ch = domination_hypergraph(inst)
    back = colored_hypergraph_from_json(colored_hypergraph_to_json(ch))
    assert dict(back.coloring) == dict(ch.coloring)
    assert back.n_vertices == ch.n_vertices and back.uniformity == ch.uniformity
