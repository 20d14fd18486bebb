"""JSON schemas for every artifact the package reads or writes.

Rationals serialize as the string "p/q" ("p" when the denominator is 1);
no serialized artifact ever contains a float.  Dumps are canonical (sorted
keys, fixed separators) so equal inputs give byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from .domination import MINUS_INFINITY, DominationInstance, DominationResult
from .exactnum import as_rational, rational_str
from .hypergraph import BoolTable, ColoredHypergraph, OrderedHypergraph
from .semilinear import (
    LinearDescription,
    LinearFunction,
    SignTable,
    WitnessMatrix,
)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def hypergraph_to_json(h: OrderedHypergraph) -> dict:
    return {
        "type": "hypergraph",
        "n": h.n_vertices,
        "r": h.uniformity,
        "edges": sorted(list(e) for e in h.edges),
    }


def hypergraph_from_json(obj: dict) -> OrderedHypergraph:
    return OrderedHypergraph(
        obj["n"], obj["r"], frozenset(tuple(e) for e in obj["edges"])
    )


def colored_hypergraph_to_json(ch: ColoredHypergraph) -> dict:
    return {
        "type": "colored-hypergraph",
        "n": ch.n_vertices,
        "r": ch.uniformity,
        "colors": sorted([list(t), c] for t, c in ch.coloring.items()),
    }


def colored_hypergraph_from_json(obj: dict) -> ColoredHypergraph:
    return ColoredHypergraph(
        obj["n"], obj["r"], {tuple(t): c for t, c in obj["colors"]}
    )


def description_to_json(desc: LinearDescription) -> dict:
    return {
        "type": "description",
        "d": desc.dimension,
        "r": desc.uniformity,
        "points": [[rational_str(x) for x in p] for p in desc.points],
        "functions": [
            {
                "a": [[rational_str(c) for c in blk] for blk in f.coeff_blocks],
                "b": rational_str(f.constant),
            }
            for f in desc.functions
        ],
        "phi": {"arity": desc.phi.arity, "table": list(desc.phi.table)},
    }


def description_from_json(obj: dict) -> LinearDescription:
    d = obj["d"]
    r = obj["r"]
    points = tuple(tuple(as_rational(x) for x in p) for p in obj["points"])
    functions = tuple(
        LinearFunction(
            d,
            tuple(tuple(as_rational(c) for c in blk) for blk in f["a"]),
            as_rational(f["b"]),
        )
        for f in obj["functions"]
    )
    phi = SignTable(obj["phi"]["arity"], tuple(bool(b) for b in obj["phi"]["table"]))
    return LinearDescription(d, r, points, functions, phi)


def witness_to_json(w: WitnessMatrix) -> dict:
    return {
        "type": "witness",
        "rows": w.rows,
        "cols": w.cols,
        "entries": [[rational_str(v) for v in row] for row in w.entries],
    }


def witness_from_json(obj: dict) -> WitnessMatrix:
    return WitnessMatrix(
        tuple(tuple(as_rational(v) for v in row) for row in obj["entries"])
    )


def bool_table_to_json(t: BoolTable) -> dict:
    return {"arity": t.arity, "table": list(t.table)}


def bool_table_from_json(obj: dict) -> BoolTable:
    return BoolTable(obj["arity"], tuple(bool(b) for b in obj["table"]))


def threshold_to_json(h):
    return "-inf" if h is MINUS_INFINITY else h


def threshold_from_json(v):
    return MINUS_INFINITY if v == "-inf" else int(v)


def instance_to_json(inst: DominationInstance) -> dict:
    return {
        "P": [list(row) for row in inst.matrix],
        "h": threshold_to_json(inst.threshold),
    }


def instance_from_json(obj: dict) -> DominationInstance:
    return DominationInstance(
        tuple(tuple(row) for row in obj["P"]), threshold_from_json(obj["h"])
    )


def instances_to_json(instances) -> dict:
    return {
        "type": "domination-instances",
        "n": instances[0].n_columns,
        "instances": [instance_to_json(i) for i in instances],
    }


def instances_from_json(obj: dict) -> list[DominationInstance]:
    return [instance_from_json(o) for o in obj["instances"]]


def domination_result_to_json(res: DominationResult, instances) -> dict:
    return {
        "type": "domination-result",
        "instances": instances_to_json(instances),
        "C": list(res.vertices),
        "colors": [c for c in res.colors],
        "trace": res.trace,
        "below_threshold": res.below_threshold,
        "verified": res.verified,
    }


def pipeline_result_to_json(res, desc: LinearDescription) -> dict:
    return {
        "type": "pipeline-result",
        "description": description_to_json(desc),
        "kind": res.kind,
        "vertices": list(res.vertices),
        "vacuous": res.vacuous,
        "widths": res.widths,
        "stages": res.stages,
        "blocks": [
            {
                "S": rational_str(b.shift_sum),
                "h": threshold_to_json(b.threshold),
                "L": [list(r) for r in b.log_rows],
                "row_signs": list(b.row_signs),
                "color": b.color,
                "is_complete": b.is_complete,
            }
            for b in res.blocks
        ],
    }
