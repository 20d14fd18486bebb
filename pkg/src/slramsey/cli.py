"""Batch front door: construct, decompose, streamline, dominate, pipeline,
oracle, verify, bench.

Outputs are deterministic for fixed inputs and seed (canonical JSON, no
floats).  Exit code 2 means a precondition or verification failure, with the
failing stage named; exit code 1 means an internal re-verification failed,
which indicates a bug and must never occur.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .constructions import (
    GrowthParams,
    growth_bounds,
    growth_hypergraph,
    incidence_graph,
    shift3_bound,
    shift3_hypergraph,
    step_up,
)
from .domination import (
    DominationInstance,
    domination_clique,
    domination_color,
)
from .errors import InsufficientInputError, InternalVerificationError, OracleBudgetError
from .exactnum import as_rational, perturb_matrix, rational_str
from .hypergraph import brute_alpha, brute_omega
from .jsonio import (
    bool_table_to_json,
    description_from_json,
    domination_result_to_json,
    dumps,
    hypergraph_from_json,
    hypergraph_to_json,
    instances_from_json,
    pipeline_result_to_json,
    witness_from_json,
    witness_to_json,
)
from .pipeline import semilinear_ramsey_extract
from .semilinear import decompose_primitive, stack
from .streamline import (
    cupcap_submatrix,
    exponential_shift,
    is_cap,
    is_cup,
    is_delta_exponential,
    is_strictly_monotone,
    row_monotone_submatrix,
)


def _emit(args, payload: dict) -> None:
    text = dumps(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _budget(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get("RAMSEY_BUDGET")
    return int(env) if env else 50_000_000


# ---------------------------------------------------------------------------
# subcommands


def _cmd_construct(args) -> int:
    if args.what == "shift3":
        h = shift3_hypergraph(args.n)
        meta = {"omega_bound": shift3_bound(args.n), "alpha_bound": shift3_bound(args.n)}
    elif args.what == "growth":
        params = GrowthParams(tuple(as_rational(s) for s in args.scales.split(",")))
        h = growth_hypergraph(params, args.n, budget=_budget(args))
        gb = growth_bounds(params, args.n)
        meta = {
            "clique_bound": rational_str(gb.clique_bound),
            "independence_bound": rational_str(gb.independence_bound),
            "proved_regime": gb.proved_regime,
        }
    elif args.what == "stepup":
        g = hypergraph_from_json(_load(args.input))
        h = step_up(g, budget=_budget(args))
        omega_g, _ = brute_omega(g, budget=_budget(args))
        alpha_g, _ = brute_alpha(g, budget=_budget(args))
        meta = {
            "omega_bound": omega_g + 1,
            "alpha_bound": g.n_vertices**alpha_g + 1,
        }
    elif args.what == "incidence":
        inc = incidence_graph(args.k)
        h = inc.graph
        meta = {"m": inc.m, "alpha_bound": 2 * inc.m, "omega_claim": 2}
    else:
        raise ValueError(f"unknown construction {args.what}")
    payload = hypergraph_to_json(h)
    payload["metadata"] = meta
    _emit(args, payload)
    return 0


def _cmd_decompose(args) -> int:
    desc = description_from_json(_load(args.input))
    witnesses, combiner = decompose_primitive(desc)
    payload = {
        "type": "decomposition",
        "witnesses": [witness_to_json(w) for w in witnesses],
        "combiner": bool_table_to_json(combiner),
        "stacked": witness_to_json(stack(witnesses)),
    }
    _emit(args, payload)
    return 0


def _cmd_streamline(args) -> int:
    w = witness_from_json(_load(args.input))
    perturbed = perturb_matrix(w.entries)
    mono = row_monotone_submatrix(perturbed)
    stages = [
        {
            "role": "monotone",
            "columns": list(mono.columns),
            "directions": list(mono.directions),
        }
    ]
    pert_mono = [[row[c] for c in mono.columns] for row in perturbed]
    cup = cupcap_submatrix(pert_mono, args.target_n)
    stages.append({"role": "cupcap", "columns": list(cup.columns), "kinds": list(cup.kinds)})
    if args.delta:
        delta = as_rational(args.delta)
        abs_cols = [mono.columns[c] for c in cup.columns]
        shifts, taus, positions = [], [], None
        for i in range(w.rows):
            row = [w.entries[i][c] for c in abs_cols]
            sh = exponential_shift(row, delta)
            shifts.append(rational_str(sh.shift))
            taus.append(list(sh.tau))
            positions = list(sh.sample_positions)
        stages.append(
            {
                "role": "exp-sample",
                "columns": positions,
                "delta": rational_str(delta),
                "shifts": shifts,
                "taus": taus,
            }
        )
    payload = {
        "type": "streamline-certificate",
        "matrix": witness_to_json(w),
        "stages": stages,
    }
    _emit(args, payload)
    return 0


def _cmd_dominate(args) -> int:
    instances = instances_from_json(_load(args.instances))
    res = domination_clique(instances, budget=_budget(args))
    _emit(args, domination_result_to_json(res, instances))
    return 0


def _cmd_pipeline(args) -> int:
    desc = description_from_json(_load(args.desc))
    res = semilinear_ramsey_extract(desc)
    payload = pipeline_result_to_json(res, desc)
    if args.emit_certificate and not args.out:
        args.out = args.emit_certificate
    _emit(args, payload)
    return 0


def _cmd_oracle(args) -> int:
    h = hypergraph_from_json(_load(args.hypergraph))
    omega, w1 = brute_omega(h, budget=_budget(args))
    alpha, w2 = brute_alpha(h, budget=_budget(args))
    payload = {
        "type": "oracle-result",
        "omega": {"size": omega, "witness": list(w1)},
        "alpha": {"size": alpha, "witness": list(w2)},
    }
    _emit(args, payload)
    return 0


# ---------------------------------------------------------------------------
# certificate re-verification (zero trust in the producer)


class _VerificationFailure(Exception):
    pass


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise _VerificationFailure(msg)


def _verify_stage_chain(matrix_rows, stages):
    """Walk the stage chain, re-checking every recorded claim; returns the
    absolute column list of the final stage."""
    n_cols = len(matrix_rows[0])
    perturbed = perturb_matrix(matrix_rows)
    cols = list(range(n_cols))
    rational_cols = None
    for st in stages:
        sel = st["columns"]
        _check(all(isinstance(c, int) for c in sel), "non-integer column index")
        _check(
            all(0 <= c < len(cols) for c in sel), f"{st['role']}: column out of range"
        )
        _check(
            all(a < b for a, b in zip(sel, sel[1:])),
            f"{st['role']}: columns not strictly increasing",
        )
        new_cols = [cols[c] for c in sel]
        if st["role"] == "monotone":
            for i, d in enumerate(st["directions"]):
                vals = [perturbed[i][c] for c in new_cols]
                got = is_strictly_monotone(vals)
                _check(got == d, f"monotone: row {i} is not {d}")
        elif st["role"] == "cupcap":
            for i, kind in enumerate(st["kinds"]):
                vals = [perturbed[i][c] for c in new_cols]
                ok = is_cup(vals) if kind == "cup" else is_cap(vals)
                _check(ok, f"cupcap: row {i} is not a {kind}")
            rational_cols = new_cols
        elif st["role"] == "exp-sample":
            delta = as_rational(st["delta"])
            for i, (sh, tau) in enumerate(zip(st["shifts"], st["taus"])):
                shift = as_rational(sh)
                vals = [matrix_rows[i][c] + shift for c in new_cols]
                _check(
                    is_delta_exponential(vals, delta, tuple(tau)),
                    f"exp-sample: row {i} violates the growth inequality",
                )
        elif st["role"] == "domination-clique":
            pass  # checked by the caller against rebuilt instances
        else:
            raise _VerificationFailure(f"unknown stage role {st['role']}")
        cols = new_cols
    return cols, rational_cols


def _verify_payload(obj: dict) -> None:
    kind = obj.get("type")
    if kind == "streamline-certificate":
        w = witness_from_json(obj["matrix"])
        _verify_stage_chain(w.entries, obj["stages"])
        return
    if kind == "domination-result":
        instances = instances_from_json(obj["instances"])
        vertices = obj["C"]
        _check(
            all(a < b for a, b in zip(vertices, vertices[1:])),
            "vertex set not increasing",
        )
        from itertools import combinations as _comb

        for inst, claimed in zip(instances, obj["colors"]):
            seen = None
            for t in _comb(vertices, inst.rows):
                c = domination_color(inst, t)
                _check(c is not None, f"uncolored tuple {t}")
                if seen is None:
                    seen = c
                _check(c == seen, f"inconsistent colors on {t}")
            if seen is not None and claimed is not None:
                _check(seen == claimed, "recorded color disagrees")
        return
    if kind == "pipeline-result":
        desc = description_from_json(obj["description"])
        witnesses, _ = decompose_primitive(desc)
        stacked = stack(witnesses)
        r = desc.uniformity
        final_cols, _ = _verify_stage_chain(stacked.entries, obj["stages"])
        vertices = obj["vertices"]
        _check(
            sorted(c + 1 for c in final_cols) == sorted(vertices),
            "vertices do not match the stage chain",
        )
        from itertools import combinations as _comb

        dom_stage = [s for s in obj["stages"] if s["role"] == "domination-clique"]
        exp_stage = [s for s in obj["stages"] if s["role"] == "exp-sample"]
        if exp_stage and dom_stage:
            # rebuild the integer instances from the recorded shifts and
            # re-color the final set
            from .domination import MINUS_INFINITY
            from .exactnum import floor_log, sign_of
            from .jsonio import threshold_to_json

            st = exp_stage[0]
            delta = as_rational(st["delta"])
            base = int(delta)
            shifts = [as_rational(s) for s in st["shifts"]]
            # absolute sampled columns: walk the chain again
            cols = list(range(stacked.cols))
            for s2 in obj["stages"]:
                cols = [cols[c] for c in s2["columns"]]
                if s2["role"] == "exp-sample":
                    sampled = cols
                    break
            k = stacked.rows // r
            for ell in range(k):
                rows = []
                for i in range(ell * r, (ell + 1) * r):
                    q = [stacked.entries[i][c] + shifts[i] for c in sampled]
                    _check(all(sign_of(v) != 0 for v in q), "zero sampled entry")
                    rows.append(tuple(floor_log(base, abs(v)) for v in q))
                ssum = sum(shifts[ell * r : (ell + 1) * r], Fraction(0))
                thr = MINUS_INFINITY if ssum == 0 else floor_log(base, abs(ssum)) - 2
                inst = DominationInstance(tuple(rows), thr)
                block = obj["blocks"][ell]
                _check(
                    [list(rw) for rw in rows] == block["L"],
                    f"block {ell}: log matrix mismatch",
                )
                _check(
                    threshold_to_json(thr) == block["h"],
                    f"block {ell}: threshold mismatch",
                )
                local = sorted(sampled.index(c) + 1 for c in final_cols)
                seen = None
                for t in _comb(local, inst.rows):
                    c = domination_color(inst, t)
                    _check(c is not None, f"block {ell}: uncolored tuple")
                    if seen is None:
                        seen = c
                    _check(c == seen, f"block {ell}: inconsistent colors")
        if not obj["vacuous"]:
            want = obj["kind"] == "clique"
            for t in _comb(sorted(vertices), r):
                _check(
                    desc.has_edge(t) == want,
                    f"final set is not a {obj['kind']} at {t}",
                )
        return
    raise _VerificationFailure(f"unknown certificate type {kind!r}")


def _cmd_verify(args) -> int:
    obj = _load(args.input)
    try:
        _verify_payload(obj)
    except _VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    _emit(args, {"type": "verify-result", "ok": True})
    return 0


# ---------------------------------------------------------------------------
# bench


def _cmd_bench(args) -> int:
    rows = []
    if args.kind == "pipeline":
        from .semilinear import LinearDescription, LinearFunction, SignTable

        header = "n,monotone,cupcap,sampled,clique,kind"
        for n in args.ns:
            points = tuple((Fraction(j),) for j in range(1, n + 1))
            f = LinearFunction(1, ((Fraction(1),), (Fraction(-2),), (Fraction(1),)), Fraction(0))
            phi = SignTable.from_function(1, lambda s: s[0] == -1)
            desc = LinearDescription(1, 3, points, (f,), phi)
            res = semilinear_ramsey_extract(desc)
            rows.append(
                f"{n},{res.widths['monotone']},{res.widths['cupcap']},"
                f"{res.widths['sampled']},{len(res.vertices)},{res.kind}"
            )
    elif args.kind == "growth":
        header = "scale,n,omega,alpha,clique_bound,independence_bound,proved_regime"
        params = GrowthParams(tuple(as_rational(s) for s in args.scales.split(",")))
        for n in args.ns:
            lazy = __import__(
                "slramsey.constructions", fromlist=["growth_hypergraph_lazy"]
            ).growth_hypergraph_lazy(params, n)
            om, _ = brute_omega(lazy, budget=_budget(args))
            al, _ = brute_alpha(lazy, budget=_budget(args))
            gb = growth_bounds(params, n)
            rows.append(
                f"{args.scales},{n},{om},{al},{rational_str(gb.clique_bound)},"
                f"{rational_str(gb.independence_bound)},{gb.proved_regime}"
            )
    elif args.kind == "domination":
        header = "seed,case,n,k,R,clique,below_threshold"
        rng = random.Random(args.seed)
        for i, n in enumerate(args.ns):
            k = rng.choice([1, 2])
            instances = []
            for _ in range(k):
                r = rng.choice([2, 3])
                mat = []
                for _row in range(r):
                    start = rng.randrange(-50, 50)
                    vals = [start]
                    for _ in range(n - 1):
                        vals.append(vals[-1] + rng.randrange(1, 5))
                    if rng.random() < 0.5:
                        vals = vals[::-1]
                    mat.append(tuple(vals))
                instances.append(DominationInstance(tuple(mat), rng.randrange(-60, 60)))
            res = domination_clique(instances, budget=_budget(args))
            total = sum(inst.rows for inst in instances)
            rows.append(
                f"{args.seed},{i},{n},{k},{total},{len(res.vertices)},"
                f"{res.below_threshold}"
            )
    else:
        raise ValueError(f"unknown bench kind {args.kind}")
    text = header + "\n" + "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slramsey")
    p.add_argument("--budget", type=int, default=None, help="work budget override")
    p.add_argument(
        "--format",
        choices=["json", "csv"],
        default=None,
        help="output format (json everywhere; csv is bench-only)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a named hypergraph family")
    c.add_argument("what", choices=["shift3", "growth", "stepup", "incidence"])
    c.add_argument("--n", type=int, default=8)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--scales", type=str, default="4")
    c.add_argument("--input", type=str, default=None)
    c.add_argument("--out", type=str, default=None)
    c.set_defaults(fn=_cmd_construct)

    d = sub.add_parser("decompose", help="split a description into primitive witnesses")
    d.add_argument("--input", required=True)
    d.add_argument("--out", default=None)
    d.set_defaults(fn=_cmd_decompose)

    s = sub.add_parser("streamline", help="extract structured submatrices")
    s.add_argument("--input", required=True)
    s.add_argument("--target-n", type=int, default=2, dest="target_n")
    s.add_argument("--delta", type=str, default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(fn=_cmd_streamline)

    m = sub.add_parser("dominate", help="common monochromatic clique")
    m.add_argument("--instances", required=True)
    m.add_argument("--out", default=None)
    m.set_defaults(fn=_cmd_dominate)

    pl = sub.add_parser("pipeline", help="end-to-end extraction from a description")
    pl.add_argument("--desc", required=True)
    pl.add_argument("--emit-certificate", default=None, dest="emit_certificate")
    pl.add_argument("--out", default=None)
    pl.set_defaults(fn=_cmd_pipeline)

    o = sub.add_parser("oracle", help="exact clique and independence numbers")
    o.add_argument("--hypergraph", required=True)
    o.add_argument("--out", default=None)
    o.set_defaults(fn=_cmd_oracle)

    v = sub.add_parser("verify", help="re-check an emitted certificate")
    v.add_argument("--input", required=True)
    v.add_argument("--out", default=None)
    v.set_defaults(fn=_cmd_verify)

    b = sub.add_parser("bench", help="sweep sizes and emit CSV")
    b.add_argument("--kind", choices=["pipeline", "growth", "domination"], required=True)
    b.add_argument("--ns", type=lambda s: [int(x) for x in s.split(",")], required=True)
    b.add_argument("--scales", type=str, default="4")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", default=None)
    b.set_defaults(fn=_cmd_bench)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format == "csv" and args.command != "bench":
            raise ValueError("csv output is only available for bench tables")
        if args.format == "json" and args.command == "bench":
            raise ValueError("bench emits csv tables")
        return args.fn(args)
    except InternalVerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 1
    except (InsufficientInputError, OracleBudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
