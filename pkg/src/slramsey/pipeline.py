"""End-to-end extraction: from a semi-linear description to a verified
clique or independent set of polylogarithmic size.

The chain: decompose into primitive witnesses, stack, perturb, select a
row-monotone column set, select a cup/cap column set, sample every z-th
column and shift each row by an endpoint so all rows become exactly
Delta-exponential (Delta = 2r), take entrywise floor logs to get integer
domination instances, find one set monochromatic in every instance, and map
it back through the column chain.  On that set every primitive part is
complete or empty, hence so is every Boolean combination of them, including
the input hypergraph; the final set is re-verified edge by edge against the
original description.

Width guarantees are asymptotic, so the cup/cap stage runs the verified
best-effort search; every stage that cannot proceed raises a staged
``InsufficientInputError`` naming itself, never returning an unsound result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .domination import (
    MINUS_INFINITY,
    DominationInstance,
    DominationResult,
    domination_clique,
)
from .errors import InsufficientInputError, InternalVerificationError
from .exactnum import floor_log, perturb_matrix, rational_str, sign_of
from .semilinear import LinearDescription, WitnessMatrix, decompose_primitive, stack
from .streamline import (
    cupcap_submatrix_greedy,
    exponential_shift,
    row_monotone_submatrix,
)


@dataclass
class BlockData:
    """Per-primitive-part data backing the extraction certificate."""

    shift_sum: Fraction
    threshold: object  # int or MINUS_INFINITY
    log_rows: tuple[tuple[int, ...], ...]
    row_signs: tuple[int, ...]
    color: Optional[int]
    is_complete: Optional[bool]  # membership of this part on the final set


@dataclass
class PipelineResult:
    kind: str  # 'clique' or 'independent'
    vertices: tuple[int, ...]  # 1-based original vertex indices
    vacuous: bool
    widths: dict
    blocks: list[BlockData]
    stages: list[dict]
    domination: DominationResult
    shifts: tuple[Fraction, ...] = field(default=())


def _staged(stage: str, msg: str) -> InsufficientInputError:
    return InsufficientInputError(f"[{stage}] {msg}", stage=stage)


@dataclass
class _CoreResult:
    stages: list[dict]
    widths: dict
    sampled_stack_cols: list[int]  # absolute 0-based columns of the stack
    blocks: list[BlockData]
    domination: DominationResult
    selected_cols: list[int]  # absolute 0-based columns of the final set
    shifts: tuple[Fraction, ...]


def _extract_core(stacked: WitnessMatrix, r: int, delta: Fraction) -> _CoreResult:
    """Shared streamline + domination core over a stacked witness matrix."""
    n_rows = stacked.rows
    n_cols = stacked.cols
    if n_rows % r != 0:
        raise ValueError("stack height is not a multiple of the uniformity")
    k = n_rows // r
    widths = {"input": n_cols}
    stages: list[dict] = []

    perturbed = perturb_matrix(stacked.entries)

    mono = row_monotone_submatrix(perturbed)
    mono_cols = list(mono.columns)
    widths["monotone"] = len(mono_cols)
    stages.append(
        {
            "role": "monotone",
            "columns": list(mono.columns),
            "directions": list(mono.directions),
        }
    )
    if len(mono_cols) < 2:
        raise _staged("row-monotone", f"width {len(mono_cols)} after extraction")

    pert_mono = [[row[c] for c in mono_cols] for row in perturbed]
    cupcap = cupcap_submatrix_greedy(pert_mono)
    widths["cupcap"] = len(cupcap.columns)
    stages.append(
        {
            "role": "cupcap",
            "columns": list(cupcap.columns),
            "kinds": list(cupcap.kinds),
        }
    )

    # back to exact rationals: the selected columns of the original stack
    cupcap_stack_cols = [mono_cols[c] for c in cupcap.columns]
    rational_rows = [
        [stacked.entries[i][c] for c in cupcap_stack_cols] for i in range(n_rows)
    ]
    shifts: list[Fraction] = []
    taus = []
    sample_positions: Optional[tuple[int, ...]] = None
    for i, row in enumerate(rational_rows):
        if any(row[j] == row[j + 1] for j in range(len(row) - 1)) or not (
            all(row[j] < row[j + 1] for j in range(len(row) - 1))
            or all(row[j] > row[j + 1] for j in range(len(row) - 1))
        ):
            raise _staged(
                "exponential-sample",
                f"stack row {i} has repeated values on the selected columns",
            )
        try:
            sh = exponential_shift(row, delta)
        except (ValueError, InsufficientInputError) as exc:
            raise _staged("exponential-sample", f"stack row {i}: {exc}") from exc
        if sample_positions is None:
            sample_positions = sh.sample_positions
        elif sh.sample_positions != sample_positions:
            raise InternalVerificationError("sample stride varies across rows")
        shifts.append(sh.shift)
        taus.append(sh.tau)
    assert sample_positions is not None
    n1 = len(sample_positions)
    widths["sampled"] = n1
    stages.append(
        {
            "role": "exp-sample",
            "columns": list(sample_positions),
            "delta": rational_str(delta),
            "shifts": [rational_str(s) for s in shifts],
            "taus": [list(t) for t in taus],
        }
    )

    sampled_stack_cols = [cupcap_stack_cols[p] for p in sample_positions]

    # per block: shifted rows, entrywise floor logs, thresholds
    base = int(delta)
    if base != delta:
        raise ValueError("delta must be an integer for the log stage")
    blocks: list[BlockData] = []
    instances: list[DominationInstance] = []
    for ell in range(k):
        rows_idx = range(ell * r, (ell + 1) * r)
        q_rows = []
        for i in rows_idx:
            q_rows.append(
                [stacked.entries[i][c] + shifts[i] for c in sampled_stack_cols]
            )
        log_rows = []
        row_signs = []
        for row in q_rows:
            signs = {sign_of(v) for v in row}
            if len(signs) != 1 or 0 in signs:
                raise InternalVerificationError("sampled row changes sign")
            row_signs.append(signs.pop())
            log_rows.append(tuple(floor_log(base, abs(v)) for v in row))
        shift_sum = sum((shifts[i] for i in rows_idx), Fraction(0))
        threshold = (
            MINUS_INFINITY
            if shift_sum == 0
            else floor_log(base, abs(shift_sum)) - 2
        )
        blocks.append(
            BlockData(
                shift_sum=shift_sum,
                threshold=threshold,
                log_rows=tuple(log_rows),
                row_signs=tuple(row_signs),
                color=None,
                is_complete=None,
            )
        )
        instances.append(DominationInstance(tuple(log_rows), threshold))

    dom = domination_clique(instances)
    widths["clique"] = len(dom.vertices)
    stages.append(
        {
            "role": "domination-clique",
            "columns": [v - 1 for v in dom.vertices],
            "colors": [c for c in dom.colors],
            "below_threshold": dom.below_threshold,
        }
    )
    for ell in range(k):
        blocks[ell].color = dom.colors[ell]

    selected_cols = [sampled_stack_cols[v - 1] for v in dom.vertices]

    # membership of each primitive part on the final set must be constant
    for ell in range(k):
        rows_idx = list(range(ell * r, (ell + 1) * r))
        values = set()
        for t in combinations(selected_cols, r):
            total = Fraction(0)
            for i, c in zip(rows_idx, t):
                total += stacked.entries[i][c]
            values.add(total < 0)
        if len(values) > 1:
            raise InternalVerificationError(
                "a primitive part is neither complete nor empty on the result"
            )
        blocks[ell].is_complete = values.pop() if values else None

    return _CoreResult(
        stages=stages,
        widths=widths,
        sampled_stack_cols=sampled_stack_cols,
        blocks=blocks,
        domination=dom,
        selected_cols=selected_cols,
        shifts=tuple(shifts),
    )


def semilinear_ramsey_extract(desc: LinearDescription) -> PipelineResult:
    """Verified clique or independent set in the hypergraph a description
    realizes, of size growing with log N.

    Executes the full chain and then decides clique versus independent by
    evaluating the description on one r-subset of the result, asserting all
    other subsets agree, and re-verifying every subset.  Sets smaller than
    the uniformity are vacuous (flagged) and verify trivially.
    """
    r = desc.uniformity
    witnesses, _combiner = decompose_primitive(desc)
    stacked = stack(witnesses)
    delta = Fraction(2 * r)
    core = _extract_core(stacked, r, delta)

    vertices = tuple(c + 1 for c in core.selected_cols)
    if len(vertices) >= r:
        memberships = {desc.has_edge(t) for t in combinations(vertices, r)}
        if len(memberships) != 1:
            raise InternalVerificationError(
                "final set is neither a clique nor an independent set"
            )
        kind = "clique" if memberships.pop() else "independent"
        vacuous = False
    else:
        kind = "clique"
        vacuous = True
    return PipelineResult(
        kind=kind,
        vertices=vertices,
        vacuous=vacuous,
        widths=core.widths,
        blocks=core.blocks,
        stages=core.stages,
        domination=core.domination,
        shifts=core.shifts,
    )


@dataclass
class MulticolorResult:
    color_index: int  # 0-based index of the winning description
    vertices: tuple[int, ...]
    widths: dict
    stages: list[dict]
    blocks: list[BlockData]
    domination: DominationResult


def multicolor_extract(
    descs: Sequence[LinearDescription], coverage_check_limit: int = 200_000
) -> MulticolorResult:
    """A clique monochromatic in one color class of a covering family.

    All descriptions share the point sequence and uniformity, and together
    their realizations must cover every r-tuple (checked exhaustively up to
    ``coverage_check_limit`` tuples, on a prefix of the vertices beyond it).
    All primitive parts of all descriptions go through one shared extraction;
    on the resulting set each class is complete or empty, and coverage forces
    at least one complete class.
    """
    if not descs:
        raise ValueError("need at least one description")
    n = descs[0].n_points
    r = descs[0].uniformity
    for d in descs:
        if d.n_points != n or d.uniformity != r:
            raise ValueError("descriptions disagree on points or uniformity")
        if d.points != descs[0].points:
            raise ValueError("descriptions must share the point sequence")

    check_n = n
    while comb(check_n, r) > coverage_check_limit:
        check_n -= 1
    for t in combinations(range(1, check_n + 1), r):
        if not any(d.has_edge(t) for d in descs):
            raise ValueError(f"tuple {t} is covered by no description")

    all_witnesses = []
    for d in descs:
        ws, _ = decompose_primitive(d)
        all_witnesses.extend(ws)
    stacked = stack(all_witnesses)
    core = _extract_core(stacked, r, Fraction(2 * r))
    vertices = tuple(c + 1 for c in core.selected_cols)
    if len(vertices) < r:
        raise _staged(
            "domination",
            f"final set of size {len(vertices)} has no {r}-subsets to color",
        )
    winner = None
    for idx, d in enumerate(descs):
        memberships = {d.has_edge(t) for t in combinations(vertices, r)}
        if len(memberships) != 1:
            raise InternalVerificationError(
                "a color class is neither complete nor empty on the result"
            )
        if memberships.pop() and winner is None:
            winner = idx
    if winner is None:
        raise InternalVerificationError(
            "coverage violated on the final set despite the coverage check"
        )
    return MulticolorResult(
        color_index=winner,
        vertices=vertices,
        widths=core.widths,
        stages=core.stages,
        blocks=core.blocks,
        domination=core.domination,
    )
