"""Domination hypergraphs of integer matrices and the recursive common
monochromatic clique finder.

An instance is a row-monotone integer matrix P (r x N) with an integer
threshold h (or minus infinity).  An increasing tuple (q_1..q_r) is colored 0
when every diagonal entry P(i, q_i) is at most h, and colored j when
P(j, q_j) is at least h+4 and exceeds every other diagonal entry by at least
2; other tuples stay uncolored.  Given k instances over a shared column set,
``domination_clique`` finds one vertex set that is a monochromatic clique in
every instance, of size about N**(1/(R-k+1)) where R is the total row count.

The recursion follows the constructive proof exactly: bad-column
elimination, single-row shortcuts, a crossing-point split for instances
mixing increasing and decreasing rows, catch-up-gap slicing (removing one
row), and an arithmetic-progression sample when no gap is wide.  At small
widths, where the asymptotic argument has no room, an exhaustive search
returns the best verified set instead, flagged ``below_threshold``.  The
returned set is always re-verified against the coloring definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .errors import InternalVerificationError, OracleBudgetError
from .hypergraph import ColoredHypergraph


class _MinusInfinity:
    """Explicit minus-infinity threshold (never a large negative number)."""

    _instance: "_MinusInfinity | None" = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()

EXHAUSTIVE_CUTOFF = 14


def _row_direction(row: Sequence[int]) -> str:
    if len(row) < 2:
        return "inc"
    if all(row[i] < row[i + 1] for i in range(len(row) - 1)):
        return "inc"
    if all(row[i] > row[i + 1] for i in range(len(row) - 1)):
        return "dec"
    raise ValueError("matrix row is not strictly monotone")


@dataclass(frozen=True)
class DominationInstance:
    """Row-monotone integer matrix plus threshold."""

    matrix: tuple[tuple[int, ...], ...]
    threshold: object  # int or MINUS_INFINITY

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", tuple(tuple(int(v) for v in row) for row in self.matrix)
        )
        if not self.matrix:
            raise ValueError("instance needs at least one row")
        width = len(self.matrix[0])
        for row in self.matrix:
            if len(row) != width:
                raise ValueError("ragged matrix")
            _row_direction(row)
        if not (self.threshold is MINUS_INFINITY or isinstance(self.threshold, int)):
            raise ValueError("threshold must be an int or MINUS_INFINITY")

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def n_columns(self) -> int:
        return len(self.matrix[0])

    def row_directions(self) -> tuple[str, ...]:
        return tuple(_row_direction(r) for r in self.matrix)


def _meets_floor(value: int, threshold) -> bool:
    # value >= h + 4, with h = -inf always satisfied
    if threshold is MINUS_INFINITY:
        return True
    return value >= threshold + 4


def _at_most_threshold(value: int, threshold) -> bool:
    if threshold is MINUS_INFINITY:
        return False
    return value <= threshold


def domination_color(inst: DominationInstance, tup: Sequence[int]) -> Optional[int]:
    """Color of an increasing tuple of 1-based vertices, or None.

    At most one color can apply: color 0 excludes every color j via the h+4
    floor, and the +2 gap makes the dominating row unique.  The r = 1
    convention falls out of the same rule (an empty max is minus infinity).
    """
    r = inst.rows
    t = tuple(tup)
    if len(t) != r:
        raise ValueError(f"tuple {t} does not have {r} entries")
    if any(t[i] >= t[i + 1] for i in range(r - 1)):
        raise ValueError(f"tuple {t} is not increasing")
    if any(not (1 <= v <= inst.n_columns) for v in t):
        raise ValueError(f"tuple {t} out of range")
    diag = [inst.matrix[i][t[i] - 1] for i in range(r)]
    if all(_at_most_threshold(d, inst.threshold) for d in diag):
        return 0
    for j in range(r):
        others = [d for i, d in enumerate(diag) if i != j]
        if _meets_floor(diag[j], inst.threshold) and (
            not others or diag[j] >= 2 + max(others)
        ):
            return j + 1
    return None


def domination_hypergraph(inst: DominationInstance) -> ColoredHypergraph:
    """Materialize the full edge coloring (desk-scale instances only)."""
    n, r = inst.n_columns, inst.rows
    coloring = {}
    for t in combinations(range(1, n + 1), r):
        c = domination_color(inst, t)
        if c is not None:
            coloring[t] = c
    return ColoredHypergraph(n, r, coloring)


# ---------------------------------------------------------------------------
# recursion internals


@dataclass(frozen=True)
class _Desc:
    """A surviving instance inside the recursion: original index plus the
    original row indices still in play (reads go through the full matrix)."""

    inst_idx: int
    rows: tuple[int, ...]


@dataclass
class DominationResult:
    vertices: tuple[int, ...]  # 1-based, sorted
    colors: tuple[Optional[int], ...]  # one per instance; None when vacuous
    trace: list = field(default_factory=list)
    below_threshold: bool = False
    verified: bool = True


def _ceil_root(a: int, e: int) -> int:
    """Smallest z with z**e >= a (positive integers)."""
    if a <= 1:
        return a
    lo, hi = 1, 1
    while hi**e < a:
        hi <<= 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**e >= a:
            hi = mid
        else:
            lo = mid
    return hi if lo**e < a else lo


def _gap_exceeds(gap: int, n: int, big: int, small: int) -> bool:
    """gap > n**(big/small) compared exactly via integer powers."""
    if gap <= 0:
        return False
    return gap**small > n**big


class _Solver:
    def __init__(self, instances: Sequence[DominationInstance], cutoff: int, budget: int):
        self.instances = list(instances)
        self.cutoff = cutoff
        self.budget = budget
        self.ops = 0
        self.directions = [inst.row_directions() for inst in self.instances]
        self.fallback_used = False

    def _tick(self, amount: int = 1):
        self.ops += amount
        if self.ops > self.budget:
            raise OracleBudgetError(f"domination budget exceeded ({self.budget})")

    def entry(self, desc: _Desc, row_pos: int, col: int) -> int:
        return self.instances[desc.inst_idx].matrix[desc.rows[row_pos]][col]

    def threshold(self, desc: _Desc):
        return self.instances[desc.inst_idx].threshold

    def desc_dirs(self, desc: _Desc) -> list[str]:
        dirs = self.directions[desc.inst_idx]
        return [dirs[r] for r in desc.rows]

    # -- reduced-instance coloring (used by the exhaustive fallback) --------

    def _reduced_color(self, desc: _Desc, cols: list[int], positions: tuple[int, ...]):
        diag = [self.entry(desc, i, cols[p]) for i, p in enumerate(positions)]
        h = self.threshold(desc)
        if all(_at_most_threshold(d, h) for d in diag):
            return 0
        for j in range(len(diag)):
            others = diag[:j] + diag[j + 1 :]
            if _meets_floor(diag[j], h) and (not others or diag[j] >= 2 + max(others)):
                return desc.rows[j] + 1  # original row index
        return None

    def _exhaustive(self, cols: list[int], descs: list[_Desc]):
        """Largest position set monochromatic in every reduced instance.

        DFS over positions in order; per instance the first full tuple pins
        the color and later tuples must match, so mismatches prune early.
        Returns (positions, colors by inst_idx) with the lexicographically
        least maximum witness.
        """
        self.fallback_used = True
        n = len(cols)
        best: tuple[int, ...] = ()
        best_colors: dict[int, Optional[int]] = {d.inst_idx: None for d in descs}

        def colors_ok(sel: tuple[int, ...], fixed: dict):
            # check tuples introduced by the last element only
            v = sel[-1]
            for d in descs:
                r = len(d.rows)
                if len(sel) < r:
                    continue
                for rest in combinations(sel[:-1], r - 1):
                    tup = tuple(sorted(rest + (v,)))
                    c = self._reduced_color(d, cols, tup)
                    self._tick()
                    if c is None:
                        return None
                    prev = fixed.get(d.inst_idx)
                    if prev is None:
                        fixed = dict(fixed)
                        fixed[d.inst_idx] = c
                    elif prev != c:
                        return None
            return fixed

        def dfs(sel: tuple[int, ...], fixed: dict, start: int):
            nonlocal best, best_colors
            self._tick()
            for v in range(start, n):
                if len(sel) + 1 + (n - v - 1) < len(best) + 1:
                    break
                new_fixed = colors_ok(sel + (v,), fixed)
                if new_fixed is None:
                    continue
                new_sel = sel + (v,)
                if len(new_sel) > len(best):
                    best = new_sel
                    best_colors = {d.inst_idx: new_fixed.get(d.inst_idx) for d in descs}
                dfs(new_sel, new_fixed, v + 1)

        dfs((), {d.inst_idx: None for d in descs}, 0)
        return [cols[p] for p in best], best_colors

    # -- main recursion, run as a loop (every step is a tail call that may
    # resolve one dropped instance's color) -----------------------------------

    def solve(self, cols: list[int], descs: list[_Desc], trace: list):
        resolved: dict[int, int] = {}

        def finish(sel, colors):
            colors.update(resolved)
            return sel, colors

        while True:
            self._tick()
            n = len(cols)
            if not descs:
                trace.append({"step": "no-instances", "kept": n})
                return finish(list(cols), {})

            if n <= self.cutoff:
                trace.append({"step": "exhaustive", "width": n})
                return finish(*self._exhaustive(cols, descs))

            # bad-column elimination: a column whose entries all miss the h+4
            # floor can never carry a dominating color for that instance
            advanced = False
            for idx, d in enumerate(descs):
                h = self.threshold(d)
                if h is MINUS_INFINITY:
                    continue
                bad = [
                    c
                    for c in cols
                    if all(
                        not _meets_floor(self.entry(d, i, c), h)
                        for i in range(len(d.rows))
                    )
                ]
                self._tick(len(cols))
                if not bad:
                    continue
                if 2 * len(bad) >= n:
                    # keep only the sub-threshold columns, then trim three per
                    # side: strictly monotone integer rows then sit at h or
                    # below, so the whole reduced instance is one color-0
                    # clique and drops out
                    kept = bad[3:-3]
                    trace.append(
                        {
                            "step": "bad-majority",
                            "instance": d.inst_idx,
                            "kept": len(kept),
                        }
                    )
                    if len(kept) <= 0:
                        trace.append({"step": "degenerate-exhaustive"})
                        return finish(*self._exhaustive(cols[: self.cutoff], descs))
                    resolved[d.inst_idx] = 0
                    cols = kept
                    descs = descs[:idx] + descs[idx + 1 :]
                else:
                    bad_set = set(bad)
                    cols = [c for c in cols if c not in bad_set]
                    trace.append(
                        {
                            "step": "bad-minority",
                            "instance": d.inst_idx,
                            "kept": len(cols),
                        }
                    )
                advanced = True
                break
            if advanced:
                continue

            # every column of every instance now reaches the h+4 floor
            # somewhere; single-row instances are all-color-1 and drop out
            for idx, d in enumerate(descs):
                if len(d.rows) == 1:
                    trace.append({"step": "single-row", "instance": d.inst_idx})
                    resolved[d.inst_idx] = d.rows[0] + 1
                    descs = descs[:idx] + descs[idx + 1 :]
                    advanced = True
                    break
            if advanced:
                continue

            # instances mixing increasing and decreasing rows: split at the
            # crossing of the two running maxima, drop the dominated side
            for idx, d in enumerate(descs):
                dirs = self.desc_dirs(d)
                inc = [i for i, dd in enumerate(dirs) if dd == "inc"]
                dec = [i for i, dd in enumerate(dirs) if dd == "dec"]
                if not inc or not dec:
                    continue
                q0 = n  # 1-based crossing position; n if they never cross
                for pos in range(n):
                    m_inc = max(self.entry(d, i, cols[pos]) for i in inc)
                    m_dec = max(self.entry(d, i, cols[pos]) for i in dec)
                    self._tick()
                    if m_inc > m_dec:
                        q0 = pos + 1
                        break
                if 2 * q0 > n:
                    new_cols = cols[: q0 - 2]
                    keep_rows = dec  # decreasing rows dominate before crossing
                    side = "low"
                else:
                    new_cols = cols[q0:]
                    keep_rows = inc
                    side = "high"
                trace.append(
                    {
                        "step": f"mixed-{side}",
                        "instance": d.inst_idx,
                        "crossing": q0,
                        "kept": len(new_cols),
                    }
                )
                if len(new_cols) < 1:
                    trace.append({"step": "degenerate-exhaustive"})
                    return finish(*self._exhaustive(cols[: self.cutoff], descs))
                reduced = _Desc(d.inst_idx, tuple(d.rows[i] for i in keep_rows))
                cols = new_cols
                descs = descs[:idx] + [reduced] + descs[idx + 1 :]
                advanced = True
                break
            if advanced:
                continue

            # all instances monotone in one direction: catch-up gaps
            R = sum(len(d.rows) for d in descs)
            k = len(descs)
            big, small = R - k, R - k + 1

            # case 1: an increasing instance where an earlier row catches the
            # last row only far behind -> wide slice, last row never dominates
            for idx, d in enumerate(descs):
                if self.desc_dirs(d)[0] != "inc":
                    continue
                r = len(d.rows)
                pointers = [0] * (r - 1)
                hit = None
                for q in range(1, n + 1):
                    target = self.entry(d, r - 1, cols[q - 1])
                    s_val = n  # 1-based; n means "never catches up"
                    wit = None
                    for i in range(r - 1):
                        p = pointers[i]
                        while p < n and self.entry(d, i, cols[p]) < target:
                            p += 1
                        pointers[i] = p
                        self._tick()
                        if p < n and p + 1 < s_val:
                            s_val = p + 1
                            wit = i
                    if wit is not None and _gap_exceeds(q - s_val, n, big, small):
                        hit = (q, s_val, wit)
                        break
                if hit is None:
                    continue
                q, s_val, wit = hit
                new_cols = cols[s_val + 1 : q]
                trace.append(
                    {
                        "step": "slice-last",
                        "instance": d.inst_idx,
                        "witness_row": d.rows[wit],
                        "kept": len(new_cols),
                    }
                )
                cols = new_cols
                descs = descs[:idx] + [_Desc(d.inst_idx, d.rows[:-1])] + descs[idx + 1 :]
                advanced = True
                break
            if advanced:
                continue

            # case 2: symmetric for decreasing instances (first row dominates)
            for idx, d in enumerate(descs):
                if self.desc_dirs(d)[0] != "dec":
                    continue
                r = len(d.rows)
                pointers = [n - 1] * (r - 1)
                hit = None
                for q in range(n, 0, -1):
                    target = self.entry(d, 0, cols[q - 1])
                    s_val = 1
                    wit = None
                    for i in range(1, r):
                        p = pointers[i - 1]
                        while p >= 0 and self.entry(d, i, cols[p]) < target:
                            p -= 1
                        pointers[i - 1] = p
                        self._tick()
                        if p >= 0 and p + 1 > s_val:
                            s_val = p + 1
                            wit = i
                    if wit is not None and _gap_exceeds(s_val - q, n, big, small):
                        hit = (q, s_val, wit)
                        break
                if hit is None:
                    continue
                q, s_val, wit = hit
                new_cols = cols[q - 1 : s_val - 2]
                trace.append(
                    {
                        "step": "slice-first",
                        "instance": d.inst_idx,
                        "witness_row": d.rows[wit],
                        "kept": len(new_cols),
                    }
                )
                cols = new_cols
                descs = descs[:idx] + [_Desc(d.inst_idx, d.rows[1:])] + descs[idx + 1 :]
                advanced = True
                break
            if advanced:
                continue

            # case 3: no wide gap anywhere; an arithmetic progression of
            # stride above the gap bound is monochromatic everywhere
            z = _ceil_root(n**big, small) + 2
            count = n // z
            positions = [i * z for i in range(2, count)]  # 1-based
            trace.append(
                {"step": "arith-sample", "stride": z, "kept": len(positions)}
            )
            if len(positions) < 1:
                trace.append({"step": "degenerate-exhaustive"})
                return finish(*self._exhaustive(cols[: self.cutoff], descs))
            sel = [cols[p - 1] for p in positions]
            colors = {}
            for d in descs:
                if self.desc_dirs(d)[0] == "inc":
                    colors[d.inst_idx] = d.rows[-1] + 1
                else:
                    colors[d.inst_idx] = d.rows[0] + 1
            return finish(sel, colors)


def domination_clique(
    instances: Sequence[DominationInstance],
    cutoff: int = EXHAUSTIVE_CUTOFF,
    budget: int = 50_000_000,
) -> DominationResult:
    """One vertex set, monochromatic in every instance, with trace.

    The output is re-verified unconditionally: every r-subset of the
    returned set is recolored through :func:`domination_color` and must give
    one consistent color per instance (vacuously for sets smaller than r).
    Widths too small for the recursion go through an exhaustive search and
    the result is flagged ``below_threshold``; the verified-output invariant
    holds either way.
    """
    if not instances:
        raise ValueError("need at least one instance")
    n = instances[0].n_columns
    for inst in instances:
        if inst.n_columns != n:
            raise ValueError("instances disagree on column count")
    solver = _Solver(instances, cutoff, budget)
    trace: list = []
    descs = [_Desc(i, tuple(range(inst.rows))) for i, inst in enumerate(instances)]
    sel, claimed = solver.solve(list(range(n)), descs, trace)
    sel = sorted(sel)
    vertices = tuple(c + 1 for c in sel)

    colors: list[Optional[int]] = []
    for i, inst in enumerate(instances):
        actual = _verify_monochromatic(inst, vertices)
        if actual == "mixed":
            # cannot happen if the recursion is right; fall back defensively
            trace.append({"step": "verification-fallback"})
            sub, fb_colors = solver._exhaustive(list(range(min(n, cutoff))), descs)
            vertices = tuple(c + 1 for c in sorted(sub))
            return DominationResult(
                vertices,
                tuple(
                    _coerce_color(_verify_monochromatic(inst2, vertices), fb_colors.get(i2))
                    for i2, inst2 in enumerate(instances)
                ),
                trace,
                below_threshold=True,
            )
        colors.append(_coerce_color(actual, claimed.get(i)))
    return DominationResult(
        vertices, tuple(colors), trace, below_threshold=solver.fallback_used
    )


def _verify_monochromatic(
    inst: DominationInstance, vertices: Sequence[int], tuple_budget: int = 500_000
):
    """Actual common color over all r-subsets: an int, None (vacuous, no
    r-subset), or 'mixed' on any uncolored or inconsistent tuple.

    Above ``tuple_budget`` subsets the only claim that can arise is color 0
    (instances dropped wholesale by the bad-column split), checked exactly
    through per-row column windows instead of tuple enumeration.
    """
    from math import comb

    r = inst.rows
    vs = sorted(vertices)
    m = len(vs)
    if comb(m, r) > tuple_budget:
        h = inst.threshold
        if h is MINUS_INFINITY:
            raise OracleBudgetError("verification budget exceeded for a non-0 claim")
        # row i can occupy exactly the columns vs[i .. m-r+i] (0-based);
        # every tuple is color 0 iff each window stays at or below h
        for i in range(r):
            for c in vs[i : m - r + i + 1]:
                if inst.matrix[i][c - 1] > h:
                    return "mixed"
        return 0
    color = None
    seen = False
    for t in combinations(vs, r):
        c = domination_color(inst, t)
        if c is None:
            return "mixed"
        if not seen:
            color, seen = c, True
        elif c != color:
            return "mixed"
    return color if seen else None


def _coerce_color(actual, claimed):
    if actual == "mixed":
        raise InternalVerificationError("unverified set escaped re-verification")
    return actual if actual is not None else claimed


def max_common_monochromatic(
    instances: Sequence[DominationInstance], budget: int = 50_000_000
) -> tuple[tuple[int, ...], tuple[Optional[int], ...]]:
    """Exhaustive maximum common monochromatic clique (small N oracle)."""
    solver = _Solver(instances, cutoff=0, budget=budget)
    descs = [_Desc(i, tuple(range(inst.rows))) for i, inst in enumerate(instances)]
    n = instances[0].n_columns
    sel, colors = solver._exhaustive(list(range(n)), descs)
    vertices = tuple(c + 1 for c in sorted(sel))
    return vertices, tuple(colors.get(i) for i in range(len(instances)))


def domination_sharpness_instance(
    k: int, r_list: Sequence[int], n: int
) -> tuple[list[DominationInstance], int]:
    """The row-increasing family showing the clique exponent is best possible.

    With R = sum(r_l) and N = n**(R-k+1), instance l has rows
    P_l(i, q) = q - n**(tau(l)+i) where tau(l) = -l + sum of earlier r_t,
    and threshold -N-4 (so color 0 never fires).  Any common monochromatic
    clique has size below R*n + 2R; that bound is returned alongside.
    """
    r_list = list(r_list)
    if len(r_list) != k:
        raise ValueError("need one row count per instance")
    if any(r < 2 for r in r_list):
        raise ValueError("row counts must be at least 2")
    R = sum(r_list)
    N = n ** (R - k + 1)
    if N > 2_000_000:
        raise ValueError(f"sharpness instance would have {N} columns; too large")
    instances = []
    for ell in range(1, k + 1):
        tau = -ell + sum(r_list[: ell - 1])
        rows = []
        for i in range(1, r_list[ell - 1] + 1):
            off = n ** (tau + i)
            rows.append(tuple(q - off for q in range(1, N + 1)))
        instances.append(DominationInstance(tuple(rows), -N - 4))
    return instances, R * n + 2 * R
