"""Structured submatrix extraction by column selection.

Three extraction layers, each with an exhaustive re-verifier:

* row-monotone: keep columns so every row becomes strictly monotone
  (iterated longest-monotone-subsequence, each pass keeps at least the
  square root of the columns);
* cupcap: keep columns so every row becomes a cup (x_i + x_l >= 2 x_j for
  all i < j < l) or a cap (<=), via a midpoint-halving recursion for one row
  and a dyadic-level-set recursion for several rows;
* exponential sampling: a cup or cap, sampled at every z-th column and
  shifted by one endpoint, grows or decays by a factor above Delta at every
  step, with one of four sign/direction types.

Everything is exact: entries may be ints, Fractions, or PerturbedValues
(only comparisons, addition/subtraction and scaling by integers are used,
never division by an entry).  Rows may be lazily evaluated sequences; the
multi-row recursion touches O(polylog) entries of a huge matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import InsufficientInputError, InternalVerificationError
from .exactnum import as_rational, floor_log

# ---------------------------------------------------------------------------
# definition checkers (independent oracles: literal exhaustive triple checks)


def is_cup(values: Sequence) -> bool:
    """x_i + x_l >= 2 x_j for every i < j < l (checked on all triples)."""
    n = len(values)
    for i, j, l in combinations(range(n), 3):
        if not values[i] + values[l] >= 2 * values[j]:
            return False
    return True


def is_cap(values: Sequence) -> bool:
    """x_i + x_l <= 2 x_j for every i < j < l (checked on all triples)."""
    n = len(values)
    for i, j, l in combinations(range(n), 3):
        if not values[i] + values[l] <= 2 * values[j]:
            return False
    return True


def is_strictly_monotone(values: Sequence) -> Optional[str]:
    """'inc', 'dec', or None.  Width <= 1 counts as 'inc'."""
    n = len(values)
    if n <= 1:
        return "inc"
    if all(values[i] < values[i + 1] for i in range(n - 1)):
        return "inc"
    if all(values[i] > values[i + 1] for i in range(n - 1)):
        return "dec"
    return None


EXPONENTIAL_TYPES = (("+", "up"), ("+", "down"), ("-", "up"), ("-", "down"))


def is_delta_exponential(values: Sequence, delta, tau: tuple[str, str]) -> bool:
    """Check the exact growth inequality of the given sign/direction type.

    ('+','up'):   0 < Delta*x_i < x_{i+1}
    ('+','down'): 0 < Delta*x_{i+1} < x_i
    ('-','up'):   0 < Delta*(-x_i) < -x_{i+1}
    ('-','down'): 0 < Delta*(-x_{i+1}) < -x_i
    """
    delta = as_rational(delta) if isinstance(delta, (int, str)) else delta
    sgn, direction = tau
    if sgn not in ("+", "-") or direction not in ("up", "down"):
        raise ValueError(f"bad exponential type {tau}")
    vals = list(values)
    if sgn == "-":
        vals = [-v for v in vals]
    if direction == "down":
        vals = vals[::-1]
    # now require 0 < delta * v_i < v_{i+1}
    for a, b in zip(vals, vals[1:]):
        scaled = delta * a
        if not (0 < scaled and scaled < b):
            return False
    return len(vals) >= 1 and vals[0] > 0


# ---------------------------------------------------------------------------
# monotone subsequences


def _ensure_distinct(values: Sequence):
    order = sorted(range(len(values)), key=lambda i: values[i])
    for a, b in zip(order, order[1:]):
        if values[a] == values[b]:
            raise ValueError("sequence entries must be pairwise distinct")


def monotone_subsequence(values: Sequence, k: int, l: int) -> tuple[str, tuple[int, ...]]:
    """Increasing subsequence of length k+1, or decreasing of length l+1.

    Any sequence of k*l+1 distinct values contains one of the two; this
    returns ('inc', indices) or ('dec', indices), 0-based positions.  When an
    increasing outcome exists it is preferred, and among those the
    lexicographically least index tuple is returned.
    """
    n = len(values)
    if k < 0 or l < 0:
        raise ValueError("need k, l >= 0")
    if n < k * l + 1:
        raise InsufficientInputError(
            f"sequence of length {n} is shorter than k*l+1 = {k * l + 1}",
            stage="monotone-subsequence",
        )
    _ensure_distinct(values)

    def pick(target_len: int, greater: bool) -> Optional[tuple[int, ...]]:
        # longest run starting at i, then greedy lexicographically least
        run = [1] * n
        for i in range(n - 1, -1, -1):
            for j in range(i + 1, n):
                ok = values[j] > values[i] if greater else values[j] < values[i]
                if ok and run[j] + 1 > run[i]:
                    run[i] = run[j] + 1
        if max(run, default=0) < target_len:
            return None
        out = []
        prev: Optional[int] = None
        pos = 0
        for need in range(target_len, 0, -1):
            for i in range(pos, n):
                ok = prev is None or (
                    values[i] > values[prev] if greater else values[i] < values[prev]
                )
                if ok and run[i] >= need:
                    out.append(i)
                    prev = i
                    pos = i + 1
                    break
        return tuple(out)

    inc = pick(k + 1, greater=True)
    if inc is not None:
        return "inc", inc
    dec = pick(l + 1, greater=False)
    if dec is None:
        raise InternalVerificationError(
            "no monotone outcome found despite the length guarantee"
        )
    return "dec", dec


def _length_ending_at(seq: Sequence, less) -> list[int]:
    """Patience lengths: L[j] = longest strictly ``less``-increasing
    subsequence ending at position j."""
    tails: list = []
    out = []
    for v in seq:
        lo, hi = 0, len(tails)
        while lo < hi:
            mid = (lo + hi) // 2
            if less(tails[mid], v):
                lo = mid + 1
            else:
                hi = mid
        if lo == len(tails):
            tails.append(v)
        else:
            tails[lo] = v
        out.append(lo + 1)
    return out


def _longest_monotone(values: Sequence, greater: bool) -> list[int]:
    """Lexicographically least longest strictly monotone subsequence.

    O(n log n) patience pass on the reversed sequence gives, for each i, the
    longest run starting at i; a forward greedy then picks the least index
    admissible at every step.
    """
    n = len(values)
    if n == 0:
        return []
    rev = list(values)[::-1]
    if greater:
        lengths = _length_ending_at(rev, lambda a, b: a > b)
        ok = lambda prev, cur: prev < cur
    else:
        lengths = _length_ending_at(rev, lambda a, b: a < b)
        ok = lambda prev, cur: prev > cur
    run_from = [lengths[n - 1 - i] for i in range(n)]
    longest = max(run_from)
    out: list[int] = []
    prev_val = None
    i = 0
    for need in range(longest, 0, -1):
        while not (
            run_from[i] >= need and (prev_val is None or ok(prev_val, values[i]))
        ):
            i += 1
            if i >= n:
                raise InternalVerificationError("monotone reconstruction ran off")
        out.append(i)
        prev_val = values[i]
        i += 1
    return out


@dataclass(frozen=True)
class RowMonotoneStage:
    """Columns (0-based, relative to the input) plus per-row directions."""

    columns: tuple[int, ...]
    directions: tuple[str, ...]


def row_monotone_submatrix(matrix: Sequence[Sequence]) -> RowMonotoneStage:
    """Select columns making every row strictly monotone.

    One longest-monotone pass per row, each keeping at least the ceiling of
    the square root of the surviving columns, so the final width is at least
    ceil(N**(1/2**q)).  Rows must be repetition-free (perturb upstream when
    needed); a matrix with fewer than two columns is returned unchanged.
    """
    q = len(matrix)
    if q == 0:
        return RowMonotoneStage((), ())
    n = len(matrix[0])
    cols = list(range(n))
    dirs = []
    if n < 2:
        return RowMonotoneStage(tuple(cols), tuple(["inc"] * q))
    for row in matrix:
        vals = [row[c] for c in cols]
        inc = _longest_monotone(vals, greater=True)
        dec = _longest_monotone(vals, greater=False)
        if len(inc) >= len(dec):
            chosen, d = inc, "inc"
        else:
            chosen, d = dec, "dec"
        cols = [cols[i] for i in chosen]
        dirs.append(d)
    width = len(cols)
    if width < _ceil_root_pow2(n, q):
        raise InternalVerificationError(
            f"row-monotone width {width} below guaranteed {_ceil_root_pow2(n, q)}"
        )
    return RowMonotoneStage(tuple(cols), tuple(dirs))


def _ceil_root_pow2(n: int, q: int) -> int:
    """ceil(n ** (1 / 2**q)) for positive integers, by exact power checks."""
    if n <= 1:
        return n
    e = 1 << q
    r = 1
    while r**e < n:
        r += 1
    return r


def monotone_sharpness_matrix(q: int, n: int) -> list[list[int]]:
    """The q x n**(2**q) integer matrix with no wide row-monotone submatrix.

    Columns are sum((2n)**(Q-l) * a_j(l) * v_l) over l in [Q], Q = 2**q, with
    v_1..v_Q the sign vectors {-1,1}**q in lexicographic order and a_j
    running over [n]**Q lexicographically.  The sign vector of any column
    difference equals some v_l, which caps row-monotone width at n.
    """
    if q < 1 or n < 2:
        raise ValueError("need q >= 1 and n >= 2")
    Q = 1 << q
    n_cols = n**Q
    if n_cols * q > 5_000_000:
        raise ValueError(f"sharpness matrix would have {n_cols} columns; too large")
    vs = list(product((-1, 1), repeat=q))
    rows = [[0] * n_cols for _ in range(q)]
    for j, a in enumerate(product(range(1, n + 1), repeat=Q)):
        for l in range(Q):
            w = (2 * n) ** (Q - 1 - l) * a[l]
            v = vs[l]
            for i in range(q):
                rows[i][j] += w * v[i]
    return rows


# ---------------------------------------------------------------------------
# cups and caps


def _split_window(get, lo: int, hi: int) -> tuple[int, int]:
    """For strictly increasing get on [lo, hi): return (ju, jl) where the
    upper half is [ju, hi) (values >= midpoint) and the lower half is
    [lo, jl) (values <= midpoint).  Compares 2*v against first+last, so no
    division is needed.  The clamps keep both halves strictly smaller than
    the window even on inputs that violate monotonicity, so callers always
    terminate (their outputs are verified separately)."""
    mid2 = get(lo) + get(hi - 1)
    a, b = lo, hi
    while a < b:  # first position with 2*v >= mid2
        m = (a + b) // 2
        if 2 * get(m) >= mid2:
            b = m
        else:
            a = m + 1
    ju = max(a, lo + 1)
    a, b = lo, hi
    while a < b:  # first position with 2*v > mid2
        m = (a + b) // 2
        if 2 * get(m) > mid2:
            b = m
        else:
            a = m + 1
    jl = min(a, hi - 1)
    return ju, jl


def cup_or_cap(values: Sequence, s: int, t: int) -> tuple[str, tuple[int, ...]]:
    """A cap of length s or a cup of length t from a strictly increasing
    sequence of length at least 2**(s+t).

    Midpoint-halving recursion: entries at or above (x_1+x_N)/2 pairwise
    extend x_1 to a cap, entries at or below pairwise extend x_N to a cup;
    one half always retains enough entries for the reduced target.  Returns
    ('cap', positions) with exactly s positions or ('cup', positions) with
    exactly t, and re-verifies the outcome by exhaustive triple checks.
    """
    n = len(values)
    if s < 0 or t < 0:
        raise ValueError("need s, t >= 0")
    if n < (1 << (s + t)):
        raise InsufficientInputError(
            f"sequence of length {n} is shorter than 2**(s+t) = {1 << (s + t)}",
            stage="cup-or-cap",
        )
    if n <= 100_000:
        for i in range(n - 1):
            if not values[i] < values[i + 1]:
                raise ValueError("sequence must be strictly increasing")

    def get(i):
        return values[i]

    kind, pos = _cup_cap_budgeted(get, 0, n, s, t)
    got = [values[p] for p in pos]
    ok = is_cap(got) if kind == "cap" else is_cup(got)
    want = s if kind == "cap" else t
    if not ok or len(pos) != want:
        raise InternalVerificationError("cup/cap extraction failed verification")
    return kind, tuple(pos)


def _cup_cap_budgeted(get, lo: int, hi: int, s: int, t: int) -> tuple[str, list[int]]:
    # invariant: hi - lo >= 2**(s+t)
    if s <= 2:
        return "cap", list(range(lo, lo + s))
    if t <= 2:
        return "cup", list(range(lo, lo + t))
    ju, jl = _split_window(get, lo, hi)
    if hi - ju >= 1 << (s - 1 + t):
        kind, sub = _cup_cap_budgeted(get, ju, hi, s - 1, t)
        if kind == "cap":
            return "cap", [lo] + sub
        return "cup", sub
    if jl - lo < 1 << (s + t - 1):
        raise InternalVerificationError("midpoint split lost too many entries")
    kind, sub = _cup_cap_budgeted(get, lo, jl, s, t - 1)
    if kind == "cup":
        return "cup", sub + [hi - 1]
    return "cap", sub


def best_cap_and_cup(get, lo: int, hi: int) -> tuple[list[int], list[int]]:
    """Largest cap and cup the midpoint recursion finds in an increasing
    window, exploring both halves.  Dominates the budgeted guarantee: for
    every (s, t) with window length >= 2**(s+t), the cap has length >= s or
    the cup has length >= t.  Iterative (explicit stack) so deep unbalanced
    splits cannot overflow the interpreter stack."""
    results: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
    stack: list[tuple[int, int, bool]] = [(lo, hi, False)]
    while stack:
        a, b, expanded = stack.pop()
        if b - a <= 2:
            results[(a, b)] = (list(range(a, b)), list(range(a, b)))
            continue
        ju, jl = _split_window(get, a, b)
        if not expanded:
            stack.append((a, b, True))
            stack.append((ju, b, False))
            stack.append((a, jl, False))
        else:
            cap_u, cup_u = results.pop((ju, b))
            cap_l, cup_l = results.pop((a, jl))
            cap1 = [a] + cap_u
            cap = cap1 if len(cap1) >= len(cap_l) else cap_l
            cup1 = cup_l + [b - 1]
            cup = cup1 if len(cup1) >= len(cup_u) else cup_u
            results[(a, b)] = (cap, cup)
    return results[(lo, hi)]


# ---------------------------------------------------------------------------
# cupcap submatrices

_REQUIRED_CACHE: dict[tuple[int, int, int], int] = {}


def required_width(q: int, s: int, t: int) -> int:
    """Columns the q-row cap/cup recursion needs for targets (s, t).

    required(1, s, t) = 2**(s+t); for q >= 2 and s, t >= 3,
    required = 4q * required(q, s-1, t) * required(q-1, t, t) + 1, with the
    trivial bases s <= 2 or t <= 2 needing only s or t columns.  Always at
    most 2**((q+1) * s * t**(q-1)).
    """
    if s <= 2:
        return max(s, 0)
    if t <= 2:
        return max(t, 0)
    key = (q, s, t)
    got = _REQUIRED_CACHE.get(key)
    if got is not None:
        return got
    if q == 1:
        val = 1 << (s + t)
    else:
        val = 4 * q * required_width(q, s - 1, t) * required_width(q - 1, t, t) + 1
    _REQUIRED_CACHE[key] = val
    return val


@dataclass(frozen=True)
class CupcapStage:
    """Columns (0-based, relative to the input) plus per-row cup/cap kinds."""

    columns: tuple[int, ...]
    kinds: tuple[str, ...]


def _dyadic_levels(get, cols) -> list[tuple[int, int]]:
    """Partition window positions 1..W-1 into dyadic level intervals.

    Position p has level k iff 2**-k < (v(p)-v(0))/(v(W-1)-v(0)) <= 2**-(k+1)
    ... i.e. the unique k >= 1 with 2**k * (v(p)-v(0)) > v(W-1)-v(0) minimal.
    Returns nonempty (pos_lo, pos_hi) intervals in increasing level order
    (right to left), computed with O(levels * log W) entry probes.
    """
    W = len(cols)
    v0 = get(cols[0])
    D = get(cols[W - 1]) - v0
    out: list[tuple[int, int]] = []
    hi = W - 1
    while hi >= 1:
        rel = get(cols[hi]) - v0
        if not rel > 0:
            raise ValueError("row is not strictly increasing on the window")
        k = 1
        while not (1 << k) * rel > D:
            k <<= 1
        lo_k = k >> 1
        while lo_k + 1 < k:  # smallest k with 2**k * rel > D
            mid = (lo_k + k) >> 1
            if (1 << mid) * rel > D:
                k = mid
            else:
                lo_k = mid
        if not (1 << k) * rel > D:
            raise InternalVerificationError("level search failed")
        a, b = 1, hi
        while a < b:  # leftmost position in this level
            mid = (a + b) // 2
            if (1 << k) * (get(cols[mid]) - v0) > D:
                b = mid
            else:
                a = mid + 1
        out.append((a, hi))
        hi = a - 1
    return out


def _cupcap_rec(val, rows: tuple[int, ...], cols, s: int, t: int):
    """Returns (outcome, columns, {row: 'cup'|'cap'}) for normalized-increasing
    rows; outcome 'all_cap' has s columns, 'has_cup' has t."""
    W = len(cols)
    if s <= 2:
        return "all_cap", [cols[i] for i in range(s)], {r: "cap" for r in rows}
    if t <= 2:
        return "has_cup", [cols[i] for i in range(t)], {r: "cup" for r in rows}
    if len(rows) == 1:
        r0 = rows[0]
        kind, pos = _cup_cap_budgeted(lambda i: val(r0, cols[i]), 0, W, s, t)
        outcome = "all_cap" if kind == "cap" else "has_cup"
        return outcome, [cols[p] for p in pos], {r0: kind}

    level_lists = {r: _dyadic_levels(lambda c, _r=r: val(_r, c), cols) for r in rows}

    # many nonempty levels on some row: sample every other level, that row
    # becomes a cup, recurse on the remaining rows
    need_sub = required_width(len(rows) - 1, t, t)
    for r in rows:
        levels = level_lists[r]
        if len(levels) >= 2 * need_sub:
            n0 = len(levels) // 2
            picked = sorted(levels[2 * k - 1][0] for k in range(1, n0 + 1))
            sub_cols = [cols[p] for p in picked]
            other = tuple(x for x in rows if x != r)
            _, cols2, kinds2 = _cupcap_rec(val, other, sub_cols, t, t)
            kinds2[r] = "cup"
            return "has_cup", cols2, kinds2

    # few levels everywhere: find a run of positions crossing no level
    # boundary on any row; with the first column it extends any cap
    cut_set = set()
    for r in rows:
        for pos_lo, _pos_hi in level_lists[r]:
            if pos_lo > 1:
                cut_set.add(pos_lo)
    bounds = [1] + sorted(cut_set) + [W]
    best_len, best_lo = 0, 1
    for a, b in zip(bounds, bounds[1:]):
        if b - a > best_len:
            best_len, best_lo = b - a, a
    need_here = required_width(len(rows), s - 1, t)
    if best_len < need_here:
        raise InternalVerificationError(
            "level counting bound violated in cupcap recursion"
        )
    sub_cols = cols[best_lo : best_lo + best_len]
    outcome, cols2, kinds2 = _cupcap_rec(val, rows, sub_cols, s - 1, t)
    if outcome == "has_cup":
        return outcome, cols2, kinds2
    return "all_cap", [cols[0]] + cols2, {r: "cap" for r in rows}


def _row_directions(matrix, validate_limit: int = 100_000) -> list[str]:
    """Per-row direction flags; rows short enough are fully validated as
    strictly monotone (huge lazy rows are trusted, outputs verify anyway)."""
    dirs = []
    for idx, row in enumerate(matrix):
        n = len(row)
        if n < 2 or row[0] < row[n - 1]:
            dirs.append("inc")
        else:
            dirs.append("dec")
        if 2 <= n <= validate_limit:
            inc = dirs[-1] == "inc"
            for j in range(n - 1):
                ok = row[j] < row[j + 1] if inc else row[j] > row[j + 1]
                if not ok:
                    raise ValueError(f"row {idx} is not strictly monotone")
    return dirs


def _verify_cupcap(matrix, columns, kinds):
    for row, kind in zip(matrix, kinds):
        got = [row[c] for c in columns]
        ok = is_cup(got) if kind == "cup" else is_cap(got)
        if not ok:
            raise InternalVerificationError(
                f"selected columns do not form a {kind} on some row"
            )


def cupcap_submatrix(matrix: Sequence[Sequence], n: int) -> CupcapStage:
    """Guaranteed q x n cupcap submatrix of a row-monotone matrix.

    Requires width at least required_width(q, n, n), which never exceeds
    2**((q+1) * n**q); raises InsufficientInputError below that.  Decreasing
    rows are negated internally; every returned row is re-verified as a cup
    or cap by exhaustive triple checks.  Rows may be lazy sequences: the
    recursion probes entries via binary search only.
    """
    q = len(matrix)
    if q == 0:
        raise ValueError("empty matrix")
    width = len(matrix[0])
    if n < 1:
        raise ValueError("need n >= 1")
    need = required_width(q, n, n)
    if width < need:
        raise InsufficientInputError(
            f"cupcap extraction of width {n} from {q} rows needs "
            f"{need} columns, got {width}",
            stage="cupcap",
        )
    dirs = _row_directions(matrix)

    def val(r, c):
        v = matrix[r][c]
        return v if dirs[r] == "inc" else -v

    outcome, cols, kind_map = _cupcap_rec(val, tuple(range(q)), range(width), n, n)
    if len(cols) != n:
        raise InternalVerificationError("cupcap outcome has wrong width")
    kinds = []
    for r in range(q):
        k = kind_map[r]
        if dirs[r] == "dec":  # negation swaps cups and caps
            k = "cup" if k == "cap" else "cap"
        kinds.append(k)
    _verify_cupcap(matrix, cols, kinds)
    return CupcapStage(tuple(cols), tuple(kinds))


def cupcap_submatrix_greedy(matrix: Sequence[Sequence]) -> CupcapStage:
    """Best-effort cupcap submatrix: widest the midpoint search finds.

    Row by row, keeps the longer of the best cap and best cup (cup on ties)
    and restricts later rows to the surviving columns.  No width guarantee
    beyond the single-row midpoint bound, but the output is always verified;
    this is the extraction the end-to-end pipeline runs at practical sizes,
    where the worst-case width guarantee of :func:`cupcap_submatrix` is
    vacuous.
    """
    q = len(matrix)
    if q == 0:
        raise ValueError("empty matrix")
    width = len(matrix[0])
    if width < 2:
        raise InsufficientInputError("need at least two columns", stage="cupcap")
    dirs = _row_directions(matrix)
    cols: Sequence[int] = range(width)
    kinds: list[str] = []
    for r in range(q):
        def get(i, _r=r):
            v = matrix[_r][cols[i]]
            return v if dirs[_r] == "inc" else -v

        cap, cup = best_cap_and_cup(get, 0, len(cols))
        if len(cup) >= len(cap):
            chosen, kind = cup, "cup"
        else:
            chosen, kind = cap, "cap"
        cols = [cols[i] for i in chosen]
        if dirs[r] == "dec":
            kind = "cup" if kind == "cap" else "cap"
        kinds.append(kind)
    cols = list(cols)
    _verify_cupcap(matrix, cols, kinds)
    return CupcapStage(tuple(cols), tuple(kinds))


# ---------------------------------------------------------------------------
# exponential shifts


@dataclass(frozen=True)
class ExponentialShift:
    """Sampled positions, endpoint shift and growth type of one row."""

    sample_positions: tuple[int, ...]  # 0-based positions into the input row
    shift: object  # -x_first or -x_last, same type as the entries
    tau: tuple[str, str]
    delta: Fraction
    z: int


def ceil_log2(delta: Fraction) -> int:
    """Smallest z with 2**z >= delta."""
    z = floor_log(2, delta)
    if Fraction(2) ** z < delta:
        z += 1
    return z


def exponential_shift(values: Sequence, delta) -> ExponentialShift:
    """Shift and sample a cup or cap into an exactly Delta-exponential row.

    For delta > 2 and z = ceil(log2 delta), positions z, 2z, 3z, ... are
    kept (1-based index i*z, so 0-based i*z - 1).  The shift is the negated
    first entry for increasing cups and decreasing caps, the negated last
    entry for increasing caps and decreasing cups; the four cases map to the
    four growth types.  The shifted sample is verified against the strict
    growth inequality and an error is raised otherwise (possible only when
    delta is an exact power of two and every halving step is tight).
    """
    delta = as_rational(delta)
    if delta <= 2:
        raise ValueError("delta must exceed 2")
    n = len(values)
    direction = is_strictly_monotone(values)
    if direction is None:
        raise ValueError("sequence must be strictly monotone")
    cup = is_cup(values)
    cap = is_cap(values)
    if not cup and not cap:
        raise ValueError("sequence is neither a cup nor a cap")
    z = ceil_log2(delta)
    count = (n - 1) // z
    if count < 2:
        raise InsufficientInputError(
            f"only {count} sample(s) available at stride {z}",
            stage="exponential-sample",
        )
    positions = tuple(i * z - 1 for i in range(1, count + 1))
    if cup:  # ties classify as cup
        if direction == "inc":
            shift, tau = -values[0], ("+", "up")
        else:
            shift, tau = -values[n - 1], ("+", "down")
    else:
        if direction == "inc":
            shift, tau = -values[n - 1], ("-", "down")
        else:
            shift, tau = -values[0], ("-", "up")
    shifted = [values[p] + shift for p in positions]
    if not is_delta_exponential(shifted, delta, tau):
        raise InternalVerificationError(
            "shifted sample is not strictly Delta-exponential "
            "(tight halving chain at a power-of-two delta)"
        )
    return ExponentialShift(positions, shift, tau, delta, z)
