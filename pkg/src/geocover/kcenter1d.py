"""Weighted interval K-center on a line.

K intervals of length L are placed; the distance from point ``x`` of weight
``w`` to ``[a, a + L]`` is ``w * (a - x)`` left of it, ``w * (x - a - L)``
right of it, and 0 inside.  For a radius D every point turns into an
interval of admissible left endpoints, and D is feasible when at most K
points stab all of them (after dropping points a fixed center already
serves).
"""
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .solution import OK, Solution

EXACT, FLOAT = "exact", "float"


@dataclass
class KCenter1DInstance:
    points: list
    L: int = 0
    K: int = 1
    fixed_centers: list = field(default_factory=list)

    def __post_init__(self):
        self.points = [(int(x), int(w)) for x, w in self.points]
        self.fixed_centers = [int(a) for a in self.fixed_centers]
        if any(w <= 0 for _, w in self.points):
            raise ValueError("weights must be positive")
        if self.L < 0:
            raise ValueError("L must be nonnegative")
        if self.K < 1:
            raise ValueError("K must be at least 1")


@dataclass
class ExpandedInterval:
    lx: object
    rx: object
    index: int
    satisfied: bool = False


def weighted_distance(x, w, a, L):
    if x < a:
        return w * (a - x)
    if x > a + L:
        return w * (x - a - L)
    return 0


def expand_intervals(inst, D):
    """Admissible left endpoints ``[x - D/w - L, x + D/w]`` per point.

    A point is satisfied when a fixed center's left endpoint falls in its
    interval.  Sweep: at each fixed endpoint every interval still open is
    marked and forgotten, so each interval is touched once.
    """
    if D < 0:
        raise ValueError("D must be nonnegative")
    out = []
    for i, (x, w) in enumerate(inst.points):
        d = D / w if isinstance(D, float) else Fraction(D) / w
        out.append(ExpandedInterval(x - d - inst.L, x + d, i))
    events = [(iv.lx, 0, k) for k, iv in enumerate(out)]
    events += [(a, 1, -1) for a in inst.fixed_centers]
    events += [(iv.rx, 2, k) for k, iv in enumerate(out)]
    events.sort()
    open_now = set()
    for _, kind, k in events:
        if kind == 0:
            open_now.add(k)
        elif kind == 1:
            for j in open_now:
                out[j].satisfied = True
            open_now.clear()
        else:
            open_now.discard(k)
    return out


def min_hitting_points(intervals, limit=None):
    """Fewest points stabbing every closed interval ``(lx, rx)``.

    Greedy by right endpoint: a point goes at the right end of each interval
    the last point misses.  With ``limit`` the scan stops once more than
    ``limit`` points are needed.
    """
    order = sorted(range(len(intervals)), key=lambda k: intervals[k][1])
    positions = []
    last = None
    for k in order:
        lo, hi = intervals[k]
        if lo > hi:
            raise ValueError(f"interval {k} is empty")
        if last is None or lo > last:
            last = hi
            positions.append(hi)
            if limit is not None and len(positions) > limit:
                break
    return len(positions), positions


def feasible(inst, D):
    """``(ok, centers)``: can K free intervals serve every unsatisfied point?"""
    ivs = [(e.lx, e.rx) for e in expand_intervals(inst, D) if not e.satisfied]
    count, centers = min_hitting_points(ivs, limit=inst.K)
    return count <= inst.K, centers


def radius_candidates(inst):
    """Every value where feasibility can change, as exact fractions."""
    cands = {Fraction(0)}
    pts = inst.points
    for xi, wi in pts:
        for xj, wj in pts:
            gap = xj - xi - inst.L
            if gap > 0:
                cands.add(Fraction(gap * wi * wj, wi + wj))
        for a in inst.fixed_centers:
            cands.add(Fraction(weighted_distance(xi, wi, a, inst.L)))
    return sorted(cands)


def optimal_radius(inst, mode=EXACT, iterations=100):
    """Smallest radius D at which K free centers suffice.

    Exact mode searches the finite candidate set with rational arithmetic;
    float mode bisects ``[0, max w * (span + L)]`` for ``iterations`` steps.
    The witness is the list of free center left endpoints.
    """
    if not inst.points:
        return Solution(OK, Fraction(0) if mode == EXACT else 0.0, [])
    if mode == FLOAT:
        return _optimal_radius_float(inst, iterations)
    if mode != EXACT:
        raise ValueError(f"unknown mode {mode!r}")
    cands = radius_candidates(inst)
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(inst, cands[mid])[0]:
            hi = mid
        else:
            lo = mid + 1
    ok, centers = feasible(inst, cands[lo])
    if not ok:
        raise AssertionError("largest candidate radius is infeasible")
    return Solution(OK, cands[lo], centers)


class _FloatDecider:
    """Vectorised feasibility test for float radii."""

    def __init__(self, inst):
        a = np.asarray(inst.points, dtype=np.float64).reshape(-1, 2)
        self.x, self.w = a[:, 0], a[:, 1]
        self.L = float(inst.L)
        self.K = inst.K
        self.fixed = np.sort(np.asarray(inst.fixed_centers, dtype=np.float64))

    def __call__(self, D):
        d = D / self.w
        lx = self.x - d - self.L
        rx = self.x + d
        if len(self.fixed):
            at = np.searchsorted(self.fixed, lx)
            ok = at < len(self.fixed)
            ok[ok] = self.fixed[at[ok]] <= rx[ok]
            lx, rx = lx[~ok], rx[~ok]
        if len(rx) == 0:
            return True, []
        order = np.argsort(rx)
        rx = rx[order]
        reach = np.maximum.accumulate(lx[order])
        centers = []
        i = 0
        while i < len(rx):
            p = rx[i]
            centers.append(float(p))
            if len(centers) > self.K:
                return False, centers
            # first interval (by right end) whose left end passes p
            i = int(np.searchsorted(reach, p, side="right"))
        return True, centers


def _optimal_radius_float(inst, iterations):
    decide = _FloatDecider(inst)
    xs = decide.x
    span = float(xs.max() - xs.min())
    lo, hi = 0.0, float(decide.w.max()) * (span + decide.L)
    if decide(0.0)[0]:
        hi = 0.0
    for _ in range(iterations):
        if hi - lo <= 0:
            break
        mid = (lo + hi) / 2
        if decide(mid)[0]:
            hi = mid
        else:
            lo = mid
    ok, centers = decide(hi)
    if not ok:
        raise AssertionError("upper bound radius is infeasible")
    return Solution(OK, hi, centers)


# -- a single center -------------------------------------------------------------

def _upper_envelope(lines):
    """Upper envelope of ``y = m*t + c`` lines as a deque, slopes ascending.

    Classic hull trick: a line is dropped when its neighbours meet at or
    above it.  All arithmetic stays in integers/fractions.
    """
    best = {}
    for m, c in lines:
        if m not in best or c > best[m]:
            best[m] = c
    hull = deque()
    for m in sorted(best):
        c = best[m]
        while len(hull) >= 2:
            (m1, c1), (m2, c2) = hull[-2], hull[-1]
            # line 2 is useless if line 1 and the new line cross left of
            # where line 1 and line 2 cross
            if (c - c1) * (m2 - m1) >= (c2 - c1) * (m - m1):
                hull.pop()
            else:
                break
        hull.append((m, c))
    return list(hull)


def _breaks(hull):
    return [Fraction(c1 - c2, m2 - m1) for (m1, c1), (m2, c2) in zip(hull, hull[1:])]


def _eval(hull, brk, t):
    m, c = hull[bisect_left(brk, t)]
    return m * t + c


def one_center_exact(inst):
    """Optimal radius for one center and no fixed centers.

    The cost of left endpoint ``t`` is ``max(A(t), B(t), 0)`` with the
    increasing envelope ``A(t) = max w_i (t - x_i)`` and the decreasing
    ``B(t) = max w_i (x_i - L - t)``.  The optimum sits where ``A = B``.
    """
    if inst.fixed_centers or inst.K != 1:
        raise ValueError("one_center_exact needs K=1 and no fixed centers")
    if not inst.points:
        return Solution(OK, Fraction(0), [])
    L = inst.L
    A = _upper_envelope([(w, -w * x) for x, w in inst.points])
    # B(t) = max(-w t + w (x - L)); flip t -> -t so slopes ascend
    Bf = _upper_envelope([(w, w * (x - L)) for x, w in inst.points])
    a_brk, b_brk = _breaks(A), _breaks(Bf)

    def gap(t):
        return _eval(A, a_brk, t) - _eval(Bf, b_brk, -t)

    # gap is strictly increasing; bracket its root between breakpoints
    points = sorted(set(a_brk) | {-b for b in b_brk})
    xs = [x for x, _ in inst.points]
    lo_t, hi_t = Fraction(min(xs) - L), Fraction(max(xs))
    points = [lo_t] + [p for p in points if lo_t < p < hi_t] + [hi_t]
    k = bisect_left([gap(p) for p in points], 0)
    if k == 0:
        t = points[0]
    else:
        p, q = points[k - 1], points[k]
        gp, gq = gap(p), gap(q)
        t = p + (q - p) * (-gp) / (gq - gp)
    value = max(_eval(A, a_brk, t), _eval(Bf, b_brk, -t), 0)
    return Solution(OK, Fraction(value), [t])


def check_radius(inst, solution):
    """Every point not served by a fixed center is within D of a free one."""
    D = solution.value
    centers = list(solution.witness)
    assert len(centers) <= inst.K, f"{len(centers)} centers for K={inst.K}"
    for x, w in inst.points:
        dist = min((weighted_distance(x, w, a, inst.L) for a in centers + inst.fixed_centers),
                   default=None)
        assert dist is not None and dist <= D * (1 + 1e-9) + 1e-9, \
            f"point {x} at distance {dist} > {D}"
