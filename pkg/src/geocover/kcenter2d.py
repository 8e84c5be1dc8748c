"""Rectangle K-center in the plane (unweighted, L-infinity distance).

K congruent ``lx x ly`` rectangles are placed so the largest distance from
a point to its nearest rectangle is minimal.  A radius D is feasible when
the points can be covered by K rectangles inflated to
``(lx + 2D) x (ly + 2D)``; points within D of a fixed rectangle are dropped
first.  Exact mode works with ``t = 2D`` so every size stays an integer.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .solution import OK, Solution

EXACT, FLOAT = "exact", "float"


class UnsupportedError(ValueError):
    """Raised for weighted rectangle K-center instances."""


@dataclass
class KCenter2DInstance:
    points: list
    K: int = 1
    lx: int = 0
    ly: int = 0
    fixed_rects: list = field(default_factory=list)

    def __post_init__(self):
        if any(len(p) != 2 for p in self.points):
            raise UnsupportedError("weighted rectangle K-center is not supported")
        self.points = [(int(x), int(y)) for x, y in self.points]
        self.fixed_rects = [(int(r[0]), int(r[1])) for r in self.fixed_rects]
        if not 1 <= self.K <= 3:
            raise ValueError(f"K={self.K} outside 1..3")
        if self.lx < 0 or self.ly < 0:
            raise ValueError("rectangle sizes must be nonnegative")


def rect_distance(x, y, x0, y0, lx, ly):
    """L-infinity distance from ``(x, y)`` to the closed rectangle."""
    return max(x0 - x, x - x0 - lx, y0 - y, y - y0 - ly, 0)


def feasible_fixed_size_cover(points, K, lx, ly):
    """Can K rectangles of size ``lx x ly`` cover every point?

    One rectangle fits iff both extents do.  Otherwise some rectangle can
    be slid into a corner of the bounding box, so each of the four corners
    is tried with K - 1 rectangles left for the uncovered points.
    Returns ``(ok, corners)`` with the lower-left corner of each rectangle.
    """
    if not points:
        return True, []
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    X0, X1, Y0, Y1 = min(xs), max(xs), min(ys), max(ys)
    if X1 - X0 <= lx and Y1 - Y0 <= ly:
        return True, [(X0, Y0)]
    if K == 1:
        return False, []
    for x0 in (X0, X1 - lx):
        for y0 in (Y0, Y1 - ly):
            rest = [p for p in points
                    if not (x0 <= p[0] <= x0 + lx and y0 <= p[1] <= y0 + ly)]
            ok, corners = feasible_fixed_size_cover(rest, K - 1, lx, ly)
            if ok:
                return True, [(x0, y0)] + corners
    return False, []


def _remaining(inst, D):
    return [p for p in inst.points
            if not any(rect_distance(p[0], p[1], fx, fy, inst.lx, inst.ly) <= D
                       for fx, fy in inst.fixed_rects)]


def feasible(inst, D):
    """``(ok, inflated corners)`` at radius D."""
    pts = _remaining(inst, D)
    return feasible_fixed_size_cover(pts, inst.K, inst.lx + 2 * D, inst.ly + 2 * D)


def radius_candidates(inst):
    """Candidate values of ``t = 2D`` (all integers), sorted."""
    cands = {0}
    pts = inst.points
    for xi, yi in pts:
        for xj, yj in pts:
            cands.add(max(xj - xi - inst.lx, 0))
            cands.add(max(yj - yi - inst.ly, 0))
        for fx, fy in inst.fixed_rects:
            cands.add(2 * rect_distance(xi, yi, fx, fy, inst.lx, inst.ly))
    return sorted(cands)


def _centers(corners, D):
    # shrink each inflated rectangle by D on every side
    return [(x0 + D, y0 + D) for x0, y0 in corners]


def optimal_radius(inst, mode=EXACT, iterations=100):
    """Smallest radius D; the witness holds the lower-left corners of the
    (un-inflated) center rectangles."""
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
        if feasible(inst, Fraction(cands[mid], 2))[0]:
            hi = mid
        else:
            lo = mid + 1
    D = Fraction(cands[lo], 2)
    ok, corners = feasible(inst, D)
    if not ok:
        raise AssertionError("largest candidate radius is infeasible")
    return Solution(OK, D, _centers(corners, D))


def _optimal_radius_float(inst, iterations):
    xs = [p[0] for p in inst.points]
    ys = [p[1] for p in inst.points]
    lo, hi = 0.0, float(max(max(xs) - min(xs), max(ys) - min(ys)))
    if feasible(inst, 0.0)[0]:
        hi = 0.0
    for _ in range(iterations):
        if hi - lo <= 0:
            break
        mid = (lo + hi) / 2
        if feasible(inst, mid)[0]:
            hi = mid
        else:
            lo = mid
    ok, corners = feasible(inst, hi)
    if not ok:
        raise AssertionError("upper bound radius is infeasible")
    return Solution(OK, hi, _centers(corners, hi))


def check_radius(inst, solution, tol=0):
    D = solution.value
    centers = list(solution.witness)
    assert len(centers) <= inst.K, f"{len(centers)} centers for K={inst.K}"
    rects = centers + list(inst.fixed_rects)
    for x, y in inst.points:
        dist = min(rect_distance(x, y, cx, cy, inst.lx, inst.ly) for cx, cy in rects) \
            if rects else None
        assert dist is not None and dist <= D + tol, f"point {(x, y)} at distance {dist} > {D}"
