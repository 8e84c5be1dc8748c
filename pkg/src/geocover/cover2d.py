"""Rectangle covers in the plane.

Two problems live here:

* cover every point with at most K axis-aligned rectangles of free size,
  minimising the total or the largest area (rectangles may overlap);
* place K interior-disjoint ``lx x ly`` rectangles to maximise the weight
  of the points they cover.

K is at most 3 in both.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from ._sweep import NONE, best_pair, best_single, lex_order, split_tables
from .solution import OK, Solution

OBJECTIVES = ("min-sum", "min-max")
SHAPES = ("rectangle", "square")


@dataclass(frozen=True)
class RectPlacement:
    x0: int
    y0: int
    lx: int
    ly: int

    @property
    def area(self):
        return self.lx * self.ly

    def covers(self, x, y):
        return self.x0 <= x <= self.x0 + self.lx and self.y0 <= y <= self.y0 + self.ly

    def overlaps(self, other):
        """Interiors intersect (touching edges do not count)."""
        return (self.x0 < other.x0 + other.lx and other.x0 < self.x0 + self.lx
                and self.y0 < other.y0 + other.ly and other.y0 < self.y0 + self.ly)


class PrefixExtrema:
    """Running y-extrema over points sorted by x.

    Index ``i`` of the ``l`` tables covers the first ``i`` points and index
    ``i`` of the ``r`` tables covers the points from ``i`` on.  Empty ranges
    hold ``None``.
    """

    def __init__(self, xs, ys):
        n = len(xs)
        self.xs, self.ys = list(xs), list(ys)
        self.ycl_max = [None] * (n + 1)
        self.ycl_min = [None] * (n + 1)
        self.ycr_max = [None] * (n + 1)
        self.ycr_min = [None] * (n + 1)
        for i, y in enumerate(ys):
            hi, lo = self.ycl_max[i], self.ycl_min[i]
            self.ycl_max[i + 1] = y if hi is None else max(hi, y)
            self.ycl_min[i + 1] = y if lo is None else min(lo, y)
        for i in range(n - 1, -1, -1):
            y = ys[i]
            hi, lo = self.ycr_max[i + 1], self.ycr_min[i + 1]
            self.ycr_max[i] = y if hi is None else max(hi, y)
            self.ycr_min[i] = y if lo is None else min(lo, y)

    def left_box(self, i):
        """MBR of the first ``i`` points as ``(x0, y0, x1, y1)``, or None."""
        if i == 0:
            return None
        return self.xs[0], self.ycl_min[i], self.xs[i - 1], self.ycl_max[i]

    def right_box(self, i):
        if i >= len(self.xs):
            return None
        return self.xs[i], self.ycr_min[i], self.xs[-1], self.ycr_max[i]


def _box_area(box):
    return 0 if box is None else (box[2] - box[0]) * (box[3] - box[1])


def _join(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a[0], b[0]), min(a[1], b[1]), max(a[2], b[2]), max(a[3], b[3])


def _as_placement(box):
    x0, y0, x1, y1 = box
    return RectPlacement(x0, y0, x1 - x0, y1 - y0)


# -- covering all points ---------------------------------------------------------

class _AllCover:
    """Memoised search over subsets of the points (bitmasks)."""

    def __init__(self, pts, objective):
        self.pts = pts
        self.n = len(pts)
        self.combine = (lambda a, b: a + b) if objective == "min-sum" else max
        self.memo = {}
        self.box_memo = {}

    def members(self, mask):
        return [i for i in range(self.n) if mask >> i & 1]

    def box(self, mask):
        b = self.box_memo.get(mask)
        if b is None and mask:
            xs = [self.pts[i][0] for i in self.members(mask)]
            ys = [self.pts[i][1] for i in self.members(mask)]
            b = (min(xs), min(ys), max(xs), max(ys))
            self.box_memo[mask] = b
        return b

    def inside(self, mask, x0, y0, x1, y1):
        out = 0
        for i in self.members(mask):
            x, y = self.pts[i]
            if x0 <= x <= x1 and y0 <= y <= y1:
                out |= 1 << i
        return out

    def solve(self, mask, K):
        """Best ``(value, boxes)`` for the points in ``mask`` with K rectangles."""
        key = (mask, K)
        if key in self.memo:
            return self.memo[key]
        if mask == 0:
            res = (0, [])
        elif K == 1:
            b = self.box(mask)
            res = (_box_area(b), [b])
        else:
            res = self._split(mask, K)
        self.memo[key] = res
        return res

    def _consider(self, best, value, boxes):
        if best is None or value < best[0]:
            return value, boxes
        return best

    def _split(self, mask, K):
        best = self.solve(mask, 1)
        best = (best[0], list(best[1]))
        X0, Y0, X1, Y1 = self.box(mask)
        idx = self.members(mask)
        # (a) first rectangle anchored at a corner of the MBR
        for cx, sx in ((X0, 1), (X1, -1)):
            lens_x = sorted({sx * (self.pts[i][0] - cx) for i in idx})
            for cy, sy in ((Y0, 1), (Y1, -1)):
                lens_y = sorted({sy * (self.pts[i][1] - cy) for i in idx})
                for Lx in lens_x:
                    for Ly in lens_y:
                        x0, x1 = sorted((cx, cx + sx * Lx))
                        y0, y1 = sorted((cy, cy + sy * Ly))
                        covered = self.inside(mask, x0, y0, x1, y1)
                        rest_v, rest_b = self.solve(mask & ~covered, K - 1)
                        v = self.combine(Lx * Ly, rest_v)
                        best = self._consider(best, v, [(x0, y0, x1, y1)] + rest_b)
        # (b) a strip spanning the full height (or width) between two columns
        for swap in (False, True):
            best = self._strips(mask, K, idx, swap, best)
        return best

    def _strips(self, mask, K, idx, swap, best):
        def coord(i):
            x, y = self.pts[i]
            return (y, x) if swap else (x, y)

        def unswap(b):
            if b is None or not swap:
                return b
            return b[1], b[0], b[3], b[2]

        order = sorted(idx, key=coord)
        xs = [coord(i)[0] for i in order]
        ys = [coord(i)[1] for i in order]
        ext = PrefixExtrema(xs, ys)
        lo_y, hi_y = min(ys), max(ys)
        n = len(order)
        starts = [i for i in range(n) if i == 0 or xs[i] != xs[i - 1]]
        ends = [j for j in range(n) if j == n - 1 or xs[j] != xs[j + 1]]
        for i in starts:
            left = ext.left_box(i)
            for j in ends:
                if j < i:
                    continue
                strip = (xs[i], lo_y, xs[j], hi_y)
                right = ext.right_box(j + 1)
                a_strip = _box_area(strip)
                if K == 2:
                    flank = _join(left, right)
                    v = self.combine(a_strip, _box_area(flank))
                    boxes = [unswap(strip)] + ([unswap(flank)] if flank else [])
                    best = self._consider(best, v, boxes)
                    continue
                # K == 3: one rectangle per flank, then any two for the flanks
                v = self.combine(a_strip, self.combine(_box_area(left), _box_area(right)))
                boxes = [unswap(b) for b in (strip, left, right) if b is not None]
                best = self._consider(best, v, boxes)
                outside = 0
                for k in list(range(i)) + list(range(j + 1, n)):
                    outside |= 1 << order[k]
                rest_v, rest_b = self.solve(outside, 2)
                best = self._consider(best, self.combine(a_strip, rest_v),
                                      [unswap(strip)] + rest_b)
        return best


def cover_all_points(points, K, objective="min-sum", shape="rectangle"):
    """Cover every point with at most K rectangles, minimising the total
    (``min-sum``) or the largest (``min-max``) area.

    ``shape="square"`` (K=1 only) uses one square of side equal to the
    larger extent.  Placements may overlap; unused rectangles are omitted
    from the witness.
    """
    if not points:
        raise ValueError("need at least one point")
    if not 1 <= K <= 3:
        raise ValueError(f"K={K} outside 1..3")
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    pts = [(int(p[0]), int(p[1])) for p in points]
    if shape == "square":
        if K != 1:
            raise ValueError("squares are only supported for K=1")
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        side = max(max(xs) - min(xs), max(ys) - min(ys))
        return Solution(OK, side * side, [RectPlacement(min(xs), min(ys), side, side)])
    search = _AllCover(pts, objective)
    value, boxes = search.solve((1 << len(pts)) - 1, K)
    return Solution(OK, value, [_as_placement(b) for b in boxes])


def check_all_cover(points, K, objective, solution):
    rects = solution.witness
    assert len(rects) <= K, f"{len(rects)} rectangles for K={K}"
    for p in points:
        assert any(r.covers(p[0], p[1]) for r in rects), f"point {p} uncovered"
    areas = [r.area for r in rects]
    got = sum(areas) if objective == "min-sum" else max(areas, default=0)
    assert got == solution.value, f"witness aggregates to {got}, reported {solution.value}"


# -- fixed-size rectangles of maximum weight ---------------------------------------

def _arrays(points):
    """``(xs, ys, ws)`` int64 arrays from triples, an n x 3 array, or a
    tuple of three arrays."""
    if isinstance(points, tuple) and len(points) == 3 and isinstance(points[0], np.ndarray):
        return points
    if len(points) == 0:
        e = np.zeros(0, dtype=np.int64)
        return e, e, e
    a = np.asarray(points, dtype=np.int64).reshape(-1, 3)
    return a[:, 0].copy(), a[:, 1].copy(), a[:, 2].copy()


def best_single_fixed_rect_sweep(points, lx, ly, suffix=False):
    """Running best single placement along x.

    ``points`` are ``(x, y, w)`` triples sorted by x.  The prefix form
    returns, for each ``i``, the best weight using only the first ``i + 1``
    points; ``suffix=True`` returns the best using points ``i`` onwards.
    """
    xs, ys, ws = _arrays(points)
    n = len(xs)
    if n and np.any(np.diff(xs) < 0):
        raise ValueError("points must be sorted by x")
    pre, suf, *_ = split_tables(xs, ys, ws, int(lx), int(ly))
    return (suf[:n] if suffix else pre[1:]).tolist()


# The helpers below work on a subset ``idx`` of the global arrays and
# return ``(value, parts)`` where each part is ``(corner, subset)``: the
# placement and the indices it was restricted to.

def _single(xs, ys, ws, idx, lx, ly):
    v, cx, cy = best_single(xs[idx], ys[idx], ws[idx], lx, ly)
    return int(v), ([((int(cx), int(cy)), idx)] if cx != NONE else [])


def _pair(xs, ys, ws, idx, lx, ly):
    v, ax, ay, bx, by, swap, flip, split = best_pair(xs[idx], ys[idx], ws[idx], lx, ly)
    px, py = (ys[idx], xs[idx]) if swap else (xs[idx], ys[idx])
    order = idx[lex_order(px, py, flip)]
    parts = [((int(cx), int(cy)), sub)
             for cx, cy, sub in ((ax, ay, order[:split]), (bx, by, order[split:]))
             if cx != NONE]
    return int(v), parts


def _triple(xs, ys, ws, idx, lx, ly):
    """Three placements: one cut separates a single rectangle from a pair.

    Cuts follow the four lex orders, so a cut may pass through a line of
    points and hand a prefix of that line to either side.
    """
    n = len(idx)
    best = _pair(xs, ys, ws, idx, lx, ly)
    for swap in (False, True):
        px, py, sx, sy = (ys, xs, ly, lx) if swap else (xs, ys, lx, ly)
        for flip in (False, True):
            order = idx[lex_order(px[idx], py[idx], flip)]
            pre, suf, *_ = split_tables(px[order], py[order], ws[order], sx, sy)
            for i in range(n + 1):
                head, tail = order[:i], order[i:]
                # single on the smaller-index side, pair on the other, and back
                for one, two, single_v in ((head, tail, pre[i]), (tail, head, suf[i])):
                    if single_v + int(ws[two].sum()) <= best[0]:
                        continue
                    pv, pp = _pair(xs, ys, ws, two, lx, ly)
                    if single_v + pv > best[0]:
                        sv, sp = _single(xs, ys, ws, one, lx, ly)
                        best = _keep_placeable(best, sv + pv, sp + pp, xs, ys, lx, ly)
    return best


def _groups(parts, xs, ys, lx, ly):
    """Points each part's placement actually covers within its subset."""
    out = []
    for (cx, cy), sub in parts:
        g = [(int(xs[i]), int(ys[i])) for i in sub
             if cx <= xs[i] <= cx + lx and cy <= ys[i] <= cy + ly]
        if g:
            out.append(g)
    return out


def _keep_placeable(best, value, parts, xs, ys, lx, ly):
    """Adopt a candidate only if its groups admit disjoint placements.

    A pair split parallel to the first cut leaves its middle rectangle in a
    band that may be narrower than ``lx``; such a candidate can count more
    than any real placement achieves, so it is dropped.
    """
    rects = [RectPlacement(cx, cy, lx, ly) for (cx, cy), _ in parts]
    if all(not a.overlaps(b) for i, a in enumerate(rects) for b in rects[i + 1:]):
        return value, parts
    placed = _realize(_groups(parts, xs, ys, lx, ly), lx, ly)
    if placed is None:
        return best
    return value, [((r.x0, r.y0), np.array([], dtype=np.int64)) for r in placed]


def _realize(groups, lx, ly):
    """Pick corners so every group is covered and placements are disjoint.

    ``groups`` are lists of ``(x, y)`` that each fit in one ``lx x ly`` box.
    Candidate corners are the extreme positions of each box and positions
    flush against boxes already placed; every processing order is tried.
    Returns None when nothing works.
    """
    ranges = []
    for g in groups:
        gx = [p[0] for p in g]
        gy = [p[1] for p in g]
        ranges.append((max(gx) - lx, min(gx), max(gy) - ly, min(gy)))

    def place(order, k, placed):
        if k == len(order):
            return placed
        x_lo, x_hi, y_lo, y_hi = ranges[order[k]]
        cx = {x_lo, x_hi}
        cy = {y_lo, y_hi}
        for r in placed:
            cx.update((r.x0 + lx, r.x0 - lx))
            cy.update((r.y0 + ly, r.y0 - ly))
        for x0 in sorted(c for c in cx if x_lo <= c <= x_hi):
            for y0 in sorted(c for c in cy if y_lo <= c <= y_hi):
                r = RectPlacement(x0, y0, lx, ly)
                if not any(r.overlaps(q) for q in placed):
                    got = place(order, k + 1, placed + [r])
                    if got is not None:
                        return got
        return None

    for order in itertools.permutations(range(len(groups))):
        got = place(order, 0, [])
        if got is not None:
            out = [None] * len(groups)
            for k, r in zip(order, got):
                out[k] = r
            return out
    return None


def covered_weight(points, rects):
    """Total weight of the points inside at least one rectangle."""
    xs, ys, ws = _arrays(points)
    hit = np.zeros(len(xs), dtype=bool)
    for r in rects:
        hit |= (xs >= r.x0) & (xs <= r.x0 + r.lx) & (ys >= r.y0) & (ys <= r.y0 + r.ly)
    return int(ws[hit].sum())


def max_weight_fixed_rects(points, K, lx, ly):
    """Place at most K interior-disjoint ``lx x ly`` rectangles maximising
    the weight of covered points.  ``points`` are ``(x, y, w)`` triples.

    K=1 is one sweep, K=2 the best split of four lex orders, K=3 a split
    into a single rectangle and a pair.  Rectangles may share edges.
    """
    if not 1 <= K <= 3:
        raise ValueError(f"K={K} outside 1..3")
    lx, ly = int(lx), int(ly)
    if lx < 0 or ly < 0:
        raise ValueError("rectangle sizes must be nonnegative")
    xs, ys, ws = _arrays(points)
    if np.any(ws < 0):
        raise ValueError("weights must be nonnegative")
    if len(xs) == 0:
        return Solution(OK, 0, [])
    solver = {1: _single, 2: _pair, 3: _triple}[K]
    value, parts = solver(xs, ys, ws, np.arange(len(xs)), lx, ly)
    rects = [RectPlacement(cx, cy, lx, ly) for (cx, cy), _ in parts]
    disjoint = all(not a.overlaps(b) for i, a in enumerate(rects) for b in rects[i + 1:])
    if not disjoint or covered_weight((xs, ys, ws), rects) != value:
        # keep each point with the placement whose subset it came from
        rects = _realize(_groups(parts, xs, ys, lx, ly), lx, ly)
        if rects is None:
            raise AssertionError("split optimum has no disjoint realization")
    return Solution(OK, value, rects)


def check_fixed_rects(points, K, lx, ly, solution):
    rects = solution.witness
    assert len(rects) <= K, f"{len(rects)} rectangles for K={K}"
    for i, a in enumerate(rects):
        assert (a.lx, a.ly) == (lx, ly), f"rectangle {a} has the wrong size"
        for b in rects[i + 1:]:
            assert not a.overlaps(b), f"{a} overlaps {b}"
    got = covered_weight(points, rects)
    assert got == solution.value, f"witness covers {got}, reported {solution.value}"
