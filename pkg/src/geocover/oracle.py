"""Brute-force reference solvers.

Nothing here imports the fast solvers: every answer is obtained by plain
enumeration so that a shared bug cannot confirm itself.  Size caps are
hard preconditions.
"""
import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

INFEASIBLE = None


class OracleSizeError(ValueError):
    pass


def _cap(name, value, limit):
    if value > limit:
        raise OracleSizeError(f"{name}={value} exceeds the oracle limit {limit}")


# -- polygon partitions -----------------------------------------------------

def _crosses(a, b):
    (a1, a2), (b1, b2) = a, b
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


@lru_cache(maxsize=None)
def _noncrossing_sets(n):
    diags = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    out = []

    # extend K-subsets in index order, dropping any that gain a crossing pair
    def grow(start, chosen):
        out.append(tuple(chosen))
        for d in range(start, len(diags)):
            cand = diags[d]
            if all(not _crosses(cand, c) for c in chosen):
                chosen.append(cand)
                grow(d + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


def oracle_partition(poly, K, objective):
    n = poly.n
    _cap("n", n, 10)
    if not 0 <= K <= n - 3:
        raise ValueError("K out of range")
    best = None
    for chosen in _noncrossing_sets(n):
        if len(chosen) != K:
            continue
        ws = [poly.weight(i, j) for i, j in chosen]
        if objective in ("min-sum", "max-sum"):
            v = sum(ws)
        elif K == 0:
            raise ValueError("empty max/min is undefined")
        else:
            v = max(ws) if objective == "min-max" else min(ws)
        if best is None or (v < best if objective.startswith("min") else v > best):
            best = v
    return best


# -- 1D covers ----------------------------------------------------------------

def oracle_cover1d(points, intervals, mode, objective="min-weight"):
    """Enumerate every subset of the covering side.

    Returns the optimum, or ``None`` when no subset covers.  An empty target
    side costs 0 under every objective.
    """
    _cap("points", len(points), 12)
    _cap("intervals", len(intervals), 12)
    if mode == "intervals-cover-points":
        covering = [(w, (l, h)) for l, h, w in intervals]
        targets = [x for x, _ in points]

        def covers(subset):
            return all(any(covering[j][1][0] <= x <= covering[j][1][1] for j in subset)
                       for x in targets)
    else:
        covering = [(w, x) for x, w in points]
        targets = [(l, h) for l, h, _ in intervals]

        def covers(subset):
            return all(any(l <= covering[i][1] <= h for i in subset) for l, h in targets)

    if not targets:
        return 0
    best = None
    idx = range(len(covering))
    for r in range(1, len(covering) + 1):
        for subset in itertools.combinations(idx, r):
            if not covers(subset):
                continue
            ws = [covering[j][0] for j in subset]
            if objective == "min-weight":
                v = sum(ws)
                better = best is None or v < best
            elif objective == "min-max":
                v = max(ws)
                better = best is None or v < best
            else:
                v = min(ws)
                better = best is None or v > best
            if better:
                best = v
    return best


# -- 2D covers ----------------------------------------------------------------

def oracle_cover2d_all(points, K, objective="min-sum", shape="rectangle"):
    """Try every assignment of points to K (possibly empty) groups."""
    _cap("n", len(points), 8)
    _cap("K", K, 3)
    if not points or K < 1:
        raise ValueError("need points and K >= 1")
    if shape == "square":
        if K != 1:
            raise ValueError("squares only for K=1")
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        side = max(max(xs) - min(xs), max(ys) - min(ys))
        return side * side
    pts = [(int(p[0]), int(p[1])) for p in points]
    best = None
    for assign in itertools.product(range(K), repeat=len(pts)):
        areas = []
        for g in range(K):
            members = [pts[i] for i in range(len(pts)) if assign[i] == g]
            if not members:
                areas.append(0)
                continue
            gx = [p[0] for p in members]
            gy = [p[1] for p in members]
            areas.append((max(gx) - min(gx)) * (max(gy) - min(gy)))
        v = sum(areas) if objective == "min-sum" else max(areas)
        if best is None or v < best:
            best = v
    return best


def _interiors_overlap(a, b, lx, ly):
    return a[0] < b[0] + lx and b[0] < a[0] + lx and a[1] < b[1] + ly and b[1] < a[1] + ly


def oracle_cover2d_maxweight(points, K, lx, ly):
    """Best total weight over pairwise interior-disjoint placements drawn
    from the offset grid ``x_i + t*lx``, ``y_i + t*ly``, ``t`` in -3..3."""
    _cap("n", len(points), 6)
    _cap("K", K, 3)
    if not points:
        return 0
    pts = [(int(p[0]), int(p[1]), int(p[2])) for p in points]
    n = len(pts)
    xs = sorted({x + t * lx for x, _, _ in pts for t in range(-3, 4)})
    ys = sorted({y + t * ly for _, y, _ in pts for t in range(-3, 4)})
    places = []
    masks = []
    for x0 in xs:
        for y0 in ys:
            mask = 0
            for i, (x, y, _) in enumerate(pts):
                if x0 <= x <= x0 + lx and y0 <= y <= y0 + ly:
                    mask |= 1 << i
            if mask:
                places.append((x0, y0))
                masks.append(mask)
    weight_of = np.zeros(1 << n, dtype=np.int64)
    for m in range(1 << n):
        weight_of[m] = sum(pts[i][2] for i in range(n) if m >> i & 1)
    masks = np.array(masks, dtype=np.int64)
    P = len(places)
    if K == 1 or P == 0:
        return int(weight_of[masks].max()) if P else 0
    px = np.array([p[0] for p in places])
    py = np.array([p[1] for p in places])
    disjoint = ~((px[:, None] < px[None, :] + lx) & (px[None, :] < px[:, None] + lx)
                 & (py[:, None] < py[None, :] + ly) & (py[None, :] < py[:, None] + ly))
    pair_mask = masks[:, None] | masks[None, :]
    best = int(weight_of[masks].max())
    pair_w = np.where(disjoint, weight_of[pair_mask], 0)
    best = max(best, int(pair_w.max()))
    if K == 3:
        for a in range(P):
            ok = disjoint[a][:, None] & disjoint[a][None, :] & disjoint
            if not ok.any():
                continue
            union = pair_mask | masks[a]
            best = max(best, int(np.where(ok, weight_of[union], 0).max()))
    return best


# -- hitting sets and K-centers -------------------------------------------------

def oracle_hitting(intervals, limit=None):
    """Fewest points stabbing every closed interval, searched over subsets
    of right endpoints in increasing size.  With ``limit`` the search stops
    after that size and returns ``limit + 1`` when nothing smaller works."""
    _cap("intervals", len(intervals), 12)
    if not intervals:
        return 0
    rights = sorted({h for _, h in intervals})
    top = len(rights) if limit is None else min(limit, len(rights))
    for r in range(1, top + 1):
        for chosen in itertools.combinations(rights, r):
            if all(any(l <= c <= h for c in chosen) for l, h in intervals):
                return r
    return top + 1


def _wdist_1d(x, w, a, L):
    if x < a:
        return w * (a - x)
    if x > a + L:
        return w * (x - a - L)
    return 0


def oracle_kcenter_radius_1d(points, L, K, fixed=()):
    """Smallest candidate radius at which at most K free intervals suffice."""
    _cap("n", len(points), 12)
    _cap("K", K, 3)
    _cap("P", len(fixed), 2)
    pts = [(int(x), int(w)) for x, w in points]
    cands = {Fraction(0)}
    for xi, wi in pts:
        for xj, wj in pts:
            v = Fraction((xj - xi - L) * wi * wj, wi + wj)
            if v > 0:
                cands.add(v)
        for a in fixed:
            cands.add(Fraction(_wdist_1d(xi, wi, a, L)))
    cands = sorted(cands)

    def feasible(D):
        ivs = []
        for x, w in pts:
            if any(_wdist_1d(x, w, a, L) <= D for a in fixed):
                continue
            ivs.append((x - D / w - L, x + D / w))
        return oracle_hitting(ivs, limit=K) <= K

    lo, hi = 0, len(cands) - 1
    if not feasible(cands[hi]):
        raise AssertionError("largest candidate infeasible")
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


@lru_cache(maxsize=None)
def _submask_pairs(n):
    tops, subs = [], []
    for T in range(1 << n):
        S = T
        while True:
            tops.append(T)
            subs.append(S)
            if S == 0:
                break
            S = (S - 1) & T
    return np.array(tops, dtype=np.int64), np.array(subs, dtype=np.int64)


def _rect_dist(x, y, fx, fy, lx, ly):
    return max(fx - x, x - fx - lx, fy - y, y - fy - ly, 0)


def oracle_kcenter_radius_2d(points, K, lx, ly, fixed=()):
    """Smallest candidate radius (a multiple of 1/2) for the rectangle
    K-center, checked by enumerating every partition of the remaining
    points into at most K groups."""
    _cap("n", len(points), 10)
    _cap("K", K, 3)
    _cap("P", len(fixed), 2)
    pts = [(int(p[0]), int(p[1])) for p in points]
    n = len(pts)
    if n == 0:
        return Fraction(0)
    # t = 2D throughout, so every candidate is an integer
    cands = {0}
    for xi, yi in pts:
        for xj, yj in pts:
            cands.add(max(abs(xi - xj) - lx, 0))
            cands.add(max(abs(yi - yj) - ly, 0))
        for fx, fy in fixed:
            cands.add(2 * _rect_dist(xi, yi, fx, fy, lx, ly))
    cands = sorted(cands)
    exempt_at = [min((2 * _rect_dist(x, y, fx, fy, lx, ly) for fx, fy in fixed), default=math.inf)
                 for x, y in pts]

    size = 1 << n
    need = np.zeros(size, dtype=np.int64)
    for S in range(1, size):
        members = [pts[i] for i in range(n) if S >> i & 1]
        gx = [p[0] for p in members]
        gy = [p[1] for p in members]
        need[S] = max(max(gx) - min(gx) - lx, max(gy) - min(gy) - ly, 0)
    tops, subs = _submask_pairs(n)
    needk = need.copy()
    for _ in range(K - 1):
        nxt = np.full(size, np.iinfo(np.int64).max, dtype=np.int64)
        np.minimum.at(nxt, tops, np.maximum(need[subs], needk[tops ^ subs]))
        needk = nxt
    for t in cands:
        R = 0
        for i in range(n):
            if exempt_at[i] > t:
                R |= 1 << i
        if needk[R] <= t:
            return Fraction(t, 2)
    raise AssertionError("no candidate feasible")


def oracle_kcenter_radius(instance):
    """Dispatch on a plain dict in the instance-file layout."""
    if instance["problem"] == "kcenter1d":
        return oracle_kcenter_radius_1d(instance["points"], instance["L"], instance["k"],
                                        instance.get("fixed_centers", ()))
    return oracle_kcenter_radius_2d(instance["points"], instance["k"], instance["lx"],
                                    instance["ly"], [tuple(r) for r in instance.get("fixed_rects", ())])
