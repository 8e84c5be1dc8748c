"""Fixed-size rectangle placement on an m x m weight grid.

Cell ``(x, y)`` holds the weight of a point at integer coordinates.  All
window sums come from a 2D prefix table, so nothing here sorts or sweeps.

Cut positions follow the same four lex orders as the point solver: the
cells are listed by primary coordinate, then secondary coordinate (up or
down), and a cut after ``k`` cells may end partway through a line.
"""
import numpy as np
from numba import njit

from .ds import PrefixTable2D


@njit(cache=True)
def _table(W, R):
    m = W.shape[0]
    P = np.zeros((m + 1, m + 1), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            v = W[i, j] if R[i, j] else 0
            P[i + 1, j + 1] = P[i, j + 1] + P[i + 1, j] - P[i, j] + v
    return P


@njit(cache=True)
def _rsum(P, x1, y1, x2, y2):
    m = P.shape[0] - 1
    if x1 < 0:
        x1 = 0
    if y1 < 0:
        y1 = 0
    if x2 > m - 1:
        x2 = m - 1
    if y2 > m - 1:
        y2 = m - 1
    if x1 > x2 or y1 > y2:
        return 0
    return P[x2 + 1, y2 + 1] - P[x1, y2 + 1] - P[x2 + 1, y1] + P[x1, y1]


@njit(cache=True)
def _box(P, swap, a1, b1, a2, b2):
    """Sum over primary range [a1, a2] x secondary range [b1, b2]."""
    if swap:
        return _rsum(P, b1, a1, b2, a2)
    return _rsum(P, a1, b1, a2, b2)


@njit(cache=True)
def _cell(k, m, flip):
    a = k // m
    b = k % m
    if flip:
        b = m - 1 - b
    return a, b


@njit(cache=True)
def _order_tables(P, m, swap, flip, lx, ly):
    """Best single window over every lex prefix and suffix of the cells.

    ``pre[k]`` covers the first k cells of the order, ``suf[k]`` the rest.
    A new best at step k must contain cell k; along the primary axis it is
    pushed as far into the allowed side as possible, along the secondary
    axis every offset is tried.
    """
    la, lb = (ly, lx) if swap else (lx, ly)
    total = m * m
    pre = np.zeros(total + 1, dtype=np.int64)
    suf = np.zeros(total + 1, dtype=np.int64)
    for k in range(total):
        a, b = _cell(k, m, flip)
        best = pre[k]
        for b0 in range(b - lb, b + 1):
            v = _box(P, swap, a - la, b0, a - 1, b0 + lb)
            if flip:
                v += _box(P, swap, a, max(b0, b), a, b0 + lb)
            else:
                v += _box(P, swap, a, b0, a, min(b0 + lb, b))
            if v > best:
                best = v
        pre[k + 1] = best
    for k in range(total - 1, -1, -1):
        a, b = _cell(k, m, flip)
        best = suf[k + 1]
        for b0 in range(b - lb, b + 1):
            v = _box(P, swap, a + 1, b0, a + la, b0 + lb)
            if flip:
                v += _box(P, swap, a, b0, a, min(b0 + lb, b))
            else:
                v += _box(P, swap, a, max(b0, b), a, b0 + lb)
            if v > best:
                best = v
        suf[k] = best
    return pre, suf


@njit(cache=True)
def _best_pair(W, R, lx, ly):
    m = W.shape[0]
    P = _table(W, R)
    best = 0
    for swap in (False, True):
        for flip in (False, True):
            pre, suf = _order_tables(P, m, swap, flip, lx, ly)
            for k in range(m * m + 1):
                if pre[k] + suf[k] > best:
                    best = pre[k] + suf[k]
    return best


@njit(cache=True)
def _prefix_mask(m, swap, flip, k):
    R = np.zeros((m, m), dtype=np.bool_)
    for c in range(k):
        a, b = _cell(c, m, flip)
        if swap:
            R[b, a] = True
        else:
            R[a, b] = True
    return R


@njit(cache=True)
def _best_triple(W, lx, ly):
    m = W.shape[0]
    everything = np.ones((m, m), dtype=np.bool_)
    best = _best_pair(W, everything, lx, ly)
    P = _table(W, everything)
    for swap in (False, True):
        for flip in (False, True):
            pre, suf = _order_tables(P, m, swap, flip, lx, ly)
            for k in range(m * m + 1):
                head = _prefix_mask(m, swap, flip, k)
                tail = ~head
                v = pre[k] + _best_pair(W, tail, lx, ly)
                if v > best:
                    best = v
                v = suf[k] + _best_pair(W, head, lx, ly)
                if v > best:
                    best = v
    return best


class GridTables:
    """Prefix sums plus quadrant-limited best windows.

    ``wmax[q][i, j]`` is the best single-window weight using only the cells
    in quadrant ``q`` of ``(i, j)``: 0 is ``x <= i, y <= j``, 1 is
    ``x >= i, y <= j``, 2 is ``x <= i, y >= j`` and 3 is ``x >= i, y >= j``.
    """

    def __init__(self, grid, lx, ly):
        W = np.asarray(grid, dtype=np.int64)
        if W.ndim != 2 or W.shape[0] != W.shape[1] or W.shape[0] == 0:
            raise ValueError("grid must be a nonempty square matrix")
        m = W.shape[0]
        self.m = m
        self.lx = min(int(lx), m - 1)
        self.ly = min(int(ly), m - 1)
        self.wsum = PrefixTable2D(W)
        self.wmax = [self._quadrant(np.flip(W, axis=tuple(ax)), ax) for ax in
                     ((), (0,), (1,), (0, 1))]

    def _quadrant(self, W, axes):
        # best window with top-right corner at (i, j) clipped to the grid,
        # then a running max over the lower-left quadrant
        m, lx, ly = self.m, self.lx, self.ly
        t = PrefixTable2D(W)
        best = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                v = t.rect_sum(max(i - lx, 0), max(j - ly, 0), i, j)
                if i:
                    v = max(v, best[i - 1, j])
                if j:
                    v = max(v, best[i, j - 1])
                best[i, j] = v
        return np.flip(best, axis=tuple(axes))


def max_weight_fixed_rects_grid(grid, K, lx, ly):
    """Value of the best K (<= 3) disjoint ``lx x ly`` windows on a grid.

    Sizes of ``m`` or more are clamped to ``m - 1``: such a window already
    spans a whole row or column.
    """
    if not 1 <= K <= 3:
        raise ValueError(f"K={K} outside 1..3")
    if lx < 0 or ly < 0:
        raise ValueError("rectangle sizes must be nonnegative")
    tables = GridTables(grid, lx, ly)
    W = np.asarray(grid, dtype=np.int64)
    if np.any(W < 0):
        raise ValueError("weights must be nonnegative")
    m = tables.m
    if K == 1:
        return int(tables.wmax[0][m - 1, m - 1])
    if K == 2:
        return int(_best_pair(W, np.ones((m, m), dtype=np.bool_), tables.lx, tables.ly))
    return int(_best_triple(W, tables.lx, tables.ly))


def grid_points(grid):
    """The point set a grid stands for: one ``(x, y, w)`` per positive cell."""
    W = np.asarray(grid, dtype=np.int64)
    xs, ys = np.nonzero(W > 0)
    return [(int(x), int(y), int(W[x, y])) for x, y in zip(xs, ys)]
