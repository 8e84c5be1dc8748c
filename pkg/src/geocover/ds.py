"""Data structures behind the accelerated solvers.

``MaxTree`` is a range-add / range-max segment tree whose kernels are
compiled with numba so the 2D sweeps can call them from jitted code as
well.  The monotonic stack and deque are plain Python; ``PrefixTable2D``
is a numpy cumulative-sum table.
"""
from bisect import bisect_left
from collections import deque

import numpy as np
from numba import njit

NEG_INF = np.iinfo(np.int64).min // 4


# -- segment tree kernels ---------------------------------------------------
#
# Bottom-up layout: leaves at [base, base + size), node i has children 2i and
# 2i+1.  best[i] = max(best[2i], best[2i+1]) + lazy[i]; leaf lazies are folded
# into best directly.  arg[i] is the leaf index attaining best[i].

@njit(cache=True)
def _tree_init(best, lazy, arg, base, size):
    for i in range(2 * base):
        best[i] = NEG_INF
        lazy[i] = 0
        arg[i] = 0
    for j in range(size):
        best[base + j] = 0
        arg[base + j] = j
    for j in range(size, base):
        arg[base + j] = j
    for i in range(base - 1, 0, -1):
        _pull(best, lazy, arg, i)


@njit(cache=True)
def _pull(best, lazy, arg, i):
    a = best[2 * i]
    b = best[2 * i + 1]
    if a >= b:
        best[i] = a + lazy[i]
        arg[i] = arg[2 * i]
    else:
        best[i] = b + lazy[i]
        arg[i] = arg[2 * i + 1]


@njit(cache=True)
def _apply(best, lazy, base, i, delta):
    best[i] += delta
    if i < base:
        lazy[i] += delta


@njit(cache=True)
def tree_add(best, lazy, arg, base, l, r, delta):
    lo = l + base
    hi = r + base + 1
    l0 = lo
    r0 = hi - 1
    while lo < hi:
        if lo & 1:
            _apply(best, lazy, base, lo, delta)
            lo += 1
        if hi & 1:
            hi -= 1
            _apply(best, lazy, base, hi, delta)
        lo >>= 1
        hi >>= 1
    i = l0 >> 1
    while i > 0:
        _pull(best, lazy, arg, i)
        i >>= 1
    i = r0 >> 1
    while i > 0:
        _pull(best, lazy, arg, i)
        i >>= 1


@njit(cache=True)
def _ancestor_lazy(lazy, i):
    total = 0
    i >>= 1
    while i > 0:
        total += lazy[i]
        i >>= 1
    return total


@njit(cache=True)
def tree_max(best, lazy, base, l, r):
    lo = l + base
    hi = r + base + 1
    res = NEG_INF
    while lo < hi:
        if lo & 1:
            v = best[lo] + _ancestor_lazy(lazy, lo)
            if v > res:
                res = v
            lo += 1
        if hi & 1:
            hi -= 1
            v = best[hi] + _ancestor_lazy(lazy, hi)
            if v > res:
                res = v
        lo >>= 1
        hi >>= 1
    return res


class MaxTree:
    """Segment tree over ``size`` int64 leaves, all starting at zero.

    Indices are 0-based and inclusive.  Values are exact as long as they
    stay below 2**62 in magnitude.
    """

    def __init__(self, size):
        if size < 1:
            raise ValueError("MaxTree needs at least one leaf")
        self.size = int(size)
        base = 1
        while base < self.size:
            base *= 2
        self._base = base
        self._best = np.empty(2 * base, dtype=np.int64)
        self._lazy = np.empty(2 * base, dtype=np.int64)
        self._arg = np.empty(2 * base, dtype=np.int64)
        _tree_init(self._best, self._lazy, self._arg, base, self.size)

    def _check(self, l, r):
        if not (0 <= l <= r < self.size):
            raise ValueError(f"range [{l}, {r}] outside [0, {self.size - 1}]")

    def range_add(self, l, r, delta):
        self._check(l, r)
        tree_add(self._best, self._lazy, self._arg, self._base, l, r, delta)

    def range_max(self, l, r):
        self._check(l, r)
        return int(tree_max(self._best, self._lazy, self._base, l, r))

    def global_max(self):
        """Return ``(value, leaf)`` for the maximum over all leaves."""
        return int(self._best[1]), int(self._arg[1])

    def values(self):
        return [self.range_max(i, i) for i in range(self.size)]


# -- monotonic stack / deque ------------------------------------------------

class MonoStack:
    """Stack of (position, value) pairs, both strictly increasing upwards.

    ``min_from(t)`` returns the smallest value stored at a position >= t,
    located by binary search.
    """

    def __init__(self):
        self.positions = []
        self.values = []
        self.pushes = 0
        self.pops = 0

    def __len__(self):
        return len(self.positions)

    def pairs(self):
        return list(zip(self.positions, self.values))

    def insert(self, position, value):
        if self.positions and position < self.positions[-1]:
            raise ValueError("positions must be inserted in nondecreasing order")
        while self.values and self.values[-1] >= value:
            self.positions.pop()
            self.values.pop()
            self.pops += 1
        self.positions.append(position)
        self.values.append(value)
        self.pushes += 1

    def min_from(self, threshold):
        k = bisect_left(self.positions, threshold)
        if k == len(self.positions):
            return None
        return self.values[k]

    def top_from(self, threshold):
        """Like ``min_from`` but returns the whole ``(position, value)`` pair."""
        k = bisect_left(self.positions, threshold)
        if k == len(self.positions):
            return None
        return self.positions[k], self.values[k]


class MonoDeque:
    """Sliding-window minimum over (position, value) pairs.

    Back insertions drop pairs whose value is >= the new one; front
    evictions drop pairs whose position is below the window start.
    """

    def __init__(self):
        self._items = deque()
        self.pushes = 0
        self.pops = 0

    def __len__(self):
        return len(self._items)

    def pairs(self):
        return list(self._items)

    def push(self, position, value):
        items = self._items
        while items and items[-1][1] >= value:
            items.pop()
            self.pops += 1
        items.append((position, value))
        self.pushes += 1

    def evict_before(self, position):
        items = self._items
        while items and items[0][0] < position:
            items.popleft()
            self.pops += 1

    def front(self):
        return self._items[0] if self._items else None

    def insert_and_query(self, insert, evict_before):
        if insert is not None:
            self.push(*insert)
        self.evict_before(evict_before)
        head = self.front()
        return None if head is None else head[1]


# -- 2D prefix sums ---------------------------------------------------------

class PrefixTable2D:
    """Cumulative weights of an ``m x m`` grid.

    ``wsum[i + 1, j + 1]`` is the total weight of cells ``(a, b)`` with
    ``a <= i`` and ``b <= j``; row and column zero are padding.
    """

    def __init__(self, grid):
        grid = np.asarray(grid, dtype=np.int64)
        if grid.ndim != 2:
            raise ValueError("grid must be two-dimensional")
        self.shape = grid.shape
        self.m = grid.shape[0]
        wsum = np.zeros((grid.shape[0] + 1, grid.shape[1] + 1), dtype=np.int64)
        wsum[1:, 1:] = grid.cumsum(axis=0).cumsum(axis=1)
        self.wsum = wsum

    def rect_sum(self, x1, y1, x2, y2):
        nx, ny = self.shape
        if not (0 <= x1 <= x2 < nx and 0 <= y1 <= y2 < ny):
            raise ValueError(f"rectangle ({x1},{y1})-({x2},{y2}) outside the grid")
        s = self.wsum
        return int(s[x2 + 1, y2 + 1] - s[x1, y2 + 1] - s[x2 + 1, y1] + s[x1, y1])


def prefix_rect_sum(table, x1, y1, x2, y2):
    return table.rect_sum(x1, y1, x2, y2)
