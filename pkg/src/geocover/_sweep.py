"""Compiled sweep kernels for fixed-size rectangle placement.

Coordinates, sizes and weights are int64.  A placement is reported as its
lower-left corner.  All kernels take the point set in *insertion order*:
``xs`` must be nondecreasing.
"""
import numpy as np
from numba import njit

NONE = np.iinfo(np.int64).min
_NEG = NONE // 4


# A lean range-add / global-max tree for the sweeps: node i stores
# t[i, 0] = max over its subtree (own lazy included) and t[i, 1] = its lazy.
# No argmax array is kept; ``_argmax`` walks down from the root instead,
# which the sweep only needs when the running best improves.

@njit(cache=True)
def _new_tree(size):
    base = 1
    while base < size:
        base *= 2
    t = np.zeros((2 * base, 2), dtype=np.int64)
    for j in range(size, base):
        t[base + j, 0] = _NEG
    for i in range(base - 1, 0, -1):
        t[i, 0] = max(t[2 * i, 0], t[2 * i + 1, 0])
    return t, base


@njit(cache=True)
def _add(t, base, l, r, delta):
    lo = l + base
    hi = r + base + 1
    a = lo >> 1
    b = (hi - 1) >> 1
    while lo < hi:
        if lo & 1:
            t[lo, 0] += delta
            t[lo, 1] += delta
            lo += 1
        if hi & 1:
            hi -= 1
            t[hi, 0] += delta
            t[hi, 1] += delta
        lo >>= 1
        hi >>= 1
    # refresh the two boundary paths; they merge below the root
    while a != b:
        if a > b:
            t[a, 0] = max(t[2 * a, 0], t[2 * a + 1, 0]) + t[a, 1]
            a >>= 1
        else:
            t[b, 0] = max(t[2 * b, 0], t[2 * b + 1, 0]) + t[b, 1]
            b >>= 1
    while a > 0:
        t[a, 0] = max(t[2 * a, 0], t[2 * a + 1, 0]) + t[a, 1]
        a >>= 1


@njit(cache=True)
def _argmax(t, base):
    i = 1
    while i < base:
        target = t[i, 0] - t[i, 1]
        i = 2 * i if t[2 * i, 0] == target else 2 * i + 1
    return i - base


@njit(cache=True)
def sweep_prefix(xs, ys, ws, lx, ly, best, corner_x, corner_y):
    """Best single placement over every prefix of the insertion order.

    Leaves of the tree are the y-sorted coordinates, read as candidate
    bottom edges; a point adds its weight to every bottom edge in
    ``[y - ly, y]``.  The vertical window ``[X - lx, X]`` follows the
    current point's x-coordinate.
    """
    n = xs.shape[0]
    if n == 0:
        return
    ysorted = np.sort(ys)
    lo = np.searchsorted(ysorted, ys - ly)
    hi = np.searchsorted(ysorted, ys, side="right") - 1
    t, base = _new_tree(n)
    tail = 0
    run = np.int64(0)
    cx = NONE
    cy = NONE
    for i in range(n):
        X = xs[i]
        while tail < i and xs[tail] < X - lx:
            _add(t, base, lo[tail], hi[tail], -ws[tail])
            tail += 1
        _add(t, base, lo[i], hi[i], ws[i])
        v = t[1, 0]
        if v > run:
            run = v
            cx = X - lx
            cy = ysorted[_argmax(t, base)]
        best[i] = run
        corner_x[i] = cx
        corner_y[i] = cy


@njit(cache=True)
def best_single(xs, ys, ws, lx, ly):
    """Best single placement over an arbitrary point set."""
    n = xs.shape[0]
    if n == 0:
        return np.int64(0), NONE, NONE
    order = np.argsort(xs)
    best = np.empty(n, dtype=np.int64)
    cx = np.empty(n, dtype=np.int64)
    cy = np.empty(n, dtype=np.int64)
    sweep_prefix(xs[order], ys[order], ws[order], lx, ly, best, cx, cy)
    return best[n - 1], cx[n - 1], cy[n - 1]


@njit(cache=True)
def lex_order(xs, ys, flip):
    """Indices sorted by x, ties by y (descending y when ``flip``).

    Both coordinates are packed into one int64 key; with |coordinate| <=
    1e9 the product of the two ranges stays below 2**63.
    """
    n = xs.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    xlo = xs.min()
    ylo = ys.min()
    yhi = ys.max()
    span = yhi - ylo + 1
    key = np.empty(n, dtype=np.int64)
    for i in range(n):
        dy = yhi - ys[i] if flip else ys[i] - ylo
        key[i] = (xs[i] - xlo) * span + dy
    return np.argsort(key)


@njit(cache=True)
def split_tables(xs, ys, ws, lx, ly):
    """Prefix and suffix best-single tables along one lex order.

    ``pre[i]`` is the best over the first ``i`` points, ``suf[i]`` over the
    points from ``i`` on; both have length n + 1.  Corners for suffix
    entries come from a mirrored sweep and are mapped back.
    """
    n = xs.shape[0]
    pre = np.zeros(n + 1, dtype=np.int64)
    suf = np.zeros(n + 1, dtype=np.int64)
    pre_x = np.full(n + 1, NONE, dtype=np.int64)
    pre_y = np.full(n + 1, NONE, dtype=np.int64)
    suf_x = np.full(n + 1, NONE, dtype=np.int64)
    suf_y = np.full(n + 1, NONE, dtype=np.int64)
    if n == 0:
        return pre, suf, pre_x, pre_y, suf_x, suf_y
    b = np.empty(n, dtype=np.int64)
    bx = np.empty(n, dtype=np.int64)
    by = np.empty(n, dtype=np.int64)
    sweep_prefix(xs, ys, ws, lx, ly, b, bx, by)
    pre[1:] = b
    pre_x[1:] = bx
    pre_y[1:] = by
    rx = -xs[::-1].copy()
    sweep_prefix(rx, ys[::-1].copy(), ws[::-1].copy(), lx, ly, b, bx, by)
    for k in range(n):
        i = n - 1 - k
        suf[i] = b[k]
        if bx[k] != NONE:
            # mirrored right edge X' maps back to the left edge -X'
            suf_x[i] = -(bx[k] + lx)
            suf_y[i] = by[k]
    return pre, suf, pre_x, pre_y, suf_x, suf_y


@njit(cache=True)
def best_pair(xs, ys, ws, lx, ly):
    """Best two interior-disjoint placements over a point set.

    Tries every split of the four lex orders (x then +-y, y then +-x);
    splitting inside a run of equal coordinates lets two placements that
    touch along that line share its points.

    Returns ``(value, ax, ay, bx, by, swap, flip, split)``: the corners
    (``NONE`` when unused) and the winning order and split position.
    """
    n = xs.shape[0]
    best = np.int64(0)
    ax = NONE
    ay = NONE
    bx = NONE
    by = NONE
    bswap = 0
    bflip = False
    bsplit = 0
    if n == 0:
        return best, ax, ay, bx, by, bswap, bflip, bsplit
    for swap in range(2):
        if swap == 0:
            px, py, sx, sy = xs, ys, lx, ly
        else:
            px, py, sx, sy = ys, xs, ly, lx
        for flip in (False, True):
            order = lex_order(px, py, flip)
            ox = px[order]
            oy = py[order]
            ow = ws[order]
            pre, suf, prx, pry, sux, suy = split_tables(ox, oy, ow, sx, sy)
            for i in range(n + 1):
                v = pre[i] + suf[i]
                if v > best:
                    best = v
                    bswap, bflip, bsplit = swap, flip, i
                    if swap == 0:
                        ax, ay, bx, by = prx[i], pry[i], sux[i], suy[i]
                    else:
                        ax, ay, bx, by = pry[i], prx[i], suy[i], sux[i]
    return best, ax, ay, bx, by, bswap, bflip, bsplit
