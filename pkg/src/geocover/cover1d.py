"""Covers on a line: intervals covering points and points covering intervals.

Every solver walks a single sorted *event array* holding the points and
both endpoints of every interval.  At equal coordinates the order is
left endpoint, point, right endpoint, so closed containment is exactly what
the index windows see.  Event positions are 1-based and 0 means "none".
"""
from dataclasses import dataclass, field

from .ds import MonoDeque, MonoStack
from .solution import OK, Solution

LEFT, POINT, RIGHT = 0, 1, 2
INF = float("inf")

INTERVALS_COVER_POINTS = "intervals-cover-points"
POINTS_COVER_INTERVALS = "points-cover-intervals"
MODES = (INTERVALS_COVER_POINTS, POINTS_COVER_INTERVALS)


@dataclass
class Cover1DInstance:
    """``points`` are ``(x, weight)`` pairs, ``intervals`` are ``(l, h, weight)``."""

    points: list = field(default_factory=list)
    intervals: list = field(default_factory=list)

    def __post_init__(self):
        self.points = [(int(x), int(w)) for x, w in self.points]
        self.intervals = [(int(l), int(h), int(w)) for l, h, w in self.intervals]
        for j, (l, h, _) in enumerate(self.intervals):
            if l > h:
                raise ValueError(f"interval {j} has l={l} > h={h}")


@dataclass
class EventArray:
    """Sorted merge of points and interval endpoints (slot 0 is a sentinel)."""

    p: list
    type: list
    index: list
    lpos: list
    lpoint: list
    lrint: list

    def __len__(self):
        return len(self.p) - 1

    def positions(self, kind):
        return [i for i in range(1, len(self.p)) if self.type[i] == kind]


def build_event_array(inst, interval_ids=None):
    """Sort the events of ``inst``; ``interval_ids`` restricts the intervals used."""
    if interval_ids is None:
        interval_ids = range(len(inst.intervals))
    keyed = []
    for i, (x, _) in enumerate(inst.points):
        keyed.append((x, POINT, i))
    for j in interval_ids:
        l, h, _ = inst.intervals[j]
        if l > h:
            raise ValueError(f"interval {j} has l={l} > h={h}")
        keyed.append((l, LEFT, j))
        keyed.append((h, RIGHT, j))
    keyed.sort()

    size = len(keyed) + 1
    p = [None] * size
    kind = [None] * size
    index = [0] * size
    lpos = [0] * size
    lpoint = [0] * size
    lrint = [0] * size
    left_at = {}
    last_point = 0
    last_right = 0
    for pos, (x, t, j) in enumerate(keyed, start=1):
        p[pos], kind[pos], index[pos] = x, t, j
        if t == POINT:
            lrint[pos] = last_right
            last_point = pos
        else:
            lpoint[pos] = last_point
            if t == LEFT:
                left_at[j] = pos
            else:
                lpos[pos] = left_at[j]
                last_right = pos
    return EventArray(p, kind, index, lpos, lpoint, lrint)


def min_weight_interval_cover(inst, events=None):
    """Cheapest subset of intervals covering every point.

    ``T`` at a point is the cheapest cover of all points up to it.  A right
    endpoint extends the best value found at or after the last point before
    its left endpoint; those values are read from a monotonic stack.
    """
    ev = events if events is not None else build_event_array(inst)
    n_events = len(ev)
    T = [INF] * (n_events + 1)
    setter = [0] * (n_events + 1)
    pred = [0] * (n_events + 1)
    stack = MonoStack()
    last_point = 0
    kind, index, lpos, lpoint = ev.type, ev.index, ev.lpos, ev.lpoint
    intervals = inst.intervals
    for i in range(1, n_events + 1):
        t = kind[i]
        if t == POINT:
            last_point = i
            continue
        if t != RIGHT:
            continue
        w = intervals[index[i]][2]
        first = lpoint[lpos[i]]
        if first == 0:
            value, before = w, 0
        else:
            hit = stack.top_from(first)
            if hit is None:
                continue
            before, value = hit[0], hit[1] + w
        q = lpoint[i]
        if q > 0 and value < T[q]:
            T[q] = value
            setter[q] = i
            pred[i] = before
            stack.insert(q, value)

    if last_point == 0:
        return Solution(OK, 0, [])
    if T[last_point] == INF:
        return Solution.infeasible()
    chosen = []
    q = last_point
    while q:
        i = setter[q]
        chosen.append(index[i])
        q = pred[i]
    return Solution(OK, T[last_point], sorted(chosen))


def _prune_indices(intervals):
    """Indices of the intervals that contain no other interval.

    Sweep the endpoints keeping the open, unmarked intervals ordered by left
    endpoint.  Closing an unmarked interval marks every open interval whose
    left endpoint is not larger, since those contain it.  Among exact
    duplicates the first in input order survives.
    """
    events = []
    for j, (l, h, _) in enumerate(intervals):
        events.append((l, 0, 0, 0, j))
        # right endpoints at equal h close the innermost (largest l) first
        events.append((h, 1, -l, j, j))
    events.sort()
    open_by_left = []  # left endpoints arrive in sorted order: a queue
    head = 0
    closed = [False] * len(intervals)
    marked = [False] * len(intervals)
    for _, kind, _, _, j in events:
        if kind == 0:
            open_by_left.append(j)
            continue
        closed[j] = True
        if marked[j]:
            continue
        lj = intervals[j][0]
        while head < len(open_by_left):
            k = open_by_left[head]
            if intervals[k][0] > lj:
                break
            head += 1
            if k != j and not closed[k] and not marked[k]:
                marked[k] = True
        # k > head entries with larger left endpoints stay open
    return [j for j in range(len(intervals)) if not marked[j]]


def prune_nested_intervals(intervals):
    intervals = [tuple(iv) for iv in intervals]
    return [intervals[j] for j in _prune_indices(intervals)]


def min_weight_point_cover(inst, prune=True):
    """Cheapest subset of points hitting every interval.

    After nested intervals are dropped, ``T`` at a point is its weight plus
    ``T`` at the rightmost right endpoint before it, and ``T`` at a right
    endpoint is the minimum over the points inside that interval, read off
    a sliding-window deque.  ``prune=False`` skips the nesting filter and
    is only correct when no interval contains another.
    """
    if prune:
        ids = _prune_indices(inst.intervals)
    else:
        ids = range(len(inst.intervals))
    ev = build_event_array(inst, ids)
    n_events = len(ev)
    if not any(t == RIGHT for t in ev.type[1:]):
        return Solution(OK, 0, [])
    T = [INF] * (n_events + 1)
    arg = [0] * (n_events + 1)
    dq = MonoDeque()
    last_right = 0
    kind, index, lpos, lrint = ev.type, ev.index, ev.lpos, ev.lrint
    for i in range(1, n_events + 1):
        t = kind[i]
        if t == POINT:
            r = lrint[i]
            prev = T[r] if r else 0
            T[i] = inst.points[index[i]][1] + prev
            dq.push(i, T[i])
        elif t == RIGHT:
            dq.evict_before(lpos[i] + 1)
            head = dq.front()
            if head is not None:
                arg[i], T[i] = head
            last_right = i
    if T[last_right] == INF:
        return Solution.infeasible()
    chosen = []
    i = last_right
    while i:
        q = arg[i]
        chosen.append(index[q])
        i = lrint[q]
    return Solution(OK, T[last_right], sorted(chosen))


def threshold_feasible(inst, mode, W, keep="le", events=None):
    """Can the elements passing the weight filter still cover everything?

    ``keep="le"`` keeps covering elements of weight <= W, ``"ge"`` those of
    weight >= W.  One linear sweep over a prebuilt event array.
    """
    ev = events if events is not None else build_event_array(inst)
    passes = (lambda w: w <= W) if keep == "le" else (lambda w: w >= W)
    kind, index = ev.type, ev.index
    if mode == INTERVALS_COVER_POINTS:
        nopen = 0
        for i in range(1, len(ev) + 1):
            t = kind[i]
            if t == POINT:
                if nopen <= 0:
                    return False
            elif passes(inst.intervals[index[i]][2]):
                nopen += 1 if t == LEFT else -1
        return True
    if mode == POINTS_COVER_INTERVALS:
        last = None
        for i in range(1, len(ev) + 1):
            t = kind[i]
            if t == POINT:
                if passes(inst.points[index[i]][1]):
                    last = ev.p[i]
            elif t == RIGHT:
                if last is None or last < inst.intervals[index[i]][0]:
                    return False
        return True
    raise ValueError(f"unknown mode {mode!r}")


def minmax_cover(inst, mode, objective="min-max"):
    """Min-max or max-min weighted cover by binary search on the threshold."""
    if mode == INTERVALS_COVER_POINTS:
        covering = [w for _, _, w in inst.intervals]
        has_targets = bool(inst.points)
    elif mode == POINTS_COVER_INTERVALS:
        covering = [w for _, w in inst.points]
        has_targets = bool(inst.intervals)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if objective not in ("min-max", "max-min"):
        raise ValueError(f"unknown objective {objective!r}")
    if not has_targets:
        return Solution(OK, 0, [])
    ev = build_event_array(inst)
    weights = sorted(set(covering))
    keep = "le" if objective == "min-max" else "ge"

    def ok(k):
        return threshold_feasible(inst, mode, weights[k], keep, ev)

    if objective == "min-max":
        if not weights or not ok(len(weights) - 1):
            return Solution.infeasible()
        lo, hi = 0, len(weights) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if ok(mid):
                hi = mid
            else:
                lo = mid + 1
        W = weights[lo]
        chosen = [i for i, w in enumerate(covering) if w <= W]
    else:
        if not weights or not ok(0):
            return Solution.infeasible()
        lo, hi = 0, len(weights) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if ok(mid):
                lo = mid
            else:
                hi = mid - 1
        W = weights[lo]
        chosen = [i for i, w in enumerate(covering) if w >= W]
    return Solution(OK, W, chosen)


def check_cover(inst, mode, solution, objective="min-weight"):
    """Raise ``AssertionError`` unless the witness covers and re-aggregates."""
    chosen = solution.witness
    if mode == INTERVALS_COVER_POINTS:
        for x, _ in inst.points:
            assert any(inst.intervals[j][0] <= x <= inst.intervals[j][1] for j in chosen), \
                f"point {x} uncovered"
        weights = [inst.intervals[j][2] for j in chosen]
    else:
        for l, h, _ in inst.intervals:
            assert any(l <= inst.points[i][0] <= h for i in chosen), f"interval [{l}, {h}] unhit"
        weights = [inst.points[i][1] for i in chosen]
    if objective == "min-weight":
        got = sum(weights)
    elif not weights:
        got = 0
    elif objective == "min-max":
        got = max(weights)
    else:
        got = min(weights)
    assert got == solution.value, f"witness aggregates to {got}, reported {solution.value}"
