import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from geocover.ds import MaxTree, MonoDeque, MonoStack, PrefixTable2D, prefix_rect_sum


def test_tree_examples():
    t = MaxTree(3)
    t.range_add(0, 1, 5)
    assert t.values() == [5, 5, 0]
    t.range_add(1, 2, -2)
    assert t.values() == [5, 3, -2]
    assert t.range_max(0, 2) == 5
    assert t.range_max(2, 2) == -2
    t.range_add(0, 2, 0)
    assert t.values() == [5, 3, -2]
    assert MaxTree(4).range_max(0, 3) == 0


def test_tree_rejects_bad_ranges():
    t = MaxTree(4)
    for l, r in ((-1, 2), (0, 4), (3, 2)):
        with pytest.raises(ValueError):
            t.range_add(l, r, 1)
        with pytest.raises(ValueError):
            t.range_max(l, r)


ops = st.lists(st.tuples(st.booleans(), st.integers(0, 20), st.integers(0, 20),
                         st.integers(-50, 50)), max_size=60)


@given(st.integers(1, 21), ops)
def test_tree_matches_array(size, seq):
    t = MaxTree(size)
    ref = [0] * size
    for is_add, a, b, d in seq:
        l, r = sorted((a % size, b % size))
        if is_add:
            t.range_add(l, r, d)
            for i in range(l, r + 1):
                ref[i] += d
        else:
            assert t.range_max(l, r) == max(ref[l:r + 1])
    value, leaf = t.global_max()
    assert value == max(ref) and ref[leaf] == value


def test_stack_examples():
    s = MonoStack()
    s.insert(1, 4)
    s.insert(3, 2)
    assert s.pairs() == [(3, 2)]
    s = MonoStack()
    s.insert(1, 2)
    s.insert(3, 5)
    assert s.pairs() == [(1, 2), (3, 5)]
    assert s.min_from(2) == 5
    assert s.min_from(0) == 2
    assert MonoStack().min_from(4) is None
    s = MonoStack()
    s.insert(0, 7)
    assert s.pairs() == [(0, 7)]


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-20, 20)), max_size=40),
       st.integers(0, 80))
def test_stack_min_from_is_suffix_minimum(steps, threshold):
    s = MonoStack()
    pos = 0
    history = []
    for gap, v in steps:
        pos += gap
        s.insert(pos, v)
        history.append((pos, v))
        # a later insert hides every earlier pair whose value is not smaller
        live = [(p, w) for i, (p, w) in enumerate(history)
                if all(w < w2 for _, w2 in history[i + 1:])]
        assert s.pairs() == live
    cands = [v for p, v in s.pairs() if p >= threshold]
    assert s.min_from(threshold) == (min(cands) if cands else None)
    assert s.pushes - s.pops == len(s)


def test_deque_examples():
    d = MonoDeque()
    d.push(1, 4)
    d.push(2, 3)
    assert d.pairs() == [(2, 3)]
    d = MonoDeque()
    d.push(2, 3)
    d.push(5, 9)
    assert d.insert_and_query(None, 3) == 9
    assert MonoDeque().insert_and_query(None, 0) is None


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(0, 2)), max_size=60))
def test_deque_is_window_minimum(steps):
    d = MonoDeque()
    start = 0
    values = []
    for i, (v, advance) in enumerate(steps):
        start = min(start + advance, i)
        values.append(v)
        got = d.insert_and_query((i, v), start)
        assert got == min(values[start:i + 1])


def test_prefix_table_examples():
    t = PrefixTable2D([[1, 2], [3, 4]])
    assert t.rect_sum(0, 0, 1, 1) == 10
    assert t.rect_sum(1, 1, 1, 1) == 4
    # first index is x: column x = 0 holds 1 and 2
    assert prefix_rect_sum(t, 0, 0, 0, 1) == 3
    assert prefix_rect_sum(t, 0, 0, 1, 0) == 1 + 3
    with pytest.raises(ValueError):
        t.rect_sum(0, 0, 2, 1)


def test_prefix_table_random(rng):
    g = rng.integers(-5, 6, (7, 7))
    t = PrefixTable2D(g)
    for _ in range(200):
        x1, x2 = sorted(rng.integers(0, 7, 2))
        y1, y2 = sorted(rng.integers(0, 7, 2))
        assert t.rect_sum(x1, y1, x2, y2) == g[x1:x2 + 1, y1:y2 + 1].sum()
