import pytest

import gen
from geocover.cover1d import (INTERVALS_COVER_POINTS as ICP, POINT, LEFT, RIGHT,
                              POINTS_COVER_INTERVALS as PCI, Cover1DInstance,
                              build_event_array, check_cover, min_weight_interval_cover,
                              min_weight_point_cover, minmax_cover, prune_nested_intervals,
                              threshold_feasible)
from geocover.oracle import oracle_cover1d

SMALL = Cover1DInstance([(1, 1), (3, 1)], [(0, 2, 5), (2, 4, 3), (0, 4, 7)])


def test_event_array_example():
    ev = build_event_array(Cover1DInstance([(1, 1), (3, 1)], [(0, 2, 1), (2, 4, 1)]))
    assert ev.p[1:] == [0, 1, 2, 2, 3, 4]
    assert ev.type[1:] == [LEFT, POINT, LEFT, RIGHT, POINT, RIGHT]
    assert ev.lpos[4] == 1
    assert len(build_event_array(Cover1DInstance())) == 0
    ev = build_event_array(Cover1DInstance([(2, 1)], [(2, 2, 1)]))
    assert ev.type[1:] == [LEFT, POINT, RIGHT]


def test_event_array_links_match_scan(rng):
    for _ in range(200):
        pts, ivs = gen.cover1d(rng)
        ev = build_event_array(Cover1DInstance(pts, ivs))
        for i in range(1, len(ev) + 1):
            before = range(i - 1, 0, -1)
            if ev.type[i] == POINT:
                want = next((k for k in before if ev.type[k] == RIGHT), 0)
                assert ev.lrint[i] == want
            else:
                want = next((k for k in before if ev.type[k] == POINT), 0)
                assert ev.lpoint[i] == want
            if ev.type[i] == RIGHT:
                k = ev.lpos[i]
                assert ev.type[k] == LEFT and ev.index[k] == ev.index[i]
                assert ev.p[k] <= ev.p[i]


def test_rejects_reversed_interval():
    with pytest.raises(ValueError):
        Cover1DInstance([], [(3, 1, 1)])


def test_interval_cover_examples():
    s = min_weight_interval_cover(SMALL)
    assert s.value == 7 and s.witness == [2]
    assert min_weight_interval_cover(Cover1DInstance([], [(0, 1, 4)])).value == 0
    assert not min_weight_interval_cover(Cover1DInstance([(10, 1)], [(0, 2, 1)])).feasible


def test_prune_examples():
    assert prune_nested_intervals([(0, 4, 1), (1, 2, 1), (3, 5, 1)]) == [(1, 2, 1), (3, 5, 1)]
    assert prune_nested_intervals([(1, 2, 1), (1, 2, 9)]) == [(1, 2, 1)]
    ivs = [(0, 2, 1), (1, 3, 1), (5, 6, 1)]
    assert prune_nested_intervals(ivs) == ivs


def test_prune_leaves_no_nesting(rng):
    for _ in range(300):
        _, ivs = gen.cover1d(rng, m_max=10)
        out = prune_nested_intervals(ivs)
        for a in out:
            for b in out:
                if a is not b:
                    assert not (a[0] <= b[0] and b[1] <= a[1])
        # every input interval contains some survivor
        for l, h, _ in ivs:
            assert any(l <= a and b <= h for a, b, _ in out)


def test_point_cover_examples():
    inst = Cover1DInstance([(1, 2), (4, 3), (5, 4)], [(0, 2, 1), (1, 5, 1), (4, 6, 1)])
    s = min_weight_point_cover(inst)
    assert s.value == 5 and s.witness == [0, 1]
    assert min_weight_point_cover(Cover1DInstance([(3, 6)], [(1, 4, 1)])).value == 6
    assert not min_weight_point_cover(Cover1DInstance([(1, 1)], [(7, 8, 1)])).feasible


def test_threshold_examples():
    assert threshold_feasible(SMALL, ICP, 5)
    assert not threshold_feasible(SMALL, ICP, 3)
    assert threshold_feasible(Cover1DInstance([], [(0, 1, 1)]), ICP, 0)


def test_minmax_examples():
    assert minmax_cover(SMALL, ICP, "min-max").value == 5
    s = minmax_cover(SMALL, ICP, "max-min")
    assert s.value == 7
    check_cover(SMALL, ICP, s, "max-min")
    one = Cover1DInstance([(1, 1)], [(0, 2, 6)])
    assert minmax_cover(one, ICP, "min-max").value == 6
    assert minmax_cover(one, ICP, "max-min").value == 6


def _both(rng):
    pts, ivs = gen.cover1d(rng)
    return Cover1DInstance(pts, ivs), pts, ivs


def _agrees(sol, want):
    if want is None:
        return not sol.feasible
    return sol.feasible and sol.value == want


def test_interval_cover_matches_oracle(rng):
    for _ in range(300):
        inst, pts, ivs = _both(rng)
        s = min_weight_interval_cover(inst)
        assert _agrees(s, oracle_cover1d(pts, ivs, ICP))
        if s.feasible:
            check_cover(inst, ICP, s)


def test_point_cover_matches_oracle(rng):
    for _ in range(300):
        inst, pts, ivs = _both(rng)
        s = min_weight_point_cover(inst)
        assert _agrees(s, oracle_cover1d(pts, ivs, PCI))
        if s.feasible:
            check_cover(inst, PCI, s)


@pytest.mark.parametrize("mode", [ICP, PCI])
@pytest.mark.parametrize("objective", ["min-max", "max-min"])
def test_minmax_matches_oracle(rng, mode, objective):
    for _ in range(200):
        inst, pts, ivs = _both(rng)
        s = minmax_cover(inst, mode, objective)
        assert _agrees(s, oracle_cover1d(pts, ivs, mode, objective))
        if s.feasible:
            check_cover(inst, mode, s, objective)


def test_pruning_keeps_value_on_nest_free_input(rng):
    # without nesting both code paths must agree
    for _ in range(300):
        pts, ivs = gen.cover1d(rng)
        nest_free = prune_nested_intervals(ivs)
        a = min_weight_point_cover(Cover1DInstance(pts, ivs))
        b = min_weight_point_cover(Cover1DInstance(pts, nest_free), prune=False)
        assert a.feasible == b.feasible and (not a.feasible or a.value == b.value)


def test_threshold_monotone(rng):
    for _ in range(200):
        inst, _, _ = _both(rng)
        ws = sorted({w for _, _, w in inst.intervals})
        flags = [threshold_feasible(inst, ICP, w) for w in ws]
        assert flags == sorted(flags)
        ws = sorted({w for _, w in inst.points})
        flags = [threshold_feasible(inst, PCI, w, keep="ge") for w in ws]
        assert flags == sorted(flags, reverse=True)
