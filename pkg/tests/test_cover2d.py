import numpy as np
import pytest

import gen
from geocover.cover2d import (PrefixExtrema, RectPlacement, best_single_fixed_rect_sweep,
                              check_all_cover, check_fixed_rects, cover_all_points,
                              max_weight_fixed_rects)
from geocover.grid import GridTables, grid_points, max_weight_fixed_rects_grid
from geocover.oracle import oracle_cover2d_all, oracle_cover2d_maxweight

PLUS = [(5, 0), (5, 10), (0, 5), (10, 5)]
THREE = [(0, 0, 2), (1, 1, 3), (5, 5, 1)]


def test_rect_placement():
    r = RectPlacement(0, 0, 2, 3)
    assert r.area == 6 and r.covers(2, 3) and not r.covers(3, 0)
    assert not r.overlaps(RectPlacement(2, 0, 1, 1))  # shared edge
    assert r.overlaps(RectPlacement(1, 1, 5, 5))


def test_prefix_extrema_matches_scan(rng):
    for _ in range(50):
        n = int(rng.integers(1, 12))
        xs = sorted(rng.integers(0, 20, n).tolist())
        ys = rng.integers(0, 20, n).tolist()
        pe = PrefixExtrema(xs, ys)
        for i in range(n + 1):
            assert pe.ycl_max[i] == (max(ys[:i]) if i else None)
            assert pe.ycr_min[i] == (min(ys[i:]) if i < n else None)


def test_all_cover_examples():
    assert cover_all_points([(0, 0), (2, 3)], 1).value == 6
    assert cover_all_points([(0, 0), (2, 3)], 1, shape="square").value == 9
    pts = [(0, 0), (1, 2), (5, 5), (6, 4)]
    assert cover_all_points(pts, 2, "min-sum").value == 3
    assert cover_all_points(pts, 2, "min-max").value == 2
    s = cover_all_points(PLUS, 2, "min-max")
    assert s.value == 0
    check_all_cover(PLUS, 2, "min-max", s)


def test_all_cover_three_strip_regression():
    # the optimum pairs a vertical strip with two flank pieces split across it
    pts = [(5, 0), (5, 10), (0, 5), (10, 5), (1, 8), (2, 8)]
    for obj in ("min-sum", "min-max"):
        s = cover_all_points(pts, 3, obj)
        assert s.value == 0 == oracle_cover2d_all(pts, 3, obj)
        check_all_cover(pts, 3, obj, s)


def test_all_cover_errors():
    with pytest.raises(ValueError):
        cover_all_points([], 1)
    with pytest.raises(ValueError):
        cover_all_points([(0, 0)], 0)
    with pytest.raises(ValueError):
        cover_all_points([(0, 0), (1, 1)], 2, shape="square")


@pytest.mark.parametrize("K", [1, 2, 3])
@pytest.mark.parametrize("objective", ["min-sum", "min-max"])
def test_all_cover_matches_oracle(rng, K, objective):
    for _ in range(40):
        pts = gen.points2d(rng, int(rng.integers(1, 8)))
        s = cover_all_points(pts, K, objective)
        check_all_cover(pts, K, objective, s)
        assert s.value == oracle_cover2d_all(pts, K, objective)


def test_sweep_examples():
    assert max(best_single_fixed_rect_sweep(THREE, 1, 1)) == 5
    assert best_single_fixed_rect_sweep(THREE, 1, 1) == [2, 5, 5]
    assert best_single_fixed_rect_sweep([(3, 4, 7)], 2, 2) == [7]
    assert max(best_single_fixed_rect_sweep(THREE, 0, 0)) == 3


def test_sweep_prefix_and_suffix_match_naive(rng):
    for _ in range(100):
        pts = sorted(gen.points2d(rng, int(rng.integers(1, 7)), span=8, wmax=9))
        lx, ly = (int(v) for v in rng.integers(0, 4, 2))
        pre = best_single_fixed_rect_sweep(pts, lx, ly)
        suf = best_single_fixed_rect_sweep(pts, lx, ly, suffix=True)
        for i in range(len(pts)):
            assert pre[i] == oracle_cover2d_maxweight(pts[:i + 1], 1, lx, ly)
            assert suf[i] == oracle_cover2d_maxweight(pts[i:], 1, lx, ly)


def test_fixed_rect_examples():
    for K, want in ((1, 5), (2, 6), (3, 6)):
        s = max_weight_fixed_rects(THREE, K, 1, 1)
        assert s.value == want
        check_fixed_rects(THREE, K, 1, 1, s)
    assert max_weight_fixed_rects([], 3, 1, 1).value == 0


def test_fixed_rect_shared_edge_regression():
    # both optimal windows meet along the line x = 1
    pts = [(0, 0, 1), (0, 2, 1), (1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 3, 1)]
    s = max_weight_fixed_rects(pts, 2, 1, 2)
    assert s.value == 6 == oracle_cover2d_maxweight(pts, 2, 1, 2)
    check_fixed_rects(pts, 2, 1, 2, s)


def test_fixed_rect_triple_needs_perpendicular_layout():
    pts = [(4, 2, 2), (4, 1, 3), (1, 1, 1), (0, 0, 2), (2, 0, 3),
           (0, 2, 1), (2, 3, 1), (4, 0, 2), (1, 0, 1)]
    s = max_weight_fixed_rects(pts, 3, 2, 2)
    assert s.value == 16
    check_fixed_rects(pts, 3, 2, 2, s)


@pytest.mark.parametrize("K", [1, 2, 3])
def test_fixed_rects_match_oracle(rng, K):
    for _ in range(60):
        pts = gen.points2d(rng, int(rng.integers(0, 7)), span=8, wmax=5)
        lx, ly = (int(v) for v in rng.integers(0, 4, 2))
        s = max_weight_fixed_rects(pts, K, lx, ly)
        check_fixed_rects(pts, K, lx, ly, s)
        assert s.value == oracle_cover2d_maxweight(pts, K, lx, ly)


def test_translation_invariance(rng):
    for _ in range(40):
        pts = gen.points2d(rng, 6, span=8, wmax=5)
        dx, dy = (int(v) for v in rng.integers(-10**6, 10**6, 2))
        moved = [(x + dx, y + dy, w) for x, y, w in pts]
        for K in (1, 2, 3):
            a = max_weight_fixed_rects(pts, K, 2, 1).value
            assert a == max_weight_fixed_rects(moved, K, 2, 1).value
            flat = [p[:2] for p in pts]
            b = cover_all_points(flat, K).value
            assert b == cover_all_points([p[:2] for p in moved], K).value


def test_fixed_rects_monotone_in_k(rng):
    for _ in range(40):
        pts = gen.points2d(rng, 10, span=12, wmax=9)
        vals = [max_weight_fixed_rects(pts, K, 2, 3).value for K in (1, 2, 3)]
        assert vals == sorted(vals)


def test_grid_examples():
    g = [[1, 2], [3, 4]]
    assert max_weight_fixed_rects_grid(g, 1, 0, 0) == 4
    assert max_weight_fixed_rects_grid(g, 1, 1, 1) == 10
    assert max_weight_fixed_rects_grid(g, 1, 5, 5) == 10
    t = GridTables(g, 0, 0)
    assert t.wsum.rect_sum(0, 0, 1, 1) == 10
    assert t.wmax[0][0, 1] == 2 and t.wmax[3][0, 0] == 4


def test_grid_quadrant_tables(rng):
    W = rng.integers(0, 5, (6, 6))
    t = GridTables(W, 1, 2)
    pts = grid_points(W)
    for i in range(6):
        for j in range(6):
            quads = [[p for p in pts if p[0] <= i and p[1] <= j],
                     [p for p in pts if p[0] >= i and p[1] <= j],
                     [p for p in pts if p[0] <= i and p[1] >= j],
                     [p for p in pts if p[0] >= i and p[1] >= j]]
            for q, sub in enumerate(quads):
                want = max_weight_fixed_rects(sub, 1, 1, 2).value
                assert t.wmax[q][i, j] == want


@pytest.mark.parametrize("K", [1, 2, 3])
def test_grid_matches_point_solver(rng, K):
    for _ in range(15):
        m = int(rng.integers(1, 9))
        W = rng.integers(0, 6, (m, m)) * (rng.random((m, m)) < 0.5)
        lx, ly = (int(v) for v in rng.integers(0, 4, 2))
        want = max_weight_fixed_rects(grid_points(W), K, lx, ly).value
        assert max_weight_fixed_rects_grid(W, K, lx, ly) == want


def test_grid_rejects_bad_input():
    with pytest.raises(ValueError):
        max_weight_fixed_rects_grid(np.zeros((2, 3)), 1, 1, 1)
    with pytest.raises(ValueError):
        max_weight_fixed_rects_grid([[-1]], 1, 1, 1)
