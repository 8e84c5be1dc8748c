"""Rectangles in the plane.

Part one covers every point with up to three axis-aligned rectangles of
smallest total area.  Part two drops three disjoint fixed-size windows on
a large weighted point cloud to catch as much weight as possible, and
compares the point solver with the grid solver on a small heat map.
"""
import time

import numpy as np

from geocover.cover2d import cover_all_points, max_weight_fixed_rects
from geocover.grid import grid_points, max_weight_fixed_rects_grid

clusters = [(0, 0), (1, 2), (2, 1), (40, 40), (41, 43), (80, 5), (82, 7)]
for K in (1, 2, 3):
    sol = cover_all_points(clusters, K, "min-sum")
    print(f"K={K}: total area {sol.value}  rects {[(r.x0, r.y0, r.lx, r.ly) for r in sol.witness]}")

plus = [(5, 0), (5, 10), (0, 5), (10, 5)]
print("plus sign, two rectangles, min-max area:", cover_all_points(plus, 2, "min-max").value)

rng = np.random.default_rng(3)
n = 50_000
hot = rng.normal(5e5, 4e4, (n // 2, 2)).astype(np.int64)
cold = rng.integers(0, 10**6, (n - n // 2, 2))
pts = np.column_stack([np.vstack([hot, cold]), rng.integers(1, 10, n)])
max_weight_fixed_rects(pts[:10], 2, 1, 1)  # warm up the compiled kernels
for K in (1, 2):
    t = time.perf_counter()
    sol = max_weight_fixed_rects(pts, K, 20_000, 20_000)
    print(f"{n} points, K={K}: weight {sol.value} in {time.perf_counter() - t:.2f}s")

heat = rng.integers(0, 6, (10, 10)) * (rng.random((10, 10)) < 0.4)
for K in (1, 2, 3):
    a = max_weight_fixed_rects_grid(heat, K, 2, 3)
    b = max_weight_fixed_rects(grid_points(heat), K, 2, 3).value
    print(f"grid K={K}: {a} (point solver says {b})")
