"""Cutting a convex polygon with non-crossing diagonals.

A regular-ish octagon is cut by K diagonals.  Lengths are Euclidean, so
min-sum prefers short cuts near the corners while max-min pushes the cuts
towards the long spanning chords.
"""
import math

from geocover.polygon import OBJECTIVES, ConvexPolygon, optimal_partition

angles = [2 * math.pi * k / 8 + 0.05 * (k % 3) for k in range(8)]
octagon = ConvexPolygon(vertices=[(math.cos(a), math.sin(a)) for a in angles])

for K in (1, 3, 5):
    print(f"K = {K}")
    for obj in OBJECTIVES:
        sol = optimal_partition(octagon, K, obj)
        print(f"  {obj:8s} value {sol.value:.4f}  diagonals {sol.witness}")

# Explicit integer weights stay exact.
weights = [[0, 0, 1, 5, 0],
           [0, 0, 0, 2, 4],
           [1, 0, 0, 0, 3],
           [5, 2, 0, 0, 0],
           [0, 4, 3, 0, 0]]
pent = ConvexPolygon(weights=weights)
print("pentagon, two cuts:", optimal_partition(pent, 2, "min-sum"))
