"""Covers on a line.

Shifts (intervals with a cost) must cover a set of delivery times; then the
roles swap and inspection times (points with a cost) must hit every
interval.  The last part asks for the cheapest *most expensive* element.
"""
import numpy as np

from geocover.cover1d import (INTERVALS_COVER_POINTS, POINTS_COVER_INTERVALS,
                              Cover1DInstance, min_weight_interval_cover,
                              min_weight_point_cover, minmax_cover)

rng = np.random.default_rng(7)
times = sorted(rng.integers(0, 100, 12).tolist())
shifts = []
for _ in range(15):
    start = int(rng.integers(0, 90))
    shifts.append((start, start + int(rng.integers(5, 30)), int(rng.integers(1, 50))))
# two long, pricey fallback shifts keep the instance feasible
shifts += [(0, 50, 120), (50, 100, 120)]

inst = Cover1DInstance([(t, 1) for t in times], shifts)
print("delivery times:", times)
sol = min_weight_interval_cover(inst)
if sol.feasible:
    print(f"cheapest shift plan costs {sol.value}:")
    for j in sol.witness:
        print("   ", shifts[j])
else:
    print("no set of shifts covers every delivery")

sol = minmax_cover(inst, INTERVALS_COVER_POINTS, "min-max")
print("smallest possible max shift cost:", sol.value if sol.feasible else "infeasible")

# points covering intervals
checks = Cover1DInstance([(t, int(rng.integers(1, 20))) for t in range(0, 100, 7)],
                         [(a, b, 1) for a, b, _ in shifts])
sol = min_weight_point_cover(checks)
print("inspection plan:", [checks.points[i] for i in sol.witness] if sol.feasible
      else "infeasible", "cost", sol.value)
print("max-min version:", minmax_cover(checks, POINTS_COVER_INTERVALS, "max-min").value)
