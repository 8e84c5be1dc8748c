"""Placing K stations so the worst weighted distance is small.

On a line each station is an interval of length L and a customer of weight
w at distance d pays w * d.  The exact answer is a fraction; the float
search gets within rounding of it.  In the plane stations are fixed-size
rectangles, and an existing rectangle can be given up front.
"""
from geocover.kcenter1d import FLOAT, KCenter1DInstance, one_center_exact, optimal_radius
from geocover.kcenter2d import KCenter2DInstance
from geocover.kcenter2d import optimal_radius as radius2d

customers = [(0, 1), (3, 4), (10, 3), (17, 2), (30, 5), (34, 1)]
for K in (1, 2, 3):
    inst = KCenter1DInstance(customers, L=2, K=K)
    exact = optimal_radius(inst)
    approx = optimal_radius(inst, FLOAT)
    print(f"K={K}: D = {exact.value} ({float(exact.value):.6f}), float {approx.value:.6f},"
          f" stations start at {[str(c) for c in exact.witness]}")

print("single station via envelopes:", one_center_exact(KCenter1DInstance(customers, L=2)).value)
print("with a fixed station at 30:",
      optimal_radius(KCenter1DInstance(customers, L=2, K=1, fixed_centers=[30])).value)

sites = [(0, 0), (4, 2), (9, 9), (12, 8), (20, 1), (21, 3)]
for K in (1, 2, 3):
    s = radius2d(KCenter2DInstance(sites, K, 2, 1))
    print(f"plane K={K}: D = {s.value}, rectangles at {[(str(x), str(y)) for x, y in s.witness]}")
print("plane K=1 plus fixed rectangle at (19, 0):",
      radius2d(KCenter2DInstance(sites, 1, 2, 1, [(19, 0)])).value)
