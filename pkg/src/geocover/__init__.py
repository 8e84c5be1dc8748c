"""Exact solvers for geometric partition, cover and K-center problems.

Every solver returns a :class:`Solution` with the optimal value and a
witness; :mod:`geocover.oracle` holds brute-force references.
"""
from .cover1d import (Cover1DInstance, min_weight_interval_cover, min_weight_point_cover,
                      minmax_cover, prune_nested_intervals, threshold_feasible)
from .cover2d import (RectPlacement, best_single_fixed_rect_sweep, cover_all_points,
                      max_weight_fixed_rects)
from .grid import max_weight_fixed_rects_grid
from .kcenter1d import KCenter1DInstance, min_hitting_points, one_center_exact
from .kcenter2d import KCenter2DInstance, feasible_fixed_size_cover
from .polygon import ConvexPolygon, optimal_partition
from .solution import Solution

__version__ = "0.1.0"
