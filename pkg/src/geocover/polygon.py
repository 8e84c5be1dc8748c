"""Optimal partitions of a convex polygon by K non-crossing diagonals.

The dynamic program works on sub-polygons spanned by consecutive vertices
``i..j`` and keeps two tables per sub-polygon:

* ``F[i][j][k]`` -- best aggregate of exactly ``k`` non-crossing diagonals
  with both endpoints in ``i..j`` (the chord ``(i, j)`` may be used when it
  is a diagonal of the whole polygon);
* ``G[i][j][k]`` -- the same with the chord ``(i, j)`` excluded.

``G`` splits on the diagonal incident to ``i`` with the farthest other
endpoint ``m``: diagonals left of it live in ``G[i][m]`` and the rest in
``F[m][j]``.  Overall cost is O(n^3 K^2).
"""
import math
from dataclasses import dataclass

from .solution import OK, Solution

OBJECTIVES = ("min-sum", "max-sum", "min-max", "max-min")

INF = math.inf


@dataclass(frozen=True)
class _Rules:
    minimize: bool
    combine: object
    empty: float
    bad: float

    def better(self, a, b):
        return a < b if self.minimize else a > b


def _rules(objective):
    if objective == "min-sum":
        return _Rules(True, lambda a, b: a + b, 0, INF)
    if objective == "max-sum":
        return _Rules(False, lambda a, b: a + b, 0, -INF)
    if objective == "min-max":
        return _Rules(True, max, -INF, INF)
    if objective == "max-min":
        return _Rules(False, min, INF, -INF)
    raise ValueError(f"unknown objective {objective!r}; expected one of {OBJECTIVES}")


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class ConvexPolygon:
    """A convex polygon described by vertices, diagonal weights, or both.

    With only vertices given, the weight of a diagonal is its Euclidean
    length.  Explicit weights are kept as exact integers.
    """

    def __init__(self, n=None, vertices=None, weights=None):
        if vertices is None and weights is None:
            raise ValueError("need vertices or a weight matrix")
        if vertices is not None:
            vertices = [tuple(v) for v in vertices]
            _check_convex(vertices)
            if n is not None and n != len(vertices):
                raise ValueError("n does not match the vertex count")
            n = len(vertices)
        if weights is not None:
            weights = [list(row) for row in weights]
            if n is None:
                n = len(weights)
            if len(weights) != n or any(len(row) != n for row in weights):
                raise ValueError("weight matrix must be n x n")
            for i in range(n):
                for j in range(n):
                    if is_diagonal(i, j, n) and weights[i][j] != weights[j][i]:
                        raise ValueError(f"weights not symmetric at ({i}, {j})")
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        self.n = n
        self.vertices = vertices
        self.weights = weights

    @classmethod
    def from_vertices(cls, vertices):
        return cls(vertices=vertices)

    @classmethod
    def from_weights(cls, weights):
        return cls(weights=weights)

    def weight(self, i, j):
        if self.weights is not None:
            return self.weights[i][j]
        (x1, y1), (x2, y2) = self.vertices[i], self.vertices[j]
        return math.hypot(x2 - x1, y2 - y1)


def _check_convex(vertices):
    n = len(vertices)
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    # every other vertex strictly left of every edge: strictly convex, CCW, simple
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            if _cross(a, b, vertices[j]) <= 0:
                raise ValueError("vertices are not in strictly convex counter-clockwise position")


def is_diagonal(i, j, n):
    if i == j or not (0 <= i < n and 0 <= j < n):
        return False
    d = abs(i - j)
    return d != 1 and d != n - 1


def _normalize(pair, n):
    i, j = pair
    if not is_diagonal(i, j, n):
        raise ValueError(f"{pair} is not a diagonal of a {n}-gon")
    return (i, j) if i < j else (j, i)


def diagonals_cross(a, b, n):
    """True iff the two diagonals strictly interleave around the polygon."""
    a1, a2 = _normalize(a, n)
    b1, b2 = _normalize(b, n)
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def aggregate(values, objective):
    values = list(values)
    if objective in ("min-sum", "max-sum"):
        return sum(values)
    if not values:
        raise ValueError(f"{objective} of an empty set is undefined")
    return max(values) if objective == "min-max" else min(values)


def optimal_partition(poly, K, objective="min-sum"):
    n = poly.n
    rules = _rules(objective)
    if not 0 <= K <= n - 3:
        raise ValueError(f"K={K} outside [0, {n - 3}]")
    if K == 0:
        if objective in ("min-max", "max-min"):
            raise ValueError(f"{objective} needs at least one diagonal")
        return Solution(OK, 0, [])

    w = [[poly.weight(i, j) if is_diagonal(i, j, n) else None for j in range(n)]
         for i in range(n)]
    combine, better, bad = rules.combine, rules.better, rules.bad
    base = [rules.empty] + [bad] * K

    F = [[None] * n for _ in range(n)]
    G = [[None] * n for _ in range(n)]
    fchoice = {}
    gchoice = {}
    for i in range(n - 1):
        F[i][i + 1] = G[i][i + 1] = base
    for d in range(2, n):
        for i in range(n - d):
            j = i + d
            g = list(F[i + 1][j])
            gc = [("A",)] * (K + 1)
            for m in range(i + 2, j):
                wim = w[i][m]
                left, right = G[i][m], F[m][j]
                for k in range(1, K + 1):
                    for k1 in range(k):
                        a, b = left[k1], right[k - 1 - k1]
                        if a == bad or b == bad:
                            continue
                        v = combine(wim, combine(a, b))
                        if better(v, g[k]):
                            g[k] = v
                            gc[k] = ("B", m, k1)
            G[i][j] = g
            for k in range(K + 1):
                gchoice[i, j, k] = gc[k]
            f = list(g)
            if w[i][j] is not None:
                for k in range(1, K + 1):
                    if g[k - 1] == bad:
                        continue
                    v = combine(w[i][j], g[k - 1])
                    if better(v, f[k]):
                        f[k] = v
                        fchoice[i, j, k] = True
            F[i][j] = f

    value = F[0][n - 1][K]
    if value == bad:
        raise AssertionError("no feasible partition; K bound check failed")
    diagonals = []
    stack = [("F", 0, n - 1, K)]
    while stack:
        table, i, j, k = stack.pop()
        if k == 0 or j - i < 2:
            continue
        if table == "F":
            if fchoice.get((i, j, k)):
                diagonals.append((i, j))
                stack.append(("G", i, j, k - 1))
            else:
                stack.append(("G", i, j, k))
            continue
        choice = gchoice[i, j, k]
        if choice[0] == "A":
            stack.append(("F", i + 1, j, k))
        else:
            _, m, k1 = choice
            diagonals.append((i, m))
            stack.append(("G", i, m, k1))
            stack.append(("F", m, j, k - 1 - k1))
    diagonals.sort()
    return Solution(OK, value, diagonals)


def check_partition(poly, K, objective, solution, tol=1e-9):
    """Raise ``AssertionError`` if the witness is not a valid K-partition
    reproducing the reported value."""
    n = poly.n
    diags = [_normalize(p, n) for p in solution.witness]
    assert len(diags) == K, f"expected {K} diagonals, got {len(diags)}"
    assert len(set(diags)) == K, "repeated diagonal"
    for a in range(K):
        for b in range(a + 1, K):
            assert not diagonals_cross(diags[a], diags[b], n), f"{diags[a]} crosses {diags[b]}"
    if K == 0:
        assert solution.value == 0
        return
    got = aggregate((poly.weight(i, j) for i, j in diags), objective)
    assert abs(got - solution.value) <= tol, f"witness aggregates to {got}, reported {solution.value}"
