"""Instance files, result files, random generation and solver dispatch.

Instances and results are JSON objects with sorted keys.  Exact rationals
are written as ``{"num": .., "den": ..}`` and floats as decimal strings
with 9 places.
"""
import json
import math
import time
from fractions import Fraction

from . import cover1d, cover2d, grid, kcenter1d, kcenter2d, oracle, polygon
from .solution import INFEASIBLE, OK

PROBLEMS = ("partition", "cover1d-intervals", "cover1d-points", "cover1d-threshold",
            "cover2d-all", "cover2d-maxweight", "kcenter1d", "kcenter2d")
BOUND = 10 ** 9

# required and optional fields per problem
_FIELDS = {
    "partition": ({"k", "objective"}, {"weights", "vertices"}),
    "cover1d-intervals": ({"points", "intervals"}, set()),
    "cover1d-points": ({"points", "intervals"}, set()),
    "cover1d-threshold": ({"points", "intervals", "mode", "objective"}, set()),
    "cover2d-all": ({"points", "k", "objective"}, {"shape"}),
    "cover2d-maxweight": ({"k", "lx", "ly"}, {"points", "grid"}),
    "kcenter1d": ({"points", "L", "k"}, {"fixed_centers"}),
    "kcenter2d": ({"points", "k", "lx", "ly"}, {"fixed_rects"}),
}


class InstanceError(ValueError):
    """The instance file does not parse or validate."""


# -- validation ----------------------------------------------------------------------

def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InstanceError(f"{what} must be an integer, got {v!r}")
    if abs(v) > BOUND:
        raise InstanceError(f"{what}={v} exceeds 1e9 in magnitude")
    return v


def _rows(v, width, what):
    if not isinstance(v, list):
        raise InstanceError(f"{what} must be a list")
    out = []
    for i, row in enumerate(v):
        if not isinstance(row, list) or len(row) != width:
            raise InstanceError(f"{what}[{i}] must be a list of {width} integers")
        out.append([_int(c, f"{what}[{i}]") for c in row])
    return out


def _positive(rows, col, what):
    for i, row in enumerate(rows):
        if row[col] <= 0:
            raise InstanceError(f"{what}[{i}] needs a positive weight")


def validate(inst):
    """Check an instance dict in place and return it."""
    if not isinstance(inst, dict):
        raise InstanceError("instance must be a JSON object")
    problem = inst.get("problem")
    if problem not in _FIELDS:
        raise InstanceError(f"unknown problem {problem!r}")
    required, optional = _FIELDS[problem]
    keys = set(inst) - {"problem"}
    if required - keys:
        raise InstanceError(f"missing fields: {sorted(required - keys)}")
    if keys - required - optional:
        raise InstanceError(f"unknown fields: {sorted(keys - required - optional)}")

    if problem == "partition":
        _int(inst["k"], "k")
        if inst["objective"] not in polygon.OBJECTIVES:
            raise InstanceError(f"unknown objective {inst['objective']!r}")
        if ("weights" in inst) == ("vertices" in inst):
            raise InstanceError("give exactly one of weights or vertices")
        if "weights" in inst:
            n = len(inst["weights"])
            _rows(inst["weights"], n, "weights")
        else:
            _rows(inst["vertices"], 2, "vertices")
    elif problem.startswith("cover1d"):
        pts = _rows(inst["points"], 2, "points")
        ivs = _rows(inst["intervals"], 3, "intervals")
        _positive(pts, 1, "points")
        _positive(ivs, 2, "intervals")
        for i, (l, h, _) in enumerate(ivs):
            if l > h:
                raise InstanceError(f"intervals[{i}] has l={l} > h={h}")
        if problem == "cover1d-threshold":
            if inst["mode"] not in cover1d.MODES:
                raise InstanceError(f"unknown mode {inst['mode']!r}")
            if inst["objective"] not in ("min-max", "max-min"):
                raise InstanceError(f"unknown objective {inst['objective']!r}")
    elif problem == "cover2d-all":
        if not _rows(inst["points"], 2, "points"):
            raise InstanceError("need at least one point")
        if not 1 <= _int(inst["k"], "k") <= 3:
            raise InstanceError("k must be 1..3")
        if inst["objective"] not in cover2d.OBJECTIVES:
            raise InstanceError(f"unknown objective {inst['objective']!r}")
        shape = inst.get("shape", "rectangle")
        if shape not in cover2d.SHAPES or (shape == "square" and inst["k"] != 1):
            raise InstanceError(f"shape {shape!r} not allowed here")
    elif problem == "cover2d-maxweight":
        if not 1 <= _int(inst["k"], "k") <= 3:
            raise InstanceError("k must be 1..3")
        if _int(inst["lx"], "lx") < 0 or _int(inst["ly"], "ly") < 0:
            raise InstanceError("lx and ly must be nonnegative")
        if ("points" in inst) == ("grid" in inst):
            raise InstanceError("give exactly one of points or grid")
        if "points" in inst:
            _positive(_rows(inst["points"], 3, "points"), 2, "points")
        else:
            g = _rows(inst["grid"], len(inst["grid"]), "grid")
            if not g or any(c < 0 for row in g for c in row):
                raise InstanceError("grid must be a nonempty square of nonnegative weights")
    elif problem == "kcenter1d":
        _positive(_rows(inst["points"], 2, "points"), 1, "points")
        if _int(inst["L"], "L") < 0:
            raise InstanceError("L must be nonnegative")
        if _int(inst["k"], "k") < 1:
            raise InstanceError("k must be at least 1")
        for i, a in enumerate(inst.get("fixed_centers", [])):
            _int(a, f"fixed_centers[{i}]")
    elif problem == "kcenter2d":
        if any(isinstance(p, list) and len(p) == 3 for p in inst["points"]):
            raise kcenter2d.UnsupportedError("weighted rectangle K-center is not supported")
        _rows(inst["points"], 2, "points")
        if not 1 <= _int(inst["k"], "k") <= 3:
            raise InstanceError("k must be 1..3")
        if _int(inst["lx"], "lx") < 0 or _int(inst["ly"], "ly") < 0:
            raise InstanceError("lx and ly must be nonnegative")
        _rows(inst.get("fixed_rects", []), 2, "fixed_rects")
    return inst


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            inst = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InstanceError(str(e)) from e
    return validate(inst)


def dumps(obj):
    return json.dumps(obj, sort_keys=True)


# -- values ------------------------------------------------------------------------

def encode(v):
    """JSON form of a number: int, ``{num, den}`` or a 9-place decimal."""
    if isinstance(v, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return v.numerator
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, float):
        return f"{v:.9f}"
    if hasattr(v, "item"):
        return encode(v.item())
    raise TypeError(f"cannot encode {v!r}")


def decode(v):
    if isinstance(v, dict):
        return Fraction(v["num"], v["den"])
    if isinstance(v, str):
        return float(v)
    return v


def same_value(a, b, rel=1e-6):
    """Exact equality for exact values, relative tolerance when either is a float."""
    if a is None or b is None:
        return a is b
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(float(a), float(b), rel_tol=rel, abs_tol=1e-9)
    return a == b


# -- solving -------------------------------------------------------------------------

def _polygon(inst):
    if "weights" in inst:
        return polygon.ConvexPolygon(weights=inst["weights"])
    return polygon.ConvexPolygon(vertices=inst["vertices"])


def _cover1d_inst(inst):
    return cover1d.Cover1DInstance(inst["points"], inst["intervals"])


def _k1(inst):
    return kcenter1d.KCenter1DInstance(inst["points"], inst["L"], inst["k"],
                                       inst.get("fixed_centers", []))


def _k2(inst):
    return kcenter2d.KCenter2DInstance(inst["points"], inst["k"], inst["lx"], inst["ly"],
                                       inst.get("fixed_rects", []))


def _witness(problem, sol):
    w = sol.witness
    if problem == "partition":
        return [list(d) for d in w]
    if problem.startswith("cover1d"):
        return list(w)
    if problem.startswith("cover2d"):
        return [[r.x0, r.y0, r.lx, r.ly] for r in w]
    if problem == "kcenter1d":
        return [encode(c) for c in w]
    return [[encode(x), encode(y)] for x, y in w]


def run_solver(inst, mode="exact"):
    """Solve a validated instance and re-check its witness.

    Returns ``(Solution, solver name)``.
    """
    p = inst["problem"]
    if mode != "exact" and not p.startswith("kcenter"):
        raise InstanceError(f"mode {mode!r} is only available for kcenter problems")
    if p == "partition":
        poly = _polygon(inst)
        if not 0 <= inst["k"] <= poly.n - 3:
            raise InstanceError(f"k={inst['k']} outside [0, n-3]")
        sol = polygon.optimal_partition(poly, inst["k"], inst["objective"])
        polygon.check_partition(poly, inst["k"], inst["objective"], sol)
        return sol, "optimal_partition"
    if p in ("cover1d-intervals", "cover1d-points"):
        c = _cover1d_inst(inst)
        if p == "cover1d-intervals":
            sol, m, name = cover1d.min_weight_interval_cover(c), cover1d.INTERVALS_COVER_POINTS, \
                "min_weight_interval_cover"
        else:
            sol, m, name = cover1d.min_weight_point_cover(c), cover1d.POINTS_COVER_INTERVALS, \
                "min_weight_point_cover"
        if sol.feasible:
            cover1d.check_cover(c, m, sol)
        return sol, name
    if p == "cover1d-threshold":
        c = _cover1d_inst(inst)
        sol = cover1d.minmax_cover(c, inst["mode"], inst["objective"])
        if sol.feasible:
            cover1d.check_cover(c, inst["mode"], sol, inst["objective"])
        return sol, "minmax_cover"
    if p == "cover2d-all":
        shape = inst.get("shape", "rectangle")
        sol = cover2d.cover_all_points(inst["points"], inst["k"], inst["objective"], shape)
        cover2d.check_all_cover(inst["points"], inst["k"], inst["objective"], sol)
        return sol, "cover_all_points"
    if p == "cover2d-maxweight":
        if "grid" in inst:
            v = grid.max_weight_fixed_rects_grid(inst["grid"], inst["k"], inst["lx"], inst["ly"])
            return cover2d.Solution(OK, v, []), "max_weight_fixed_rects_grid"
        sol = cover2d.max_weight_fixed_rects(inst["points"], inst["k"], inst["lx"], inst["ly"])
        cover2d.check_fixed_rects(inst["points"], inst["k"], inst["lx"], inst["ly"], sol)
        return sol, "max_weight_fixed_rects"
    if p == "kcenter1d":
        k = _k1(inst)
        sol = kcenter1d.optimal_radius(k, mode)
        kcenter1d.check_radius(k, sol)
        return sol, "optimal_radius"
    k = _k2(inst)
    sol = kcenter2d.optimal_radius(k, mode)
    kcenter2d.check_radius(k, sol, tol=0 if mode == "exact" else 1e-6 * (1 + float(sol.value)))
    return sol, "optimal_radius"


def run_oracle(inst):
    """Brute-force value, or None when infeasible."""
    p = inst["problem"]
    if p == "partition":
        return oracle.oracle_partition(_polygon(inst), inst["k"], inst["objective"])
    if p == "cover1d-intervals":
        return oracle.oracle_cover1d(inst["points"], inst["intervals"],
                                     cover1d.INTERVALS_COVER_POINTS)
    if p == "cover1d-points":
        return oracle.oracle_cover1d(inst["points"], inst["intervals"],
                                     cover1d.POINTS_COVER_INTERVALS)
    if p == "cover1d-threshold":
        return oracle.oracle_cover1d(inst["points"], inst["intervals"], inst["mode"],
                                     inst["objective"])
    if p == "cover2d-all":
        return oracle.oracle_cover2d_all(inst["points"], inst["k"], inst["objective"],
                                         inst.get("shape", "rectangle"))
    if p == "cover2d-maxweight":
        pts = inst["points"] if "points" in inst else grid.grid_points(inst["grid"])
        return oracle.oracle_cover2d_maxweight(pts, inst["k"], inst["lx"], inst["ly"])
    return oracle.oracle_kcenter_radius(inst)


def solve(inst, mode="exact", use_oracle=False):
    """Result dict for a validated instance."""
    start = time.perf_counter()
    if use_oracle:
        v = run_oracle(inst)
        status = OK if v is not None else INFEASIBLE
        result = {"status": status, "witness": [], "solver": {"name": "oracle", "mode": "exact"}}
        if v is not None:
            result["value"] = encode(v)
    else:
        sol, name = run_solver(inst, mode)
        result = {"status": sol.status, "witness": _witness(inst["problem"], sol),
                  "solver": {"name": name, "mode": mode}}
        if sol.feasible:
            result["value"] = encode(sol.value)
    result["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return result


# -- generation ----------------------------------------------------------------------

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        """Uniform-ish integer in ``[lo, hi]`` by modulo reduction."""
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def generate(problem, rng, n=6, m=6, k=2, span=30, wmax=9):
    """A random instance of ``problem``; ``n`` is the main size, ``m`` the
    secondary one (intervals, grid side), ``k`` the number of centers or
    rectangles or diagonals."""
    if problem not in PROBLEMS:
        raise InstanceError(f"unknown problem {problem!r}")
    if n < 0 or m < 0 or k < 0 or span < 1 or wmax < 1:
        raise InstanceError("sizes must be nonnegative")
    r = rng.randint
    inst = {"problem": problem}
    if problem == "partition":
        if n < 3:
            raise InstanceError("a polygon needs n >= 3")
        w = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 2, n):
                if not (i == 0 and j == n - 1):
                    w[i][j] = w[j][i] = r(1, wmax)
        k = min(k, n - 3)
        inst.update(weights=w, k=k,
                    objective=rng.choice(polygon.OBJECTIVES if k else ("min-sum", "max-sum")))
    elif problem.startswith("cover1d"):
        inst["points"] = [[r(0, span), r(1, wmax)] for _ in range(n)]
        ivs = []
        for _ in range(m):
            lo = r(0, span)
            ivs.append([lo, lo + r(0, max(1, span // 3)), r(1, wmax)])
        inst["intervals"] = ivs
        if problem == "cover1d-threshold":
            inst["mode"] = rng.choice(cover1d.MODES)
            inst["objective"] = rng.choice(("min-max", "max-min"))
    elif problem == "cover2d-all":
        if n < 1 or not 1 <= k <= 3:
            raise InstanceError("cover2d-all needs n >= 1 and k in 1..3")
        inst.update(points=[[r(0, span), r(0, span)] for _ in range(n)], k=k,
                    objective=rng.choice(cover2d.OBJECTIVES))
        if k == 1 and r(0, 1):
            inst["shape"] = "square"
    elif problem == "cover2d-maxweight":
        if not 1 <= k <= 3:
            raise InstanceError("k must be 1..3")
        inst.update(k=k, lx=r(0, max(1, span // 4)), ly=r(0, max(1, span // 4)))
        if m and n == 0:
            inst["grid"] = [[r(0, wmax) for _ in range(m)] for _ in range(m)]
            inst["lx"], inst["ly"] = r(0, m - 1), r(0, m - 1)
        else:
            inst["points"] = [[r(0, span), r(0, span), r(1, wmax)] for _ in range(n)]
    elif problem == "kcenter1d":
        if k < 1:
            raise InstanceError("k must be at least 1")
        inst.update(points=[[r(0, span), r(1, wmax)] for _ in range(n)],
                    L=r(0, max(1, span // 5)), k=k,
                    fixed_centers=[r(-2, span) for _ in range(r(0, 2))])
    else:
        if not 1 <= k <= 3:
            raise InstanceError("k must be 1..3")
        inst.update(points=[[r(0, span), r(0, span)] for _ in range(n)], k=k,
                    lx=r(0, max(1, span // 5)), ly=r(0, max(1, span // 5)),
                    fixed_rects=[[r(-2, span), r(-2, span)] for _ in range(r(0, 2))])
    return validate(inst)


# oracle size limits: (n, m, k)
ORACLE_CAPS = {
    "partition": {"n": 10, "m": 0, "k": 7},
    "cover1d-intervals": {"n": 12, "m": 12, "k": 0},
    "cover1d-points": {"n": 12, "m": 12, "k": 0},
    "cover1d-threshold": {"n": 12, "m": 12, "k": 0},
    "cover2d-all": {"n": 8, "m": 0, "k": 3},
    "cover2d-maxweight": {"n": 6, "m": 0, "k": 3},
    "kcenter1d": {"n": 12, "m": 0, "k": 3},
    "kcenter2d": {"n": 10, "m": 0, "k": 3},
}
DEFAULT_CAPS = {
    "partition": {"n": 8, "k": 5},
    "cover1d-intervals": {"n": 8, "m": 8},
    "cover1d-points": {"n": 8, "m": 8},
    "cover1d-threshold": {"n": 8, "m": 8},
    "cover2d-all": {"n": 7, "k": 3},
    "cover2d-maxweight": {"n": 6, "k": 3},
    "kcenter1d": {"n": 8, "k": 3},
    "kcenter2d": {"n": 8, "k": 3},
}


def check_caps(problem, caps):
    limits = ORACLE_CAPS[problem]
    for key, v in caps.items():
        if key not in limits:
            raise InstanceError(f"unknown cap {key!r}")
        if v < 0 or v > limits[key]:
            raise InstanceError(f"cap {key}={v} outside the oracle limit {limits[key]}")


def check(problem, count, seed, caps=None, solver=run_solver):
    """Differential test of ``count`` random instances.

    Yields ``(index, instance, solver value, oracle value)`` for every
    mismatch.  ``solver`` may be swapped to exercise the harness itself.
    """
    if problem not in PROBLEMS:
        raise InstanceError(f"unknown problem {problem!r}")
    caps = dict(DEFAULT_CAPS[problem], **(caps or {}))
    check_caps(problem, caps)
    rng = SplitMix64(seed)
    for idx in range(count):
        n_lo = 4 if problem == "partition" else 1
        n = rng.randint(n_lo, max(n_lo, caps.get("n", n_lo)))
        m = rng.randint(0, caps.get("m", 0))
        if problem == "partition":
            k = rng.randint(0, min(caps.get("k", 0), n - 3))
        else:
            k = rng.randint(1, max(1, caps.get("k", 1)))
        inst = generate(problem, rng, n=n, m=m, k=k, span=rng.choice((6, 12, 30)))
        sol, _ = solver(inst)
        got = sol.value if sol.feasible else None
        want = run_oracle(inst)
        if not same_value(got, want, rel=1e-9):
            yield idx, inst, got, want
