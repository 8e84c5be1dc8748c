import math

import pytest

import gen
from geocover.oracle import oracle_partition
from geocover.polygon import (OBJECTIVES, ConvexPolygon, check_partition, diagonals_cross,
                              is_diagonal, optimal_partition)
from test_oracle import PENTAGON


def test_cross_examples():
    assert diagonals_cross((0, 2), (1, 3), 5)
    assert not diagonals_cross((0, 2), (2, 4), 5)
    assert not diagonals_cross((0, 2), (3, 5), 6)
    assert diagonals_cross((3, 1), (0, 2), 5)
    with pytest.raises(ValueError):
        diagonals_cross((0, 1), (1, 3), 5)


def test_is_diagonal():
    assert is_diagonal(0, 2, 5)
    assert not is_diagonal(0, 4, 5)
    assert not is_diagonal(3, 3, 5)


def test_partition_examples():
    square = ConvexPolygon(vertices=[(0, 0), (1, 0), (1, 1), (0, 1)])
    sol = optimal_partition(square, 1, "min-sum")
    assert math.isclose(sol.value, math.sqrt(2), abs_tol=1e-9)
    check_partition(square, 1, "min-sum", sol)
    zero = optimal_partition(square, 0, "min-sum")
    assert zero.value == 0 and zero.witness == []
    pent = ConvexPolygon(weights=PENTAGON)
    s = optimal_partition(pent, 2, "min-sum")
    assert s.value == 4 and s.witness == [(0, 2), (2, 4)]
    s = optimal_partition(pent, 2, "min-max")
    assert s.value == 3 and s.witness == [(0, 2), (2, 4)]


def test_partition_rejects_bad_input():
    pent = ConvexPolygon(weights=PENTAGON)
    with pytest.raises(ValueError):
        optimal_partition(pent, 3, "min-sum")
    with pytest.raises(ValueError):
        optimal_partition(pent, 0, "max-min")
    with pytest.raises(ValueError):
        ConvexPolygon(vertices=[(0, 0), (1, 1), (2, 2), (0, 1)])
    with pytest.raises(ValueError):
        ConvexPolygon(vertices=[(0, 0), (0, 1), (1, 1), (1, 0)])  # clockwise


def test_euclidean_hexagon_matches_oracle():
    hexagon = ConvexPolygon(vertices=[(math.cos(a), math.sin(a))
                                      for a in (k * math.pi / 3 + 0.1 * k for k in range(6))])
    for K in range(4):
        for obj in OBJECTIVES:
            if K == 0 and obj in ("min-max", "max-min"):
                continue
            sol = optimal_partition(hexagon, K, obj)
            check_partition(hexagon, K, obj, sol)
            assert math.isclose(sol.value, oracle_partition(hexagon, K, obj), abs_tol=1e-9)


@pytest.mark.parametrize("n", range(4, 9))
def test_matches_oracle(rng, n):
    for _ in range(25):
        poly = gen.polygon(rng, n)
        for K in range(n - 2):
            for obj in OBJECTIVES:
                if K == 0 and obj in ("min-max", "max-min"):
                    continue
                sol = optimal_partition(poly, K, obj)
                check_partition(poly, K, obj, sol)
                assert sol.value == oracle_partition(poly, K, obj)


def test_rotation_invariance(rng):
    for _ in range(40):
        n = int(rng.integers(4, 10))
        W = gen.weight_matrix(rng, n)
        s = int(rng.integers(1, n))
        R = [[W[(i + s) % n][(j + s) % n] for j in range(n)] for i in range(n)]
        K = int(rng.integers(1, n - 2))
        for obj in OBJECTIVES:
            a = optimal_partition(ConvexPolygon(weights=W), K, obj).value
            b = optimal_partition(ConvexPolygon(weights=R), K, obj).value
            assert a == b


def test_min_sum_monotone_in_k(rng):
    for _ in range(40):
        n = int(rng.integers(4, 10))
        poly = gen.polygon(rng, n)
        vals = [optimal_partition(poly, K, "min-sum").value for K in range(n - 2)]
        assert vals == sorted(vals)
