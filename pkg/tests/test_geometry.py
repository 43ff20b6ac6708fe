import random

import pytest

from taut import (centroid, convex_hull, in_adjacent_partition, oracle_hull,
                  orient, point_in_triangle, polyline_length)
from taut.geometry import on_segment


def test_orient_basic():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 1), (2, 2)) == 0
    assert orient((0, 0), (0, 1), (1, 0)) == -1


def test_orient_antisymmetric():
    rng = random.Random(1)
    for _ in range(500):
        a, b, c = [(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(3)]
        assert orient(a, b, c) == -orient(a, c, b)


def test_orient_scale_free():
    a, b, c = (0, 0), (1, 1 + 1e-13), (2, 2)
    assert orient(a, b, c) == 0
    scaled = [(1e6 * x, 1e6 * y) for x, y in (a, b, c)]
    assert orient(*scaled) == 0


def test_point_in_triangle_basic():
    t = ((0, 0), (1, 0), (0, 1))
    assert point_in_triangle((0.25, 0.25), t)
    assert not point_in_triangle((1, 1), t)
    assert point_in_triangle((0.5, 0), t)  # boundary counts


def test_point_in_triangle_degenerate():
    t = ((0, 0), (1, 0), (2, 0))
    assert point_in_triangle((1.5, 0), t)
    assert not point_in_triangle((2.5, 0), t)
    assert not point_in_triangle((1, 0.1), t)


def test_point_in_triangle_matches_sign_rule():
    rng = random.Random(2)
    for _ in range(500):
        a, b, c, p = [(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(4)]
        if orient(a, b, c) == 0:
            continue
        s1, s2, s3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
        expected = (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)
        assert point_in_triangle(p, (a, b, c)) == expected


def test_convex_hull_examples():
    assert convex_hull([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]) == [
        (0, 0), (2, 0), (2, 2), (0, 2)]
    assert convex_hull([(0, 0), (1, 0), (0, 1)]) == [(0, 0), (1, 0), (0, 1)]
    assert convex_hull([(0, 0), (1, 0), (2, 0)]) == [(0, 0), (2, 0)]
    assert convex_hull([(1, 2)]) == [(1, 2)]
    with pytest.raises(ValueError):
        convex_hull([])


def _same_cycle(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    if a[0] not in b:
        return False
    i = b.index(a[0])
    return b[i:] + b[:i] == a


def test_convex_hull_matches_gift_wrap_oracle():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(1, 25)
        pts = [(rng.uniform(0, 10), rng.uniform(0, 10)) for _ in range(n)]
        fast = convex_hull(pts)
        slow = oracle_hull(pts)
        assert _same_cycle(fast, slow), (pts, fast, slow)


def test_all_points_inside_hull():
    rng = random.Random(4)
    for _ in range(200):
        pts = [(rng.uniform(0, 1), rng.uniform(0, 1)) for _ in range(rng.randint(3, 30))]
        hull = convex_hull(pts)
        if len(hull) < 3:
            for p in pts:
                assert on_segment(p, hull[0], hull[-1])
            continue
        for p in pts:
            assert all(orient(a, b, p) >= 0
                       for a, b in zip(hull, hull[1:] + hull[:1]))


def test_centroid():
    assert centroid([(0, 0), (2, 0)]) == (1, 0)
    assert centroid([(1.8, 0.9), (2.2, 0.9)]) == (2.0, 0.9)
    assert centroid([(0, 0)]) == (0, 0)
    with pytest.raises(ValueError):
        centroid([])


def test_polyline_length():
    assert polyline_length([(0, 0), (3, 4)]) == 5.0
    assert polyline_length([(0, 0), (1, 0), (2, 0)]) == 2.0
    assert polyline_length([(0, 0), (1, 0), (1, 1), (0, 1)], closed=True) == 4.0
    with pytest.raises(ValueError):
        polyline_length([(0, 0)])
    with pytest.raises(ValueError):
        polyline_length([(0, 0), (1, 1)], closed=True)


FRAME = dict(q_prev=(0.0, 0.0), q_i=(2.0, 2.0), q_next=(4.0, 0.0))


def test_adjacent_partition_examples():
    assert in_adjacent_partition((1.8, 0.9), FRAME["q_prev"], FRAME["q_i"],
                                 FRAME["q_next"], (2.0, 0.9)) is True
    assert in_adjacent_partition((2.0, 0.3), FRAME["q_prev"], FRAME["q_i"],
                                 FRAME["q_next"], (2.0, 0.9)) is False
    assert in_adjacent_partition((2.0, 0.9), FRAME["q_prev"], FRAME["q_i"],
                                 FRAME["q_next"], (2.0, 0.9)) is True


def test_adjacent_partition_precondition():
    with pytest.raises(ValueError):
        in_adjacent_partition((10, 10), FRAME["q_prev"], FRAME["q_i"],
                              FRAME["q_next"], (2.0, 0.9))


def test_adjacent_partition_disjoint_cover():
    # Inside the big triangle, a point is either adjacent or in the small
    # triangle; both only on the splitting segments, where adjacent wins.
    rng = random.Random(5)
    q_prev, q_i, q_next = (0, 0), (2, 2), (4, 0)
    for _ in range(500):
        # random point inside the big triangle via barycentric sampling
        u, v = rng.random(), rng.random()
        if u + v > 1:
            u, v = 1 - u, 1 - v
        p = (q_prev[0] + u * (q_i[0] - q_prev[0]) + v * (q_next[0] - q_prev[0]),
             q_prev[1] + u * (q_i[1] - q_prev[1]) + v * (q_next[1] - q_prev[1]))
        c = (2.0, rng.uniform(0.1, 1.8))
        adj = in_adjacent_partition(p, q_prev, q_i, q_next, c)
        small = point_in_triangle(p, (q_prev, c, q_next))
        if adj:
            assert (not small or on_segment(p, q_prev, c)
                    or on_segment(p, c, q_next))
        else:
            assert small
