import math

import pytest

from taut import (build, oracle_hull, oracle_shortest_homotopic, signature)


def test_straight_line_when_unobstructed():
    obs = build([(0, 5), (1, 5)])
    res = oracle_shortest_homotopic([(-1, 0), (0, 0.3), (1, 0)], obs, max_via=2)
    assert res.status == "ok"
    assert res.path == [(-1, 0), (1, 0)]
    assert math.isclose(res.length, 2.0)


def test_single_obstacle_detour():
    obs = build([(0, 0.5)])
    res = oracle_shortest_homotopic([(-1, 0), (0, 1), (1, 0)], obs, max_via=2)
    assert res.status == "ok"
    assert res.path == [(-1, 0), (0.0, 0.5), (1, 0)]
    assert math.isclose(res.length, 2 * math.sqrt(1.25))
    # the representative realizes the same class without touching the point
    assert signature(res.representative, obs) == signature(
        [(-1, 0), (0, 1), (1, 0)], obs)


def test_winding_input_needs_longer_survivor():
    # Input winds fully around the obstacle once before heading to the end:
    # the survivor must reproduce the non-trivial word and be longer than
    # the plain one-sided path.
    obs = build([(0, 1)])
    winding = [(-2, 0), (0.5, 0.2), (0.5, 1.8), (-0.5, 1.8), (-0.5, 0.2),
               (2, 0.2)]
    res = oracle_shortest_homotopic(winding, obs, max_via=3)
    assert res.status == "ok"
    plain = oracle_shortest_homotopic([(-2, 0), (2, 0.2)], obs, max_via=1)
    assert res.length > plain.length
    assert signature(res.representative, obs) == signature(winding, obs)


def test_depth_exceeded():
    # Two wraps around distinct obstacles cannot be matched with zero vias.
    obs = build([(0, 1), (3, 1)])
    path = [(-2, 0), (0, 2), (1.5, -0.5), (3, 2), (5, 0)]
    res = oracle_shortest_homotopic(path, obs, max_via=0)
    sig = signature(path, obs)
    if sig.word:
        assert res.status == "depth-exceeded"
        assert res.path is None


def test_desk_scale_guard():
    obs = build([(i, 0) for i in range(11)])
    with pytest.raises(ValueError):
        oracle_shortest_homotopic([(-1, 1), (11, 1)], obs)


def test_oracle_hull_examples():
    assert oracle_hull([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]) == [
        (0, 0), (2, 0), (2, 2), (0, 2)]
    assert oracle_hull([(0, 0), (5, 5)]) == [(0, 0), (5, 5)]
    assert oracle_hull([(0, 0), (1, 0), (2, 0)]) == [(0, 0), (2, 0)]
    with pytest.raises(ValueError):
        oracle_hull([])
