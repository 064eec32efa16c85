import math

import pytest
from hypothesis import given, strategies as st

from conftest import problems
from dubins_line import (
    Candidate,
    CanonicalProblem,
    InvalidArgumentError,
    Waypoint,
    build_segments,
    optimal_path,
    polyline_length,
    sample_waypoints,
)

P = CanonicalProblem.from_degrees


def _angle_err(a, b):
    d = (a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def test_straight_only():
    p = P(200, 50, 90, 90)
    s = build_segments(p, optimal_path(p).candidate("RSL"))
    assert s.first_arc.sweep == pytest.approx(0.0, abs=1e-12)
    assert s.final_arc.sweep == pytest.approx(0.0, abs=1e-12)
    assert s.straight.start == pytest.approx((0.0, 0.0), abs=1e-12)
    assert s.straight.end == pytest.approx((200.0, 0.0), abs=1e-12)
    assert s.total_length == pytest.approx(200.0)
    wps = sample_waypoints(s, 50.0)
    assert [w.s for w in wps] == pytest.approx([0, 50, 100, 150, 200])


def test_fig6_components():
    p = P(200, 50, 10, 40)
    s = build_segments(p, optimal_path(p).best)
    assert math.degrees(s.first_arc.sweep) == pytest.approx(80.0)
    assert s.first_arc.length == pytest.approx(69.813, abs=1e-3)
    assert s.straight.length == pytest.approx(112.4574, abs=1e-4)
    assert math.degrees(s.final_arc.sweep) == pytest.approx(50.0)
    assert s.final_arc.length == pytest.approx(43.633, abs=1e-3)
    assert s.total_length == pytest.approx(225.904, abs=1e-3)


def test_fig8_straight_is_normal_to_line():
    p = P(200, 50, 150, 60)
    s = build_segments(p, optimal_path(p).best)
    assert s.straight_heading == pytest.approx(math.pi / 2, abs=1e-12)
    assert s.straight.start[1] == pytest.approx(s.straight.end[1], abs=1e-9)


def test_coarse_spacing_keeps_joints():
    p = P(200, 50, 10, 40)
    s = build_segments(p, optimal_path(p).best)
    wps = sample_waypoints(s, 1e6)
    assert len(wps) == 4
    assert (wps[1].x, wps[1].y) == pytest.approx(s.straight.start)
    assert (wps[2].x, wps[2].y) == pytest.approx(s.straight.end)
    assert (wps[-1].x, wps[-1].y) == pytest.approx((200.0, optimal_path(p).best.y_f))


def test_polyline_examples():
    assert polyline_length([Waypoint(0, 0, 0, 0), Waypoint(3, 4, 0, 5)]) == 5.0
    assert polyline_length([Waypoint(x, 0, 0, x) for x in (0, 1, 2)]) == 2.0
    with pytest.raises(InvalidArgumentError):
        polyline_length([Waypoint(0, 0, 0, 0)])
    with pytest.raises(InvalidArgumentError):
        sample_waypoints(build_segments(P(200, 50, 90, 90), Candidate("RSR", 0.0, 200.0)), 0.0)


@pytest.mark.parametrize("spacing, rel", [(1.0, 1e-3), (0.1, 1e-4)])
def test_fig6_polyline_converges(spacing, rel):
    p = P(200, 50, 10, 40)
    s = build_segments(p, optimal_path(p).best)
    length = polyline_length(sample_waypoints(s, spacing))
    assert length <= 225.9038 + 1e-4
    assert length == pytest.approx(225.9038, rel=rel)


@given(problems())
def test_reconstruction_fidelity(p):
    best = optimal_path(p).best
    s = build_segments(p, best)
    end_x, end_y = s.final_arc.point_at(s.final_arc.sweep)
    assert abs(end_x - p.d) <= 1e-9 * max(p.d, 1.0)
    assert abs(end_y - best.y_f) <= 1e-6
    assert _angle_err(s.final_arc.exit_heading, p.psi_f) <= 1e-9
    assert s.total_length == pytest.approx(best.length, rel=1e-9)
    assert s.total_length == pytest.approx(
        s.first_arc.length + s.straight.length + s.final_arc.length, rel=1e-12
    )
    # joints chain continuously with matching tangents
    j1 = s.first_arc.point_at(s.first_arc.sweep)
    j2 = s.final_arc.point_at(0.0)
    assert math.dist(j1, s.straight.start) <= 1e-9 * max(p.d, 1.0)
    assert math.dist(j2, s.straight.end) <= 1e-9 * max(p.d, 1.0)
    assert _angle_err(s.first_arc.exit_heading, s.final_arc.entry_heading) <= 1e-9
    assert s.first_arc.point_at(0.0) == pytest.approx((0.0, 0.0), abs=1e-9 * p.r)


@given(problems(), st.floats(0.005, 0.5))
def test_waypoints_properties(p, frac):
    s = build_segments(p, optimal_path(p).best)
    spacing = frac * p.r
    wps = sample_waypoints(s, spacing)
    gaps = [b.s - a.s for a, b in zip(wps[:-1], wps[1:])]
    assert all(0 < g <= spacing * (1 + 1e-12) for g in gaps)
    assert wps[0].s == 0.0 and wps[-1].s == pytest.approx(s.total_length, rel=1e-12)
    for arc, lo, hi in (
        (s.first_arc, 0.0, s.first_arc.length),
        (s.final_arc, s.total_length - s.final_arc.length, s.total_length),
    ):
        for w in wps:
            if lo < w.s < hi:
                assert math.dist((w.x, w.y), arc.center) == pytest.approx(p.r, rel=1e-9)


@given(problems())
def test_refinement_is_monotone(p):
    s = build_segments(p, optimal_path(p).best)
    spacing = p.r / 4
    prev = 0.0
    for _ in range(5):
        cur = polyline_length(sample_waypoints(s, spacing))
        assert cur >= prev - 1e-9 * s.total_length
        assert cur <= s.total_length * (1 + 1e-12)
        prev, spacing = cur, spacing / 2
