import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

import oracles
from conftest import headings, problems
from dubins_line import (
    PATH_TYPES,
    BoundaryHeadingError,
    CanonicalProblem,
    decision_table_lookup,
    evaluate,
    extreme_candidate,
    length_slope,
    mirror_path_type,
    optimal_path,
    total_length,
)

P = CanonicalProblem.from_degrees


def test_figure_fixture(figure):
    p, kind, y, length = figure
    c = extreme_candidate(p, kind)
    assert c.y_f == pytest.approx(y, abs=1e-3)
    assert c.length == pytest.approx(length, abs=1e-3)
    best = optimal_path(p).best
    assert best.path_type == kind
    assert (best.y_f, best.length) == pytest.approx((y, length), abs=1e-3)


def test_figure_matches_brute_force_of_independent_construction(figure):
    p, kind, y, length = figure
    # coarse then fine scan of the oracle's own length function
    val, y0 = oracles.brute_min(p.d, p.r, p.psi_i, p.psi_f, kind, -300, 300, 3000)
    val, y1 = oracles.brute_min(p.d, p.r, p.psi_i, p.psi_f, kind, y0 - 0.2, y0 + 0.2, 4000)
    assert val == pytest.approx(length, abs=1e-3)
    assert y1 == pytest.approx(y, abs=1e-3)


@pytest.mark.parametrize("kind", PATH_TYPES)
def test_perpendicular_headings_collapse_to_d(kind):
    c = extreme_candidate(P(200, 50, 90, 90), kind)
    assert c.y_f == pytest.approx(0.0, abs=1e-12)
    assert c.length == pytest.approx(200.0, rel=1e-12)


def test_perpendicular_plan():
    res = optimal_path(P(200, 50, 90, 90))
    assert res.best.length == pytest.approx(200.0, rel=1e-12)
    # all four tie, the first in type order wins
    assert res.best.path_type == "RSR"
    assert [c.path_type for c in res.all_candidates] == list(PATH_TYPES)


@given(problems(), st.sampled_from(PATH_TYPES))
def test_closed_form_matches_evaluator(p, kind):
    c = extreme_candidate(p, kind)
    ev = evaluate(p, kind, c.y_f)
    assert c.length == pytest.approx(ev.total, rel=1e-9)
    assert c.length >= p.d - 1e-9 * p.d
    assert ev.theta1 == pytest.approx(math.pi / 2, abs=1e-9)


@given(problems(), st.sampled_from(PATH_TYPES))
def test_stationarity(p, kind):
    c = extreme_candidate(p, kind)
    ev = evaluate(p, kind, c.y_f)
    assume(min(ev.alpha, ev.beta, 2 * math.pi - ev.alpha, 2 * math.pi - ev.beta) > 1e-4)
    h = 1e-6 * p.r
    lo, hi = total_length(p, kind, [c.y_f - h, c.y_f + h])
    assert abs((hi - lo) / (2 * h)) <= 1e-4
    assert abs(length_slope(p, kind, c.y_f)) <= 1e-9


@given(problems(), st.sampled_from(PATH_TYPES))
def test_local_minimality(p, kind):
    c = extreme_candidate(p, kind)
    ev = evaluate(p, kind, c.y_f)
    for frac in (1e-3, 1e-2, 1e-1):
        delta = frac * p.r
        margin = 10 * delta / p.r
        if min(ev.alpha, ev.beta, 2 * math.pi - ev.alpha, 2 * math.pi - ev.beta) < margin:
            continue
        for y in (c.y_f - delta, c.y_f + delta):
            assert evaluate(p, kind, y).total >= c.length - 1e-9


@pytest.mark.parametrize(
    "hi, hf, expected",
    [(10, 40, "RSL"), (50, 170, "RSR"), (150, 60, "LSL"), (160, 130, "LSR")],
)
def test_decision_table_figures(hi, hf, expected):
    assert decision_table_lookup(math.radians(hi), math.radians(hf)) == expected


@pytest.mark.parametrize("hi, hf", [(90, 10), (10, 270), (-90, 45)])
def test_decision_table_boundary(hi, hf):
    with pytest.raises(BoundaryHeadingError):
        decision_table_lookup(math.radians(hi), math.radians(hf))


def test_decision_table_quadrant_blocks():
    # heading vector quadrants (compass): I = [0,90), II = [270,360), III = [180,270), IV = [90,180)
    mid = {"I": 45, "II": 315, "III": 225, "IV": 135}
    table = {
        ("I", "I"): "RSL", ("I", "II"): "RSL", ("I", "III"): "RSR", ("I", "IV"): "RSR",
        ("II", "I"): "RSL", ("II", "II"): "RSL", ("II", "III"): "RSR", ("II", "IV"): "RSR",
        ("III", "I"): "LSL", ("III", "II"): "LSL", ("III", "III"): "LSR", ("III", "IV"): "LSR",
        ("IV", "I"): "LSL", ("IV", "II"): "LSL", ("IV", "III"): "LSR", ("IV", "IV"): "LSR",
    }
    for (qi, qf), kind in table.items():
        a, b = math.radians(mid[qi]), math.radians(mid[qf])
        assert decision_table_lookup(a, b) == kind
        assert optimal_path(CanonicalProblem(200, 50, a, b)).best.path_type == kind


@given(problems())
def test_decision_agrees_with_argmin(p):
    assume(min(abs(math.cos(p.psi_i)), abs(math.cos(p.psi_f))) > 1e-3)
    assert decision_table_lookup(p.psi_i, p.psi_f) == optimal_path(p).best.path_type


@given(problems())
def test_plan_result_invariants(p):
    res = optimal_path(p)
    assert res.best.length == min(c.length for c in res.all_candidates)
    assert sorted(c.path_type for c in res.all_candidates) == sorted(PATH_TYPES)
    assert res.best.length >= p.d * (1 - 1e-12)


@pytest.mark.parametrize("eps", [1e-3, 1e-2, 0.3])
def test_lower_bound_strict_away_from_perpendicular(eps):
    for di, df in [(eps, 0), (0, eps), (-eps, eps)]:
        p = CanonicalProblem(200, 50, math.pi / 2 + di, math.pi / 2 + df)
        assert optimal_path(p).best.length > 200.0


@given(headings, headings, st.floats(4, 20))
def test_mirror(psi_i, psi_f, ratio):
    a = optimal_path(CanonicalProblem(ratio, 1.0, psi_i, psi_f))
    b = optimal_path(CanonicalProblem(ratio, 1.0, math.pi - psi_i, math.pi - psi_f))
    assert b.best.length == pytest.approx(a.best.length, rel=1e-9)
    for ca in a.all_candidates:
        cb = b.candidate(mirror_path_type(ca.path_type))
        assert cb.length == pytest.approx(ca.length, rel=1e-9)
        assert cb.y_f == pytest.approx(-ca.y_f, rel=1e-9, abs=1e-9)
    if len({round(c.length, 9) for c in a.all_candidates}) == 4:
        assert b.best.path_type == mirror_path_type(a.best.path_type)
