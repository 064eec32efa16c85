"""Brute-force cross-checks for the closed-form planner.

The grid search is deliberately naive: evaluate every path type on a uniform
grid of intercepts and take the smallest value. Any path to ``(d, y_f)`` is
at least ``|y_f|`` long, so the grid only needs to span ``[-U, U]``, where
``U`` is the best closed-form length.

Random problems are drawn with ``numpy.random.Generator(PCG64(seed))``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DiscontinuityStraddleError, InvalidArgumentError
from .geometry import PATH_TYPES, TWO_PI, CanonicalProblem
from .lengths import total_length
from .optimizer import Candidate, decision_table_lookup, optimal_path


@dataclass(frozen=True)
class Tolerances:
    gap: float = 1e-2  # in units of r
    slope: float = 1e-4
    fd_step: float = 1e-6  # in units of r
    boundary_cos: float = 1e-3


@dataclass
class OracleReport:
    trials: int
    seed: int
    grid_points: int
    max_length_gap: float = 0.0
    max_gap_bound: float = 0.0
    max_grid_slope: float = 0.0
    max_stationarity_residual: float = 0.0
    stationarity_skipped: int = 0
    decision_checked: int = 0
    decision_mismatches: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.decision_mismatches == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _grid(p: CanonicalProblem, n_points: int):
    upper = optimal_path(p).best.length
    ys = np.linspace(-upper, upper, n_points)
    return ys, np.vstack([total_length(p, t, ys) for t in PATH_TYPES])


def grid_search(p: CanonicalProblem, n_points: int = 20000) -> Candidate:
    if n_points < 1000:
        raise InvalidArgumentError(f"grid needs at least 1000 points, got {n_points}")
    ys, table = _grid(p, n_points)
    # row-major argmin: lowest intercept first, then RSR, RSL, LSL, LSR
    k = int(np.argmin(table.T))
    j, i = divmod(k, len(PATH_TYPES))
    return Candidate(PATH_TYPES[i], float(ys[j]), float(table[i, j]))


def finite_diff(p: CanonicalProblem, path_type: str, y_f: float, h: float) -> float:
    """Central difference of the path length in ``y_f``."""
    if not h > 0.0:
        raise InvalidArgumentError(f"step must be positive, got {h}")
    lo, hi = total_length(p, path_type, [y_f - h, y_f + h])
    # only the two samples enter the difference, so only their jump matters
    if abs(hi - lo) >= math.pi * p.r:
        raise DiscontinuityStraddleError(
            f"{path_type} length jumps within +-{h} of y_f={y_f}"
        )
    return float((hi - lo) / (2.0 * h))


def random_problem(rng: np.random.Generator, r: float = 1.0) -> CanonicalProblem:
    psi_i, psi_f = rng.uniform(0.0, TWO_PI, size=2)
    d = rng.uniform(4.0 * r, 20.0 * r)
    return CanonicalProblem(float(d), r, float(psi_i), float(psi_f))


def _describe(p: CanonicalProblem) -> dict:
    return {"d": p.d, "r": p.r, "psi_i": p.psi_i, "psi_f": p.psi_f}


def check_problem(p: CanonicalProblem, report: OracleReport, tol: Tolerances) -> None:
    """Run every check on one problem and fold the results into ``report``."""
    plan = optimal_path(p)
    ys, table = _grid(p, report.grid_points)
    grid_best = float(table.min())
    spacing = float(ys[1] - ys[0])
    slopes = np.abs(np.diff(table, axis=1)) / spacing
    # jumps across a 0/2pi turn boundary are not slopes
    slope_k = float(slopes[slopes < math.pi * p.r / spacing].max())
    gap = abs(plan.best.length - grid_best)
    bound = 2.0 * spacing * slope_k

    report.max_length_gap = max(report.max_length_gap, gap)
    report.max_gap_bound = max(report.max_gap_bound, bound)
    report.max_grid_slope = max(report.max_grid_slope, slope_k)
    if gap > tol.gap * p.r:
        report.failures.append(
            {"problem": _describe(p), "detail": f"grid gap {gap:.3e} exceeds {tol.gap * p.r:.3e}"}
        )
    elif gap > bound + 1e-12:
        report.failures.append(
            {"problem": _describe(p), "detail": f"grid gap {gap:.3e} exceeds 2*h*K={bound:.3e}"}
        )
    if grid_best < plan.best.length - 1e-9:
        report.failures.append(
            {
                "problem": _describe(p),
                "detail": f"grid found {grid_best!r} below closed form {plan.best.length!r}",
            }
        )

    h = tol.fd_step * p.r
    for cand in plan.all_candidates:
        try:
            slope = abs(finite_diff(p, cand.path_type, cand.y_f, h))
        except DiscontinuityStraddleError:
            report.stationarity_skipped += 1
            continue
        report.max_stationarity_residual = max(report.max_stationarity_residual, slope)
        if slope > tol.slope:
            report.failures.append(
                {
                    "problem": _describe(p),
                    "detail": f"{cand.path_type} slope {slope:.3e} at closed-form y_f",
                }
            )

    if min(abs(math.cos(p.psi_i)), abs(math.cos(p.psi_f))) > tol.boundary_cos:
        report.decision_checked += 1
        if decision_table_lookup(p.psi_i, p.psi_f) != plan.best.path_type:
            report.decision_mismatches += 1
            report.failures.append(
                {
                    "problem": _describe(p),
                    "detail": f"decision table disagrees with argmin {plan.best.path_type}",
                }
            )


def verify(
    trial_count: int,
    seed: int = 0,
    grid_points: int = 20000,
    tolerances: Tolerances | None = None,
    problems: list[CanonicalProblem] | None = None,
) -> OracleReport:
    """Check ``trial_count`` seeded random problems (r = 1, d in [4, 20]).

    Passing ``problems`` replaces the random draw with fixed instances.
    """
    if trial_count < 1:
        raise InvalidArgumentError("trial_count must be at least 1")
    tol = tolerances or Tolerances()
    report = OracleReport(trials=trial_count, seed=seed, grid_points=grid_points)
    if problems is None:
        rng = np.random.Generator(np.random.PCG64(seed))
        problems = [random_problem(rng) for _ in range(trial_count)]
    elif len(problems) != trial_count:
        raise InvalidArgumentError("len(problems) must equal trial_count")
    for p in problems:
        check_problem(p, report, tol)
    return report
