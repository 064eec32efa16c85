"""Closed-form optimal intercept per path type, global argmin and the
quadrant decision rule.

At every per-type optimum the straight segment runs normal to the target
line (orientation pi/2), which pins the centre geometry and gives lengths and
intercepts in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BoundaryHeadingError, InvalidArgumentError
from .geometry import PATH_TYPES, CanonicalProblem, normalize_angle

HALF_PI = 0.5 * math.pi
_BOUNDARY_COS = 1e-12


@dataclass(frozen=True)
class Candidate:
    path_type: str
    y_f: float
    length: float


@dataclass(frozen=True)
class PlanResult:
    best: Candidate
    all_candidates: list[Candidate] = field(default_factory=list)
    problem: CanonicalProblem | None = None

    def candidate(self, path_type: str) -> Candidate:
        for c in self.all_candidates:
            if c.path_type == path_type:
                return c
        raise KeyError(path_type)


def _turn(x: float) -> float:
    return normalize_angle(x)


def extreme_candidate(p: CanonicalProblem, path_type: str) -> Candidate:
    """Stationary intercept and length of ``path_type``, in closed form."""
    d, r, pi_, pf = p.d, p.r, p.psi_i, p.psi_f
    ci, si = math.cos(pi_), math.sin(pi_)
    cf, sf = math.cos(pf), math.sin(pf)
    if path_type == "RSR":
        y = -r * si + r * sf
        length = (d - r * ci + r * cf) + r * _turn(HALF_PI - pi_) + r * _turn(pf - HALF_PI)
    elif path_type == "RSL":
        y = -r * si - r * sf + 2.0 * r
        length = (d - r * ci - r * cf) + r * _turn(HALF_PI - pi_) + r * _turn(HALF_PI - pf)
    elif path_type == "LSL":
        y = r * si - r * sf
        length = (d + r * ci - r * cf) + r * _turn(pi_ - HALF_PI) + r * _turn(HALF_PI - pf)
    elif path_type == "LSR":
        y = r * si + r * sf - 2.0 * r
        length = (d + r * ci + r * cf) + r * _turn(pi_ - HALF_PI) + r * _turn(pf - HALF_PI)
    else:
        raise InvalidArgumentError(f"unknown path type {path_type!r}")
    return Candidate(path_type, y, length)


def optimal_path(p: CanonicalProblem) -> PlanResult:
    """Shortest of the four stationary candidates; ties go to the earlier type
    in RSR, RSL, LSL, LSR order."""
    cands = [extreme_candidate(p, t) for t in PATH_TYPES]
    best = cands[0]
    for c in cands[1:]:
        if c.length < best.length:
            best = c
    return PlanResult(best=best, all_candidates=cands, problem=p)


def decision_table_lookup(psi_i: float, psi_f: float) -> str:
    """Pick the optimal type from the headings alone.

    The first turn is R when the start heading has a positive y-component
    (cos > 0) and L otherwise; the final turn is L when the final heading has
    cos > 0 and R otherwise. Undefined on the quadrant boundaries.
    """
    ci, cf = math.cos(psi_i), math.cos(psi_f)
    if abs(ci) <= _BOUNDARY_COS or abs(cf) <= _BOUNDARY_COS:
        raise BoundaryHeadingError(
            "heading lies on a quadrant boundary where adjacent types tie; "
            "use optimal_path instead"
        )
    first = "R" if ci > 0.0 else "L"
    last = "L" if cf > 0.0 else "R"
    return first + "S" + last
