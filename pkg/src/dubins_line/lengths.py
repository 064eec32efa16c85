"""Length of each CSC path type as a function of the line intercept ``y_f``.

The evaluators take a :class:`CanonicalProblem` and return a :class:`PathEval`
that keeps every intermediate quantity. :func:`total_length` is the same
arithmetic on numpy arrays, used for dense scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleTangentError, InvalidArgumentError
from .geometry import PATH_TYPES, TWO_PI, CanonicalProblem

_CONTACT_REL = 1e-12


@dataclass(frozen=True)
class CircleCenters:
    a_r: float
    b_r: float
    a_l: float
    b_l: float
    c_r: float
    d_r: float
    c_l: float
    d_l: float


@dataclass(frozen=True)
class PathEval:
    path_type: str
    y_f: float
    L_CC: float
    L_S: float
    theta1: float
    alpha: float
    beta: float
    total: float
    theta2: float | None = None
    gamma: float | None = None


def turn_centers(p: CanonicalProblem, y_f):
    """Centres of the right/left turn circles at the start and at ``(d, y_f)``."""
    r = p.r
    ci, si = math.cos(p.psi_i), math.sin(p.psi_i)
    cf, sf = math.cos(p.psi_f), math.sin(p.psi_f)
    return CircleCenters(
        a_r=r * ci,
        b_r=-r * si,
        a_l=-r * ci,
        b_l=r * si,
        c_r=p.d + r * cf,
        d_r=y_f - r * sf,
        c_l=p.d - r * cf,
        d_l=y_f + r * sf,
    )


def _mod2pi(x):
    out = np.mod(x, TWO_PI)
    # np.mod can return exactly 2*pi for tiny negative inputs
    return np.where(out >= TWO_PI, 0.0, out)


def _evaluate(p: CanonicalProblem, path_type: str, y_f):
    """Shared arithmetic; works elementwise on floats or arrays."""
    r = p.r
    cen = turn_centers(p, y_f)
    if path_type == "RSR":
        dx, dy = cen.c_r - cen.a_r, cen.d_r - cen.b_r
    elif path_type == "RSL":
        dx, dy = cen.c_l - cen.a_r, cen.d_l - cen.b_r
    elif path_type == "LSL":
        dx, dy = cen.c_l - cen.a_l, cen.d_l - cen.b_l
    elif path_type == "LSR":
        dx, dy = cen.c_r - cen.a_l, cen.d_r - cen.b_l
    else:
        raise InvalidArgumentError(f"unknown path type {path_type!r}")

    L_CC = np.hypot(dx, dy)
    theta2 = gamma = None
    if path_type in ("RSR", "LSL"):
        L_S = L_CC
        # compass orientation of the centre line; dx > 0 keeps it inside (0, pi)
        theta1 = math.pi / 2 - np.arctan2(dy, dx)
    else:
        # d = 4r can put the circles exactly in contact; allow rounding there
        if np.any(L_CC < 2.0 * r * (1.0 - _CONTACT_REL)):
            raise InfeasibleTangentError(
                f"{path_type}: centre distance below 2r, no internal tangent exists"
            )
        L_S = np.sqrt(np.maximum(L_CC * L_CC - 4.0 * r * r, 0.0))
        theta2 = np.arctan2(L_S / 2.0, r)
        gamma = np.arctan2(dy, dx)
        if path_type == "RSL":
            theta1 = math.pi - (theta2 + gamma)
        else:
            theta1 = theta2 - gamma

    if path_type == "RSR":
        alpha, beta = theta1 - p.psi_i, p.psi_f - theta1
    elif path_type == "RSL":
        alpha, beta = theta1 - p.psi_i, theta1 - p.psi_f
    elif path_type == "LSL":
        alpha, beta = p.psi_i - theta1, theta1 - p.psi_f
    else:
        alpha, beta = p.psi_i - theta1, p.psi_f - theta1
    alpha, beta = _mod2pi(alpha), _mod2pi(beta)
    total = L_S + r * (alpha + beta)
    return L_CC, L_S, theta1, theta2, gamma, alpha, beta, total


def _path_eval(p, path_type, y_f) -> PathEval:
    y_f = float(y_f)
    if not math.isfinite(y_f):
        raise InvalidArgumentError(f"y_f must be finite, got {y_f!r}")
    L_CC, L_S, th1, th2, gam, a, b, tot = _evaluate(p, path_type, y_f)
    return PathEval(
        path_type=path_type,
        y_f=y_f,
        L_CC=float(L_CC),
        L_S=float(L_S),
        theta1=float(th1),
        alpha=float(a),
        beta=float(b),
        total=float(tot),
        theta2=None if th2 is None else float(th2),
        gamma=None if gam is None else float(gam),
    )


def length_rsr(p: CanonicalProblem, y_f: float) -> PathEval:
    return _path_eval(p, "RSR", y_f)


def length_rsl(p: CanonicalProblem, y_f: float) -> PathEval:
    return _path_eval(p, "RSL", y_f)


def length_lsl(p: CanonicalProblem, y_f: float) -> PathEval:
    return _path_eval(p, "LSL", y_f)


def length_lsr(p: CanonicalProblem, y_f: float) -> PathEval:
    return _path_eval(p, "LSR", y_f)


EVALUATORS = {
    "RSR": length_rsr,
    "RSL": length_rsl,
    "LSL": length_lsl,
    "LSR": length_lsr,
}


def evaluate(p: CanonicalProblem, path_type: str, y_f: float) -> PathEval:
    if path_type not in PATH_TYPES:
        raise InvalidArgumentError(f"unknown path type {path_type!r}")
    return _path_eval(p, path_type, y_f)


def total_length(p: CanonicalProblem, path_type: str, y_f) -> np.ndarray:
    """Vectorized path length over an array of intercepts."""
    return _evaluate(p, path_type, np.asarray(y_f, dtype=float))[-1]


def length_slope(p: CanonicalProblem, path_type: str, y_f: float) -> float:
    """Analytic d(length)/d(y_f) on a smooth branch.

    Straight-tangent types: ``dy / L_S``. Cross-tangent types add the turn
    change ``+-2r dtheta1/dy``, which collapses to
    ``(L_S dy +- 2r dx) / L_CC**2``.
    """
    cen = turn_centers(p, y_f)
    r = p.r
    if path_type == "RSR":
        return (cen.d_r - cen.b_r) / math.hypot(cen.c_r - cen.a_r, cen.d_r - cen.b_r)
    if path_type == "LSL":
        return (cen.d_l - cen.b_l) / math.hypot(cen.c_l - cen.a_l, cen.d_l - cen.b_l)
    if path_type == "RSL":
        dx, dy, sign = cen.c_l - cen.a_r, cen.d_l - cen.b_r, -1.0
    elif path_type == "LSR":
        dx, dy, sign = cen.c_r - cen.a_l, cen.d_r - cen.b_l, 1.0
    else:
        raise InvalidArgumentError(f"unknown path type {path_type!r}")
    cc2 = dx * dx + dy * dy
    if math.sqrt(cc2) < 2.0 * r * (1.0 - _CONTACT_REL):
        raise InfeasibleTangentError(f"{path_type}: centre distance below 2r")
    ls = math.sqrt(max(cc2 - 4.0 * r * r, 0.0))
    return (ls * dy + sign * 2.0 * r * dx) / cc2
