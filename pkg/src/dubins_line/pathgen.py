"""Arc-line-arc geometry and waypoint sampling for a chosen candidate."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .geometry import CanonicalProblem, normalize_angle
from .lengths import evaluate, turn_centers
from .optimizer import Candidate


@dataclass(frozen=True)
class Arc:
    """Constant-radius turn. ``sweep`` is the turn magnitude (>= 0)."""

    center: tuple[float, float]
    radius: float
    entry_heading: float
    sweep: float
    handedness: str  # "R" (clockwise) or "L"

    @property
    def length(self) -> float:
        return self.radius * abs(self.sweep)

    @property
    def exit_heading(self) -> float:
        return self.heading_at(self.sweep)

    def heading_at(self, turned: float) -> float:
        sign = 1.0 if self.handedness == "R" else -1.0
        return normalize_angle(self.entry_heading + sign * turned)

    def point_at(self, turned: float) -> tuple[float, float]:
        psi = self.entry_heading + (turned if self.handedness == "R" else -turned)
        # position relative to the centre is the heading vector rotated a quarter turn
        if self.handedness == "R":
            ox, oy = -math.cos(psi), math.sin(psi)
        else:
            ox, oy = math.cos(psi), -math.sin(psi)
        return self.center[0] + self.radius * ox, self.center[1] + self.radius * oy


@dataclass(frozen=True)
class Straight:
    start: tuple[float, float]
    end: tuple[float, float]

    @property
    def length(self) -> float:
        return math.hypot(self.end[0] - self.start[0], self.end[1] - self.start[1])


@dataclass(frozen=True)
class SegmentList:
    path_type: str
    first_arc: Arc
    straight: Straight
    final_arc: Arc
    total_length: float

    @property
    def straight_heading(self) -> float:
        return self.first_arc.exit_heading

    def to_dict(self) -> dict:
        def arc(a: Arc) -> dict:
            return {
                "center": list(a.center),
                "radius": a.radius,
                "entry_heading_rad": a.entry_heading,
                "entry_heading_deg": math.degrees(a.entry_heading),
                "sweep_rad": a.sweep,
                "sweep_deg": math.degrees(a.sweep),
                "handedness": a.handedness,
                "length": a.length,
            }

        return {
            "path_type": self.path_type,
            "first_arc": arc(self.first_arc),
            "straight": {
                "start": list(self.straight.start),
                "end": list(self.straight.end),
                "heading_rad": self.straight_heading,
                "heading_deg": math.degrees(self.straight_heading),
                "length": self.straight.length,
            },
            "final_arc": arc(self.final_arc),
            "total_length": self.total_length,
        }


@dataclass(frozen=True)
class Waypoint:
    x: float
    y: float
    heading: float
    s: float


def build_segments(p: CanonicalProblem, c: Candidate) -> SegmentList:
    ev = evaluate(p, c.path_type, c.y_f)
    cen = turn_centers(p, c.y_f)
    first, last = c.path_type[0], c.path_type[2]
    c1 = (cen.a_r, cen.b_r) if first == "R" else (cen.a_l, cen.b_l)
    c2 = (cen.c_r, cen.d_r) if last == "R" else (cen.c_l, cen.d_l)
    arc1 = Arc(c1, p.r, p.psi_i, ev.alpha, first)
    arc2 = Arc(c2, p.r, normalize_angle(ev.theta1), ev.beta, last)
    # the straight runs between the two tangent points
    straight = Straight(arc1.point_at(ev.alpha), arc2.point_at(0.0))
    total = arc1.length + ev.L_S + arc2.length
    return SegmentList(c.path_type, arc1, straight, arc2, total)


def sample_waypoints(s: SegmentList, max_spacing: float) -> list[Waypoint]:
    """Sample the path at spacing <= ``max_spacing``, always keeping the joints.

    Zero-length segments contribute no samples, so arc length is strictly
    increasing along the list.
    """
    if not max_spacing > 0.0:
        raise InvalidArgumentError(f"max_spacing must be positive, got {max_spacing}")
    out: list[Waypoint] = []
    arc1, line, arc2 = s.first_arc, s.straight, s.final_arc
    x0, y0 = arc1.point_at(0.0)
    out.append(Waypoint(x0, y0, arc1.entry_heading, 0.0))
    s0 = 0.0

    def pieces(length: float) -> int:
        return max(1, math.ceil(length / max_spacing - 1e-12))

    if arc1.length > 0.0:
        n = pieces(arc1.length)
        for k in range(1, n + 1):
            t = arc1.sweep * k / n
            x, y = arc1.point_at(t)
            out.append(Waypoint(x, y, arc1.heading_at(t), s0 + arc1.radius * t))
        s0 += arc1.length

    if line.length > 0.0:
        n = pieces(line.length)
        heading = s.straight_heading
        (ax, ay), (bx, by) = line.start, line.end
        for k in range(1, n + 1):
            f = k / n
            out.append(
                Waypoint(ax + f * (bx - ax), ay + f * (by - ay), heading, s0 + f * line.length)
            )
        s0 += line.length

    if arc2.length > 0.0:
        n = pieces(arc2.length)
        for k in range(1, n + 1):
            t = arc2.sweep * k / n
            x, y = arc2.point_at(t)
            out.append(Waypoint(x, y, arc2.heading_at(t), s0 + arc2.radius * t))
    return out


def polyline_length(wps) -> float:
    """Sum of chords between consecutive waypoints (objects with x, y)."""
    if len(wps) < 2:
        raise InvalidArgumentError("polyline needs at least two waypoints")
    return math.fsum(
        math.hypot(b.x - a.x, b.y - a.y) for a, b in zip(wps[:-1], wps[1:])
    )


def segments_to_world(s: SegmentList, frame) -> SegmentList:
    """Map a canonical segment list back through ``frame`` (a FrameTransform)."""

    def arc(a: Arc) -> Arc:
        hand = a.handedness
        if frame.mirrored:
            hand = "L" if hand == "R" else "R"
        return Arc(
            frame.point_to_world(*a.center),
            a.radius,
            frame.heading_to_world(a.entry_heading),
            a.sweep,
            hand,
        )

    line = Straight(frame.point_to_world(*s.straight.start), frame.point_to_world(*s.straight.end))
    return SegmentList(
        frame.path_type_to_world(s.path_type),
        arc(s.first_arc),
        line,
        arc(s.final_arc),
        s.total_length,
    )
