"""Heading conventions, angle arithmetic and the canonical frame.

Headings everywhere in this package are *compass* angles: a heading ``psi``
is the unit velocity ``(sin psi, cos psi)``, i.e. measured clockwise from the
+y axis. A right (clockwise) turn increases the heading, a left turn
decreases it. The direction of the target line uses the same convention.

The canonical frame puts the start at the origin and the target line at
``x = d`` pointing along +y, with the start on the line's left side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInstanceError, InvalidArgumentError, OutOfValidityError

TWO_PI = 2.0 * math.pi
PATH_TYPES = ("RSR", "RSL", "LSL", "LSR")

_DEGENERATE_REL = 1e-12


def normalize_angle(theta: float) -> float:
    """Wrap ``theta`` into ``[0, 2*pi)``."""
    if not math.isfinite(theta):
        raise InvalidArgumentError(f"angle must be finite, got {theta!r}")
    out = math.fmod(theta, TWO_PI)
    if out < 0.0:
        out += TWO_PI
    # fmod of a tiny negative number can round back up to 2*pi
    if out >= TWO_PI:
        out = 0.0
    return out


def mirror_path_type(path_type: str) -> str:
    if path_type not in PATH_TYPES:
        raise InvalidArgumentError(f"unknown path type {path_type!r}")
    swap = {"R": "L", "L": "R", "S": "S"}
    return "".join(swap[c] for c in path_type)


@dataclass(frozen=True)
class CanonicalProblem:
    d: float
    r: float
    psi_i: float
    psi_f: float

    def __post_init__(self):
        for name in ("d", "r", "psi_i", "psi_f"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"{name} must be finite")
        if self.r <= 0.0:
            raise InvalidArgumentError(f"turn radius must be positive, got {self.r}")
        if self.d < 4.0 * self.r:
            raise OutOfValidityError(self.d, self.r)
        object.__setattr__(self, "psi_i", normalize_angle(self.psi_i))
        object.__setattr__(self, "psi_f", normalize_angle(self.psi_f))

    @classmethod
    def from_degrees(cls, d: float, r: float, psi_i_deg: float, psi_f_deg: float):
        return cls(d, r, math.radians(psi_i_deg), math.radians(psi_f_deg))


@dataclass(frozen=True)
class WorldProblem:
    start_x: float
    start_y: float
    start_heading: float
    final_heading: float
    line_point_x: float
    line_point_y: float
    line_direction: float
    turn_radius: float

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if not math.isfinite(value):
                raise InvalidArgumentError(f"{name} must be finite, got {value!r}")
        if self.turn_radius <= 0.0:
            raise InvalidArgumentError(
                f"turn_radius must be positive, got {self.turn_radius}"
            )


@dataclass(frozen=True)
class FrameTransform:
    """World -> canonical map: translate, rotate, then optionally mirror x.

    ``rotation`` is the compass angle subtracted from world headings, so the
    target line's direction becomes 0 (along +y).
    """

    rotation: float
    translation: tuple[float, float]
    mirrored: bool = False

    def point_to_canonical(self, x: float, y: float) -> tuple[float, float]:
        tx, ty = x + self.translation[0], y + self.translation[1]
        # headings drop by `rotation`, i.e. vectors rotate counter-clockwise by it
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        cx, cy = c * tx - s * ty, s * tx + c * ty
        if self.mirrored:
            cx = -cx
        return cx, cy

    def point_to_world(self, x: float, y: float) -> tuple[float, float]:
        if self.mirrored:
            x = -x
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        wx, wy = c * x + s * y, -s * x + c * y
        return wx - self.translation[0], wy - self.translation[1]

    def heading_to_canonical(self, psi: float) -> float:
        out = psi - self.rotation
        if self.mirrored:
            out = -out
        return normalize_angle(out)

    def heading_to_world(self, psi: float) -> float:
        if self.mirrored:
            psi = -psi
        return normalize_angle(psi + self.rotation)

    def path_type_to_world(self, path_type: str) -> str:
        return mirror_path_type(path_type) if self.mirrored else path_type


def make_canonical(world: WorldProblem) -> tuple[CanonicalProblem, FrameTransform]:
    """Normalize a world instance; mirror it if the start is right of the line."""
    rot = world.line_direction
    frame = FrameTransform(rot, (-world.start_x, -world.start_y), False)
    lx, _ = frame.point_to_canonical(world.line_point_x, world.line_point_y)
    r = world.turn_radius
    if abs(lx) < _DEGENERATE_REL * r:
        raise DegenerateInstanceError("start point lies on the target line")
    if lx < 0.0:
        frame = FrameTransform(rot, frame.translation, True)
    d = abs(lx)
    p = CanonicalProblem(
        d,
        r,
        frame.heading_to_canonical(world.start_heading),
        frame.heading_to_canonical(world.final_heading),
    )
    return p, frame


def canonical_line_through(x: float, y: float, d: float) -> tuple[float, float, float]:
    """Line point and direction for the vertical line ``d`` to the right of (x, y)."""
    return x + d, y, 0.0
