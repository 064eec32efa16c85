"""Minimal SVG drawing of a planned path (no plotting dependency)."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .geometry import CanonicalProblem
from .pathgen import Arc, SegmentList


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def _arc_command(a: Arc) -> str:
    x, y = a.point_at(a.sweep)
    large = 1 if a.sweep > math.pi else 0
    # y is flipped on screen, so a clockwise world turn is drawn counter-clockwise
    sweep_flag = 0 if a.handedness == "R" else 1
    return f"A {_fmt(a.radius)} {_fmt(a.radius)} 0 {large} {sweep_flag} {_fmt(x)} {_fmt(-y)}"


def path_commands(s: SegmentList) -> list[str]:
    """Drawing commands after the initial move; zero-length pieces are dropped."""
    cmds = []
    if s.first_arc.length > 0.0:
        cmds.append(_arc_command(s.first_arc))
    if s.straight.length > 0.0:
        ex, ey = s.straight.end
        cmds.append(f"L {_fmt(ex)} {_fmt(-ey)}")
    if s.final_arc.length > 0.0:
        cmds.append(_arc_command(s.final_arc))
    return cmds


def _arc_extent(a: Arc, n: int = 64):
    return [a.point_at(a.sweep * k / n) for k in range(n + 1)]


def render_svg(
    s: SegmentList,
    p: CanonicalProblem,
    line: tuple[float, float, float] | None = None,
    y_opt: float | None = None,
) -> str:
    """SVG text for ``s``. ``line`` is (x, y, compass direction) in the same
    frame as ``s``; it defaults to the canonical line ``x = d``."""
    if line is None:
        line = (p.d, 0.0, 0.0)
    r = p.r
    pts = _arc_extent(s.first_arc) + _arc_extent(s.final_arc)
    for a in (s.first_arc, s.final_arc):
        cx, cy = a.center
        pts += [(cx - r, cy - r), (cx + r, cy + r)]
    xs = [q[0] for q in pts]
    ys = [q[1] for q in pts]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    w, h = xmax - xmin, ymax - ymin
    mx, my = 0.1 * w, 0.1 * h
    vb = (xmin - mx, -(ymax + my), w + 2 * mx, h + 2 * my)

    lx, ly, ldir = line
    ux, uy = math.sin(ldir), math.cos(ldir)
    # project the box centre onto the line and extend well past the box
    cx0, cy0 = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)
    t0 = (cx0 - lx) * ux + (cy0 - ly) * uy
    span = 2.0 * math.hypot(w + 2 * mx, h + 2 * my)
    l1 = (lx + (t0 - span) * ux, ly + (t0 - span) * uy)
    l2 = (lx + (t0 + span) * ux, ly + (t0 + span) * uy)

    start = s.first_arc.point_at(0.0)
    end = s.final_arc.point_at(s.final_arc.sweep)
    stroke = max(w, h) / 400.0
    label = f"{s.path_type} length={s.total_length:.4f}"
    if y_opt is not None:
        label = f"{s.path_type} y_opt={y_opt:.4f} length={s.total_length:.4f}"

    d_attr = " ".join([f"M {_fmt(start[0])} {_fmt(-start[1])}"] + path_commands(s))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{" ".join(_fmt(v) for v in vb)}">',
        f"<title>{escape(label)}</title>",
        f'<line class="target-line" x1="{_fmt(l1[0])}" y1="{_fmt(-l1[1])}" '
        f'x2="{_fmt(l2[0])}" y2="{_fmt(-l2[1])}" stroke="gray" stroke-width="{_fmt(stroke)}"/>',
    ]
    for a in (s.first_arc, s.final_arc):
        out.append(
            f'<circle class="turn-circle" cx="{_fmt(a.center[0])}" cy="{_fmt(-a.center[1])}" '
            f'r="{_fmt(a.radius)}" fill="none" stroke="steelblue" '
            f'stroke-width="{_fmt(stroke)}" stroke-dasharray="{_fmt(4 * stroke)} {_fmt(3 * stroke)}"/>'
        )
    out.append(
        f'<path class="dubins-path" d="{d_attr}" fill="none" stroke="crimson" '
        f'stroke-width="{_fmt(2 * stroke)}"/>'
    )
    for cls, (x, y), color in (("start", start, "green"), ("end", end, "black")):
        out.append(
            f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{_fmt(4 * stroke)}" fill="{color}"/>'
        )
    out.append(
        f'<text x="{_fmt(vb[0] + mx / 2)}" y="{_fmt(vb[1] + my / 2)}" '
        f'font-size="{_fmt(12 * stroke)}">{escape(label)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
