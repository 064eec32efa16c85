"""Command-line front end: ``plan``, ``verify`` and ``sweep``.

Angles on the command line are compass degrees. Exit codes: 0 success,
1 verification failure, 2 bad input (including d < 4r).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .errors import DubinsLineError
from .geometry import CanonicalProblem, WorldProblem, make_canonical
from .oracle import Tolerances, verify
from .optimizer import optimal_path
from .pathgen import build_segments, sample_waypoints, segments_to_world
from .svg import render_svg

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _point(text: str) -> tuple[float, float]:
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y but got {text!r}") from None
    return x, y


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dubins-line", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    plan = sub.add_parser("plan", help="shortest path from a pose to a line")
    plan.add_argument("--xi", type=float, required=True)
    plan.add_argument("--yi", type=float, required=True)
    plan.add_argument("--heading-i", type=float, required=True, help="degrees")
    plan.add_argument("--heading-f", type=float, required=True, help="degrees")
    plan.add_argument("--radius", type=float, required=True)
    line = plan.add_mutually_exclusive_group(required=True)
    line.add_argument("--d", type=float, help="vertical line this far to the right of the start")
    line.add_argument("--line-point", type=_point, metavar="X,Y")
    plan.add_argument("--line-angle", type=float, help="compass direction of the line, degrees")
    plan.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    plan.add_argument("--spacing", type=float, help="waypoint spacing in meters (default r/50)")
    plan.add_argument("--out", help="output file (default stdout)")

    ver = sub.add_parser("verify", help="seeded brute-force check of the closed forms")
    ver.add_argument("--trials", type=int, default=1000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--grid", type=int, default=20000)
    ver.add_argument("--gap-tol", type=float, default=Tolerances.gap, help="in units of r")
    ver.add_argument("--slope-tol", type=float, default=Tolerances.slope)
    ver.add_argument("--out")

    sw = sub.add_parser("sweep", help="best path type over a grid of heading pairs")
    sw.add_argument("--step", type=float, default=5.0, help="grid step, degrees")
    sw.add_argument("--offset", type=float, default=0.0, help="grid offset, degrees")
    sw.add_argument("--d", type=float, default=200.0)
    sw.add_argument("--radius", type=float, default=50.0)
    sw.add_argument("--table", action="store_true", help="print the quadrant summary to stderr")
    sw.add_argument("--out")
    return parser


def _world_problem(args) -> WorldProblem:
    if args.d is not None:
        if args.line_angle is not None:
            raise UsageError("--line-angle cannot be combined with --d")
        lx, ly, ldir = args.xi + args.d, args.yi, 0.0
    else:
        if args.line_angle is None:
            raise UsageError("--line-point requires --line-angle")
        (lx, ly), ldir = args.line_point, math.radians(args.line_angle)
    return WorldProblem(
        start_x=args.xi,
        start_y=args.yi,
        start_heading=math.radians(args.heading_i),
        final_heading=math.radians(args.heading_f),
        line_point_x=lx,
        line_point_y=ly,
        line_direction=ldir,
        turn_radius=args.radius,
    )


def plan_world(world: WorldProblem, spacing: float | None = None):
    """Plan ``world``; return the JSON document and the world-frame segments."""
    p, frame = make_canonical(world)
    result = optimal_path(p)
    canon = build_segments(p, result.best)
    segs = segments_to_world(canon, frame)
    spacing = p.r / 50.0 if spacing is None else spacing
    wps = [
        {
            "x": x,
            "y": y,
            "heading_deg": math.degrees(frame.heading_to_world(w.heading)),
            "heading_rad": frame.heading_to_world(w.heading),
            "s": w.s,
        }
        for w in sample_waypoints(canon, spacing)
        for x, y in [frame.point_to_world(w.x, w.y)]
    ]
    ix, iy = frame.point_to_world(p.d, result.best.y_f)
    doc = {
        "path_type": frame.path_type_to_world(result.best.path_type),
        "y_opt": result.best.y_f,
        "length": result.best.length,
        "intercept": {"x": ix, "y": iy},
        "candidates": [
            {"type": frame.path_type_to_world(c.path_type), "y": c.y_f, "length": c.length}
            for c in result.all_candidates
        ],
        "canonical": {
            "d": p.d,
            "r": p.r,
            "psi_i_rad": p.psi_i,
            "psi_f_rad": p.psi_f,
            "psi_i_deg": math.degrees(p.psi_i),
            "psi_f_deg": math.degrees(p.psi_f),
            "mirrored": frame.mirrored,
        },
        "segments": segs.to_dict(),
        "waypoints": wps,
    }
    return doc, segs, p


def waypoints_csv(waypoints: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "heading_deg", "s"])
    for w in waypoints:
        writer.writerow([repr(w["x"]), repr(w["y"]), repr(w["heading_deg"]), repr(w["s"])])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_plan(args) -> int:
    world = _world_problem(args)
    doc, segs, p = plan_world(world, args.spacing)
    line = (world.line_point_x, world.line_point_y, world.line_direction)
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        text = waypoints_csv(doc["waypoints"])
    else:
        text = render_svg(segs, p, line=line, y_opt=doc["y_opt"])
    _emit(text, args.out)
    print(
        f"{doc['path_type']}  y_opt={doc['y_opt']:.4f}  length={doc['length']:.4f}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    tol = Tolerances(gap=args.gap_tol, slope=args.slope_tol)
    report = verify(args.trials, seed=args.seed, grid_points=args.grid, tolerances=tol)
    _emit(report.to_json() + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def sweep_rows(step_deg: float, offset_deg: float, d: float, r: float):
    n = int(round(360.0 / step_deg))
    angles = [offset_deg + k * step_deg for k in range(n)]
    for a in angles:
        for b in angles:
            best = optimal_path(CanonicalProblem.from_degrees(d, r, a, b)).best
            yield a, b, best.path_type


def quadrant_summary(rows, boundary_cos: float = 1e-3) -> dict:
    """Types seen in each (sign cos psi_i, sign cos psi_f) block."""
    blocks: dict[tuple[str, str], set] = {}
    for a, b, t in rows:
        ca, cb = math.cos(math.radians(a)), math.cos(math.radians(b))
        if abs(ca) <= boundary_cos or abs(cb) <= boundary_cos:
            continue
        key = ("+" if ca > 0 else "-", "+" if cb > 0 else "-")
        blocks.setdefault(key, set()).add(t)
    return blocks


def _cmd_sweep(args) -> int:
    if args.step <= 0.0:
        raise UsageError("--step must be positive")
    rows = list(sweep_rows(args.step, args.offset, args.d, args.radius))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["psi_i_deg", "psi_f_deg", "best_type"])
    for a, b, t in rows:
        writer.writerow([f"{a:g}", f"{b:g}", t])
    _emit(buf.getvalue(), args.out)
    if args.table:
        for key, types in sorted(quadrant_summary(rows).items()):
            sign_i, sign_f = (">" if k == "+" else "<" for k in key)
            print(
                f"cos(psi_i) {sign_i} 0, cos(psi_f) {sign_f} 0: {','.join(sorted(types))}",
                file=sys.stderr,
            )
    return EXIT_OK


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {"plan": _cmd_plan, "verify": _cmd_verify, "sweep": _cmd_sweep}[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"dubins-line: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DubinsLineError as exc:
        print(f"dubins-line: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "plan_world"]
