"""Plan the four example instances (d = 200 m, r = 50 m) and write one SVG each.

    python scripts/reproduce_figures.py [outdir]
"""

import pathlib
import sys

from dubins_line import CanonicalProblem, build_segments, optimal_path, render_svg

CASES = [(10, 40), (50, 170), (150, 60), (160, 130)]


def main(outdir="figures"):
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    print(f"{'psi_i':>6} {'psi_f':>6}  type  {'y_opt':>10} {'length':>10}")
    for psi_i, psi_f in CASES:
        p = CanonicalProblem.from_degrees(200.0, 50.0, psi_i, psi_f)
        best = optimal_path(p).best
        svg = render_svg(build_segments(p, best), p, y_opt=best.y_f)
        (out / f"path_{psi_i:03d}_{psi_f:03d}.svg").write_text(svg)
        print(f"{psi_i:6d} {psi_f:6d}  {best.path_type}  {best.y_f:10.4f} {best.length:10.4f}")


if __name__ == "__main__":
    main(*sys.argv[1:])
