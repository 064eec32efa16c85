"""Sweep heading pairs on a 1-degree grid and tabulate the optimal type by quadrant
of the heading vector (I: N-E, II: N-W, III: S-W, IV: S-E)."""

import math
from collections import Counter, defaultdict

from dubins_line import CanonicalProblem, optimal_path


def quadrant(deg):
    x, y = math.sin(math.radians(deg)), math.cos(math.radians(deg))
    if abs(x) < 1e-9 or abs(y) < 1e-9:
        return None
    if y > 0:
        return "I" if x > 0 else "II"
    return "IV" if x > 0 else "III"


def main(step=1.0, offset=0.5):
    counts = defaultdict(Counter)
    n = int(360 / step)
    for i in range(n):
        a = offset + i * step
        for j in range(n):
            b = offset + j * step
            qa, qb = quadrant(a), quadrant(b)
            if qa is None or qb is None:
                continue
            best = optimal_path(CanonicalProblem.from_degrees(200.0, 50.0, a, b)).best
            counts[qa, qb][best.path_type] += 1
    quads = ["I", "II", "III", "IV"]
    print("init\\final " + " ".join(f"{q:>5}" for q in quads))
    for qa in quads:
        cells = []
        for qb in quads:
            c = counts[qa, qb]
            label = c.most_common(1)[0][0]
            cells.append(label if len(c) == 1 else label + "*")
        print(f"{qa:>10} " + " ".join(f"{c:>5}" for c in cells))
    print("(* marks a cell with more than one winning type)")


if __name__ == "__main__":
    main()
