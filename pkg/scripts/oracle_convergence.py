"""Closed-form vs grid-search gap as the grid is refined.

    python scripts/oracle_convergence.py [trials] [seed]
"""

import sys

from dubins_line import verify


def main(trials=200, seed=0):
    trials, seed = int(trials), int(seed)
    print(f"{'grid':>8} {'max gap':>12} {'2hK bound':>12} {'mismatches':>10}")
    for grid in (1000, 4000, 20000, 80000):
        rep = verify(trials, seed=seed, grid_points=grid)
        print(f"{grid:8d} {rep.max_length_gap:12.3e} {rep.max_gap_bound:12.3e} {rep.decision_mismatches:10d}")


if __name__ == "__main__":
    main(*sys.argv[1:])
