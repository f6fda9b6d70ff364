"""Sweep the 8x8 FU grid for a 16-slot queue and compare hill climbing with the full grid.

    python scripts/cost_surface.py --unit-cost 1 3
    python scripts/cost_surface.py --unit-cost 2 6 --csv surface_2_6.csv
"""

import argparse

from iqfu import ModelConfig
from iqfu.optimizer import CostEvaluator, FuCostParams, compare_searches, grid_search, hill_climb, surface_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--unit-cost", type=float, nargs=2, default=[1.0, 3.0])
    ap.add_argument("--fu-max", type=int, default=8)
    ap.add_argument("--csv", help="write the surface here")
    args = ap.parse_args()

    model = ModelConfig.poisson(16, [2.0, 1.0], [0.8, 0.8], [1, 1])
    costs = FuCostParams(tuple(args.unit_cost), fu_max=(args.fu_max, args.fu_max))
    ev = CostEvaluator(model, costs)
    grid = grid_search(model, costs, evaluator=ev)
    local = hill_climb(model, costs, evaluator=ev)

    print("cost surface (rows fu_1, columns fu_2)")
    print("      " + "".join(f"{f2:>8}" for f2 in range(1, args.fu_max + 1)))
    for f1 in range(1, args.fu_max + 1):
        print(f"{f1:>6}" + "".join(f"{grid.surface[(f1, f2)].cost:8.3f}" for f2 in range(1, args.fu_max + 1)))
    print(f"\ngrid optimum {grid.best_config}, cost {grid.best_cost:.4f}")
    print(f"hill climb   {local.best_config}, cost {local.best_cost:.4f}, path {local.path}")
    for line in grid.diagnostics + compare_searches(local, grid):
        print("note:", line)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(surface_csv(grid))


if __name__ == "__main__":
    main()
