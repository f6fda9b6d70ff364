"""Compare analytic stationary vectors with long simulations over several seeds."""

import argparse
import time

from iqfu import ModelConfig, solve_model
from iqfu.oracle_sim import SimConfig, run, tv_distance

MODELS = {
    "single N=3": ModelConfig.poisson(3, [1.0], [0.6], [2]),
    "two-type N=3": ModelConfig.poisson(3, [1.5, 1.0], [0.75, 0.8], [2, 1]),
    "two-type N=16": ModelConfig.poisson(16, [2.0, 1.0], [0.8, 0.8], [3, 2]),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cycles", type=int, default=1_000_000)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    args = ap.parse_args()
    for label, model in MODELS.items():
        analytic = solve_model(model).report
        for seed in args.seeds:
            t0 = time.perf_counter()
            rep = run(SimConfig(model, args.cycles, seed=seed))
            gap = max(abs(a - b) for a, b in zip(analytic.L_per_type, rep.empirical_L_per_type))
            print(f"{label:14s} seed {seed}: TV {tv_distance(analytic.pi, rep.empirical_pi):.4f}  "
                  f"max L gap {gap:.4f}  ({time.perf_counter() - t0:.1f} s)")


if __name__ == "__main__":
    main()
