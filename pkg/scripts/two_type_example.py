"""Solve the three-slot, two-type queue and print its matrices and metrics."""

import numpy as np

from iqfu import ModelConfig, solve_model
from iqfu.solver import flow_ratio_advice


def main():
    model = ModelConfig.poisson(3, [1.5, 1.0], [0.75, 0.8], [2, 1], names=["I1", "I2"])
    sol = solve_model(model)
    np.set_printoptions(precision=3, suppress=True, linewidth=120)
    print("states:", sol.space.states)
    for name, M in (("C", sol.C), ("A", sol.A), ("P", sol.P)):
        print(f"\n{name} =\n{M.entries}")
    r = sol.report
    print("\npi =", r.pi)
    print("L per type =", np.round(r.L_per_type, 4), " L total =", round(r.L_total, 4))
    print("flow ratio =", np.round(r.flow_ratio, 4), " p_full =", round(r.p_full, 4))
    for line in flow_ratio_advice(model, r):
        print(line)


if __name__ == "__main__":
    main()
