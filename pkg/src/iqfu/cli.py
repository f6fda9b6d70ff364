"""Command-line front end.

Usage:
    iqfu solve configs/two_type.json --out results/
    iqfu simulate configs/two_type.json --seed 1 --cycles 1000000
    iqfu optimize configs/cost_1_3.json --fu-max 8 --exhaustive
    iqfu sweep configs/cost_1_3.json --fu-max 8
    iqfu validate configs/two_type.json --tv-threshold 0.02

Exit codes: 0 success, 2 configuration error, 3 numerical failure,
4 validation threshold exceeded.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .config import config_to_dict, cost_params, dumps, load_config, pi_csv
from .errors import (CapacityExceeded, ConfigError, DomainError, EvaluationCapExceeded,
                     NoConvergence, NumericalError)
from .optimizer import compare_searches, grid_search, hill_climb, surface_csv, CostEvaluator
from .oracle_sim import GENERATOR, SimConfig, run, tv_distance
from .solver import flow_ratio_advice, solve_model

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_THRESHOLD = 0, 2, 3, 4


def _write(out: Path, name: str, text: str) -> Path:
    out.mkdir(parents=True, exist_ok=True)
    path = out / name
    path.write_text(text)
    return path


def _solution_doc(sol) -> dict:
    r = sol.report
    return {
        "config": config_to_dict(sol.config),
        "states": [list(s) for s in sol.space.states],
        "pi": list(r.pi),
        "L_per_type": list(r.L_per_type),
        "L_total": r.L_total,
        "flow_ratio": list(r.flow_ratio),
        "p_full": r.p_full,
        "diagnostics": {
            "iterations": r.iterations,
            "residual": f"{r.residual:.3e}",
            "messages": list(r.diagnostics),
            "advice": flow_ratio_advice(sol.config, r),
        },
    }


def _print_solution(sol):
    r, names = sol.report, sol.config.names
    print(f"states: {len(sol.space)}  iterations: {r.iterations}  residual: {r.residual:.2e}")
    for t, name in enumerate(names):
        ratio = "undefined" if r.flow_ratio[t] is None else f"{r.flow_ratio[t]:.6f}"
        print(f"  {name}: L = {r.L_per_type[t]:.6f}  R = {ratio}")
    print(f"  L_total = {r.L_total:.6f}  p_full = {r.p_full:.6f}")
    for line in r.diagnostics + flow_ratio_advice(sol.config, r):
        print(f"  note: {line}")


def cmd_solve(args):
    model, _ = load_config(args.config)
    sol = solve_model(model)
    _print_solution(sol)
    out = Path(args.out)
    _write(out, "report.json", dumps(_solution_doc(sol)))
    _write(out, "pi.csv", pi_csv(sol.space.states, sol.report.pi, model.names))
    return EXIT_OK


def _sim_config(model, args):
    try:
        return SimConfig(model, args.cycles, args.warmup, args.seed)
    except DomainError as exc:
        raise ConfigError(str(exc), "simulation flags") from exc


def _sim_doc(rep, model, tv=None) -> dict:
    doc = {
        "config": config_to_dict(model),
        "generator": GENERATOR,
        "seed": rep.seed,
        "cycles": rep.cycles,
        "warmup": rep.warmup,
        "states": [list(s) for s in rep.states],
        "empirical_pi": list(rep.empirical_pi),
        "empirical_L_per_type": list(rep.empirical_L_per_type),
        "empirical_L_total": rep.empirical_L_total,
    }
    if tv is not None:
        doc["tv_distance"] = tv
    return doc


def cmd_simulate(args):
    model, _ = load_config(args.config)
    rep = run(_sim_config(model, args))
    for name, L in zip(model.names, rep.empirical_L_per_type):
        print(f"  {name}: empirical L = {L:.6f}")
    print(f"  empirical L_total = {rep.empirical_L_total:.6f}  ({rep.cycles - rep.warmup} cycles tallied)")
    out = Path(args.out)
    _write(out, "sim_report.json", dumps(_sim_doc(rep, model)))
    _write(out, "sim_pi.csv", pi_csv(rep.states, rep.empirical_pi, model.names))
    return EXIT_OK


def _opt_doc(res) -> dict:
    return {
        "best_config": list(res.best_config),
        "best_cost": res.best_cost,
        "evaluations": res.evaluations,
        "path": [list(p) for p in res.path],
        "diagnostics": list(res.diagnostics),
    }


def cmd_optimize(args):
    model, unit_costs = load_config(args.config)
    costs = cost_params(unit_costs, model.T, args.fu_max)
    ev = CostEvaluator(model, costs)
    local = hill_climb(model, costs, evaluator=ev)
    doc = {"hill_climb": _opt_doc(local)}
    print(f"hill climbing: {local.best_config} cost {local.best_cost:.6f} ({local.evaluations} evaluations)")
    surface = local
    if args.exhaustive:
        grid = grid_search(model, costs, evaluator=ev)
        grid.diagnostics.extend(compare_searches(local, grid))
        doc["grid_search"] = _opt_doc(grid)
        print(f"grid search:   {grid.best_config} cost {grid.best_cost:.6f} ({grid.evaluations} evaluations)")
        for line in grid.diagnostics:
            print(f"  note: {line}")
        surface = grid
    out = Path(args.out)
    _write(out, "optimize.json", dumps(doc))
    _write(out, "surface.csv", surface_csv(surface))
    return EXIT_OK


def cmd_sweep(args):
    model, unit_costs = load_config(args.config)
    costs = cost_params(unit_costs, model.T, args.fu_max)
    grid = grid_search(model, costs)
    path = _write(Path(args.out), "surface.csv", surface_csv(grid))
    print(f"{grid.evaluations} configurations written to {path}; minimum {grid.best_config} cost {grid.best_cost:.6f}")
    for line in grid.diagnostics:
        print(f"  note: {line}")
    return EXIT_OK


def cmd_validate(args):
    model, _ = load_config(args.config)
    sol = solve_model(model)
    rep = run(_sim_config(model, args))
    tv = tv_distance(sol.report.pi, rep.empirical_pi)
    L_gap = max(abs(a - b) for a, b in zip(sol.report.L_per_type, rep.empirical_L_per_type))
    passed = tv <= args.tv_threshold
    doc = {"analytic": _solution_doc(sol), "simulated": _sim_doc(rep, model, tv),
           "tv_distance": tv, "max_L_gap": L_gap, "tv_threshold": args.tv_threshold, "passed": passed}
    _write(Path(args.out), "validate.json", dumps(doc))
    print(f"TV distance {tv:.6f} (threshold {args.tv_threshold}); max |L_t gap| {L_gap:.6f}: "
          f"{'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_THRESHOLD


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iqfu", description="Issue-queue / functional-unit Markov model")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("config", help="JSON experiment file")
        p.add_argument("--out", default="iqfu_out", help="output directory (default: iqfu_out)")
        p.set_defaults(func=func)
        return p

    def sim_flags(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cycles", type=int, default=1_000_000)
        p.add_argument("--warmup", type=int, default=1_000)

    add("solve", cmd_solve, "stationary distribution and queue metrics")
    sim_flags(add("simulate", cmd_simulate, "Monte Carlo run of the same model"))
    p = add("optimize", cmd_optimize, "hill-climb the FU configuration cost")
    p.add_argument("--fu-max", type=int, default=8)
    p.add_argument("--exhaustive", action="store_true", help="also run the full grid search")
    p = add("sweep", cmd_sweep, "write the full cost surface as CSV")
    p.add_argument("--fu-max", type=int, default=8)
    p = add("validate", cmd_validate, "solve + simulate and compare")
    sim_flags(p)
    p.add_argument("--tv-threshold", type=float, default=0.02)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")  # surfaced through report diagnostics instead
            return args.func(args)
    except (ConfigError, CapacityExceeded, EvaluationCapExceeded) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NoConvergence, NumericalError) as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
