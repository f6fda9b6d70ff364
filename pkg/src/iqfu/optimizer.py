"""FU-configuration cost and its minimisation.

The cost of a configuration is the sum over types of the expected queue
length plus unit cost times FU count. Queue lengths come from the full
analytic pipeline, so every evaluation is a stationary solve.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ConvexityViolation, DomainError, EvaluationCapExceeded
from .multi_type import ModelConfig, joint_arrival_matrix
from .solver import solve_model
from .state_space import enumerate_states

DEFAULT_FU_MAX = 8
EVALUATION_CAP = 4096

Config = tuple[int, ...]


@dataclass(frozen=True)
class FuCostParams:
    unit_cost: tuple[float, ...]
    fu_min: Optional[tuple[int, ...]] = None
    fu_max: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        T = len(self.unit_cost)
        object.__setattr__(self, "unit_cost", tuple(float(c) for c in self.unit_cost))
        lo = (1,) * T if self.fu_min is None else tuple(int(x) for x in self.fu_min)
        hi = (DEFAULT_FU_MAX,) * T if self.fu_max is None else tuple(int(x) for x in self.fu_max)
        object.__setattr__(self, "fu_min", lo)
        object.__setattr__(self, "fu_max", hi)
        if len(lo) != T or len(hi) != T:
            raise DomainError("unit_cost, fu_min and fu_max need one entry per type")
        if any(c < 0 for c in self.unit_cost):
            raise DomainError(f"unit costs must be non-negative, got {self.unit_cost}")
        if any(not 1 <= a <= b for a, b in zip(lo, hi)):
            raise DomainError(f"bounds need 1 <= fu_min <= fu_max, got {lo} and {hi}")

    def contains(self, fu: Config) -> bool:
        return all(a <= f <= b for a, f, b in zip(self.fu_min, fu, self.fu_max))


@dataclass
class Evaluation:
    fu: Config
    L: tuple[float, ...]
    cost: float


@dataclass
class OptimizationResult:
    best_config: Config
    best_cost: float
    surface: dict[Config, Evaluation] = field(default_factory=dict)
    evaluations: int = 0
    path: list[Config] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


def hardware_cost(fu: Sequence[int], costs: FuCostParams) -> float:
    return math.fsum(c * f for c, f in zip(costs.unit_cost, fu))


class CostEvaluator:
    """Caches evaluations and the FU-independent arrival matrix for one model."""

    def __init__(self, model: ModelConfig, costs: FuCostParams):
        if len(costs.unit_cost) != model.T:
            raise DomainError(f"model has {model.T} types but {len(costs.unit_cost)} unit costs")
        self.model = model
        self.costs = costs
        self.cache: dict[Config, Evaluation] = {}
        self._arrival = None

    def __call__(self, fu: Sequence[int]) -> Evaluation:
        fu = tuple(int(f) for f in fu)
        if fu not in self.cache:
            if self._arrival is None:
                space = enumerate_states(self.model.T, self.model.N)
                self._arrival = joint_arrival_matrix(self.model, space)
            report = solve_model(self.model.with_fu(fu), arrival=self._arrival).report
            cost = math.fsum(report.L_per_type) + hardware_cost(fu, self.costs)
            self.cache[fu] = Evaluation(fu, report.L_per_type, cost)
        return self.cache[fu]


def configuration_cost(model: ModelConfig, costs: FuCostParams) -> float:
    """Cost of the FU counts already set on ``model``."""
    return CostEvaluator(model, costs)(model.fu).cost


def _neighbours(fu: Config, costs: FuCostParams):
    for t in range(len(fu)):
        for d in (-1, 1):
            cand = fu[:t] + (fu[t] + d,) + fu[t + 1:]
            if costs.contains(cand):
                yield cand


def hill_climb(model: ModelConfig, costs: FuCostParams, evaluator: Optional[CostEvaluator] = None) -> OptimizationResult:
    """Greedy descent over the +/-1 single-axis neighbourhood.

    Starts from one FU per type (raised to ``fu_min`` where needed) and moves
    to the cheapest neighbour while it is strictly cheaper than the current
    point. Equal-cost neighbours are broken toward the lexicographically
    smallest configuration.
    """
    ev = evaluator or CostEvaluator(model, costs)
    current = tuple(max(1, lo) for lo in costs.fu_min)
    path = [current]
    while True:
        here = ev(current)
        options = sorted((ev(n).cost, n) for n in _neighbours(current, costs))
        if not options or options[0][0] >= here.cost:
            break
        current = options[0][1]
        path.append(current)
    best = ev(current)
    return OptimizationResult(best.fu, best.cost, dict(ev.cache), len(ev.cache), path)


def grid_search(model: ModelConfig, costs: FuCostParams, evaluation_cap: int = EVALUATION_CAP,
                evaluator: Optional[CostEvaluator] = None) -> OptimizationResult:
    ranges = [range(a, b + 1) for a, b in zip(costs.fu_min, costs.fu_max)]
    size = math.prod(len(r) for r in ranges)
    if size > evaluation_cap:
        raise EvaluationCapExceeded(f"grid has {size} configurations, cap is {evaluation_cap}")
    ev = evaluator or CostEvaluator(model, costs)
    surface = {}
    best = None
    for fu in itertools.product(*ranges):
        e = ev(fu)
        surface[fu] = e
        # product() yields configurations in lexicographic order, so strict < keeps the smallest on ties
        if best is None or e.cost < best.cost:
            best = e
    result = OptimizationResult(best.fu, best.cost, surface, len(surface))
    minima = local_minima(surface, costs)
    if len(minima) > 1:
        result.diagnostics.append(
            f"{ConvexityViolation.__name__}: {len(minima)} local minima on the grid: {minima}"
        )
    return result


def local_minima(surface: dict[Config, Evaluation], costs: FuCostParams) -> list[Config]:
    """Configurations with no strictly cheaper evaluated neighbour."""
    out = []
    for fu, e in surface.items():
        nbrs = [surface[n].cost for n in _neighbours(fu, costs) if n in surface]
        if all(c >= e.cost for c in nbrs):
            out.append(fu)
    return sorted(out)


def compare_searches(local: OptimizationResult, exhaustive: OptimizationResult) -> list[str]:
    """Diagnostics when hill climbing stopped short of the global optimum."""
    if local.best_cost > exhaustive.best_cost:
        return [
            f"{ConvexityViolation.__name__}: hill climbing stopped at {local.best_config} "
            f"(cost {local.best_cost:.6f}) but the grid minimum is {exhaustive.best_config} "
            f"(cost {exhaustive.best_cost:.6f})"
        ]
    return []


def surface_csv(result: OptimizationResult) -> str:
    """Columns fu_1..fu_T, L_1..L_T, cost; one row per evaluated configuration."""
    rows = sorted(result.surface.values(), key=lambda e: e.fu)
    T = len(rows[0].fu)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"fu_{t + 1}" for t in range(T)] + [f"L_{t + 1}" for t in range(T)] + ["cost"])
    for e in rows:
        w.writerow(list(e.fu) + [f"{x:.6f}" for x in e.L] + [f"{e.cost:.6f}"])
    return buf.getvalue()
