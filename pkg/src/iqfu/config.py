"""JSON experiment files and machine-readable report output.

An experiment file looks like::

    {"N": 3,
     "types": [{"name": "alu", "arrival": {"kind": "poisson", "mean": 1.5},
                "rho": 0.75, "fu": 2, "unit_cost": 1.0},
               {"name": "mul", "arrival": {"kind": "table", "pmf": [0.4, 0.6]},
                "rho": 0.8, "fu": 1}]}

``unit_cost`` is only needed by ``optimize`` and ``sweep``.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Optional

from .distributions import Poisson, Tabulated
from .errors import ConfigError, DomainError
from .multi_type import ModelConfig
from .optimizer import FuCostParams

DECIMALS = 6


def _number(value, field, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {value!r}", field)
    if integer and int(value) != value:
        raise ConfigError(f"expected an integer, got {value!r}", field)
    return int(value) if integer else float(value)


def _arrival(spec, field):
    if not isinstance(spec, dict):
        raise ConfigError("expected an object with a 'kind' key", field)
    kind = spec.get("kind")
    try:
        if kind == "poisson":
            return Poisson(_number(spec.get("mean"), f"{field}.mean"))
        if kind == "table":
            pmf = spec.get("pmf")
            if not isinstance(pmf, list):
                raise ConfigError("expected a list of probabilities", f"{field}.pmf")
            return Tabulated(tuple(_number(p, f"{field}.pmf[{k}]") for k, p in enumerate(pmf)))
    except DomainError as exc:
        raise ConfigError(f"DomainError: {exc}", field) from exc
    raise ConfigError(f"unknown arrival kind {kind!r} (use 'poisson' or 'table')", f"{field}.kind")


def parse_config(doc: dict) -> tuple[ModelConfig, Optional[tuple[float, ...]]]:
    """Validate a decoded experiment document; returns the model and unit costs (or None)."""
    if not isinstance(doc, dict):
        raise ConfigError("top level must be an object")
    if "N" not in doc:
        raise ConfigError("missing queue capacity", "N")
    N = _number(doc["N"], "N", integer=True)
    types = doc.get("types")
    if not isinstance(types, list) or not types:
        raise ConfigError("expected a non-empty list of instruction types", "types")
    names, arrivals, rho, fu, costs = [], [], [], [], []
    for t, spec in enumerate(types):
        where = f"types[{t}]"
        if not isinstance(spec, dict):
            raise ConfigError("expected an object", where)
        for key in ("arrival", "rho", "fu"):
            if key not in spec:
                raise ConfigError(f"missing '{key}'", f"{where}.{key}")
        names.append(str(spec.get("name", f"type{t + 1}")))
        arrivals.append(_arrival(spec["arrival"], f"{where}.arrival"))
        rho.append(_number(spec["rho"], f"{where}.rho"))
        fu.append(_number(spec["fu"], f"{where}.fu", integer=True))
        costs.append(None if "unit_cost" not in spec else _number(spec["unit_cost"], f"{where}.unit_cost"))
    try:
        model = ModelConfig(N, tuple(arrivals), tuple(rho), tuple(fu), tuple(names))
    except DomainError as exc:
        raise ConfigError(f"DomainError: {exc}", "types") from exc
    unit_costs = None if any(c is None for c in costs) else tuple(costs)
    return model, unit_costs


def load_config(path) -> tuple[ModelConfig, Optional[tuple[float, ...]]]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc.msg} (column {exc.colno})", line=exc.lineno) from exc
    return parse_config(doc)


def cost_params(unit_costs, T, fu_max=None, fu_min=None) -> FuCostParams:
    if unit_costs is None:
        raise ConfigError("every type needs a 'unit_cost' for optimisation", "types[].unit_cost")
    hi = None if fu_max is None else (fu_max,) * T
    lo = None if fu_min is None else (fu_min,) * T
    try:
        return FuCostParams(unit_costs, lo, hi)
    except DomainError as exc:
        raise ConfigError(str(exc), "bounds") from exc


def config_to_dict(model: ModelConfig, unit_costs=None) -> dict:
    types = []
    for t in range(model.T):
        entry = {"name": model.names[t], "arrival": model.arrivals[t].to_dict(),
                 "rho": model.rho[t], "fu": model.fu[t]}
        if unit_costs is not None:
            entry["unit_cost"] = unit_costs[t]
        types.append(entry)
    return {"N": model.N, "types": types}


def fmt(x):
    """Round floats (recursively) to the fixed report precision."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return round(x, DECIMALS) + 0.0
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return round(float(x), DECIMALS) + 0.0


def dumps(doc: dict) -> str:
    return json.dumps(fmt(doc), indent=2) + "\n"


def pi_csv(states, pi, names) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(names) + ["probability"])
    for s, p in zip(states, pi):
        w.writerow(list(s) + [f"{p:.{DECIMALS}f}"])
    return buf.getvalue()
