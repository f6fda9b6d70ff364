"""Arrival-count pmfs and per-instruction readiness.

Arrival distributions expose ``pmf(k)``, ``mean`` and a vectorised
``sample(rng, size)``; the simulator only ever uses ``sample`` so it does
not share code with the analytic matrix builders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def poisson_pmf(mean: float, k: int) -> float:
    if mean < 0 or k < 0:
        raise DomainError(f"poisson_pmf needs mean >= 0 and k >= 0, got mean={mean}, k={k}")
    if mean == 0:
        return 1.0 if k == 0 else 0.0
    if k > 20:
        return math.exp(k * math.log(mean) - mean - math.lgamma(k + 1))
    return mean**k * math.exp(-mean) / math.factorial(k)


def binomial_pmf(n: int, p: float, k: int) -> float:
    if n < 0 or not 0 <= k <= n or not 0.0 <= p <= 1.0:
        raise DomainError(f"binomial_pmf needs 0 <= k <= n and 0 <= p <= 1, got n={n}, p={p}, k={k}")
    # 0**0 == 1 in Python, which is the convention needed at p in {0, 1}.
    return math.comb(n, k) * p**k * (1.0 - p) ** (n - k)


def check_readiness(rho: float) -> float:
    rho = float(rho)
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"readiness must lie in [0, 1], got {rho}")
    return rho


class ArrivalDist:
    """Distribution of the number of instructions offered for dispatch per cycle."""

    kind: str

    @property
    def mean(self) -> float:
        raise NotImplementedError

    def pmf(self, k: int) -> float:
        raise NotImplementedError

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Poisson(ArrivalDist):
    mu: float
    kind = "poisson"

    def __post_init__(self):
        if not self.mu >= 0:
            raise DomainError(f"Poisson mean must be >= 0, got {self.mu}")

    @property
    def mean(self):
        return float(self.mu)

    def pmf(self, k):
        if k < 0:
            return 0.0
        return poisson_pmf(self.mu, k)

    def sample(self, rng, size):
        return rng.poisson(self.mu, size=size)

    def to_dict(self):
        return {"kind": "poisson", "mean": float(self.mu)}


@dataclass(frozen=True)
class Tabulated(ArrivalDist):
    """Empirical pmf over 0..len(probs)-1, e.g. measured from a trace."""

    probs: tuple[float, ...]
    kind = "table"

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        if not probs:
            raise DomainError("tabulated pmf is empty")
        if any(p < 0 for p in probs):
            raise DomainError("tabulated pmf has a negative entry")
        if abs(sum(probs) - 1.0) > 1e-9:
            raise DomainError(f"tabulated pmf sums to {sum(probs)}, not 1")
        object.__setattr__(self, "probs", probs)

    @property
    def mean(self):
        return math.fsum(k * p for k, p in enumerate(self.probs))

    def pmf(self, k):
        if 0 <= k < len(self.probs):
            return self.probs[k]
        return 0.0

    def sample(self, rng, size):
        cdf = np.cumsum(self.probs)
        cdf[-1] = 1.0
        return np.searchsorted(cdf, rng.random(size), side="right")

    def to_dict(self):
        return {"kind": "table", "pmf": list(self.probs)}


def arrival_from_dict(spec: dict) -> ArrivalDist:
    kind = spec.get("kind")
    if kind == "poisson":
        return Poisson(float(spec["mean"]))
    if kind == "table":
        return Tabulated(tuple(spec["pmf"]))
    raise DomainError(f"unknown arrival kind {kind!r}")
