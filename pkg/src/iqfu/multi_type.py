"""Joint consumption and arrival matrices over the multi-type state space."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .distributions import ArrivalDist, Poisson, check_readiness
from .errors import DimensionMismatch, DomainError, NumericalError
from .single_type import TransitionMatrix, consumption_entries
from .state_space import StateSpace

# Boundary remainders within this of zero are cancellation noise, not bugs.
REMAINDER_TOL = 1e-9


@dataclass(frozen=True)
class ModelConfig:
    """Issue-queue capacity plus per-type arrival, readiness and FU count."""

    N: int
    arrivals: tuple[ArrivalDist, ...]
    rho: tuple[float, ...]
    fu: tuple[int, ...]
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arrivals", tuple(self.arrivals))
        object.__setattr__(self, "rho", tuple(check_readiness(r) for r in self.rho))
        object.__setattr__(self, "fu", tuple(int(f) for f in self.fu))
        if self.N < 1:
            raise DomainError(f"queue capacity N must be >= 1, got {self.N}")
        T = len(self.arrivals)
        if T < 1 or len(self.rho) != T or len(self.fu) != T:
            raise DomainError(
                f"arrivals, rho and fu must have equal non-zero length, "
                f"got {T}, {len(self.rho)}, {len(self.fu)}"
            )
        if any(f < 1 for f in self.fu):
            raise DomainError(f"every FU count must be >= 1, got {self.fu}")
        if not sum(self.mu) > 0:
            raise DomainError("at least one type needs a positive arrival mean")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"type{t + 1}" for t in range(T)))
        elif len(self.names) != T:
            raise DomainError("names must have one entry per type")

    @classmethod
    def poisson(cls, N, mu: Sequence[float], rho: Sequence[float], fu: Sequence[int], names=None):
        return cls(N, tuple(Poisson(float(m)) for m in mu), tuple(rho), tuple(fu),
                   None if names is None else tuple(names))

    @property
    def T(self) -> int:
        return len(self.arrivals)

    @property
    def mu(self) -> tuple[float, ...]:
        return tuple(a.mean for a in self.arrivals)

    def with_fu(self, fu) -> "ModelConfig":
        return replace(self, fu=tuple(fu))


def type_probability(config: ModelConfig, t: int) -> float:
    """Probability that an incoming instruction is of type ``t`` (0-based)."""
    mu = config.mu
    total = math.fsum(mu)
    if not total > 0:
        raise DomainError("type probabilities are undefined when every arrival mean is zero")
    return mu[t] / total


def type_probabilities(config: ModelConfig) -> np.ndarray:
    return np.array([type_probability(config, t) for t in range(config.T)])


@lru_cache(maxsize=4096)
def _multinomial(counts: tuple[int, ...]) -> int:
    result, total = 1, 0
    for n in counts:
        total += n
        result *= math.comb(total, n)
    return result


def multinomial_coefficient(counts: Sequence[int]) -> int:
    """``(sum n)! / prod(n!)`` as an exact integer."""
    counts = tuple(int(n) for n in counts)
    if any(n < 0 for n in counts):
        raise DomainError(f"multinomial counts must be non-negative, got {counts}")
    return _multinomial(counts)


def _check_agree(config: ModelConfig, space: StateSpace):
    if config.T != space.T or config.N != space.N:
        raise DimensionMismatch(
            f"config (T={config.T}, N={config.N}) does not match space (T={space.T}, N={space.N})"
        )


def joint_consumption_matrix(config: ModelConfig, space: StateSpace) -> TransitionMatrix:
    """Types issue independently, so each entry is a product of per-type 1-D entries."""
    _check_agree(config, space)
    S = space.counts
    C = np.ones((len(space), len(space)))
    for t in range(config.T):
        Ct = consumption_entries(config.N, config.fu[t], config.rho[t])
        C *= Ct[S[:, t][:, None], S[:, t][None, :]]
    return TransitionMatrix(C, "consumption", space)


def _pmf_table(arrival: ArrivalDist, N: int) -> np.ndarray:
    # increments never exceed N inside the state space
    return np.array([arrival.pmf(k) for k in range(N + 1)])


def joint_arrival_matrix(config: ModelConfig, space: StateSpace) -> TransitionMatrix:
    """Dispatch-stage matrix.

    Non-full targets take the product of each type's raw pmf at its
    increment. Whatever probability is left in a row (at least enough
    arrivals to fill the queue) is split over the full targets by the
    multinomial law of the types of the instructions that fill the free
    slots.
    """
    _check_agree(config, space)
    S = space.counts
    n = len(space)
    full = space.boundary_mask
    pmfs = [_pmf_table(a, config.N) for a in config.arrivals]
    p = type_probabilities(config)
    A = np.zeros((n, n))

    for r in range(n):
        inc = S - S[r]
        reachable = np.all(inc >= 0, axis=1)
        row = np.zeros(n)

        open_cols = np.flatnonzero(reachable & ~full)
        vals = np.ones(len(open_cols))
        for t in range(config.T):
            vals *= pmfs[t][inc[open_cols, t]]
        row[open_cols] = vals

        remainder = 1.0 - math.fsum(vals)
        if remainder < 0.0:
            if remainder < -REMAINDER_TOL:
                raise NumericalError(f"row {r}: non-full arrival mass exceeds 1 by {-remainder:g}")
            remainder = 0.0

        for c in np.flatnonzero(reachable & full):
            counts = tuple(int(k) for k in inc[c])
            weight = float(multinomial_coefficient(counts))
            for t, k in enumerate(counts):
                weight *= p[t] ** k
            row[c] = remainder * weight

        total = math.fsum(row)
        if abs(total - 1.0) > REMAINDER_TOL:
            raise NumericalError(f"row {r} of the arrival matrix sums to {total!r}")
        A[r] = row / total
    return TransitionMatrix(A, "arrival", space)
