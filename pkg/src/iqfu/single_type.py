"""Issue (consumption) and dispatch (arrival) matrices for one instruction type.

States are the occupancy counts 0..N. Consumption removes at most ``F``
ready instructions per cycle; arrival adds the offered instructions and
folds every overflow outcome into the full state N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .distributions import ArrivalDist, binomial_pmf, check_readiness
from .errors import DomainError
from .state_space import StateSpace

ROLES = ("consumption", "arrival", "complete")


@dataclass(frozen=True)
class TransitionMatrix:
    """Dense row-stochastic matrix whose rows and columns follow ``space`` order.

    ``space`` is None for the 1-D builders, whose states are simply 0..N.
    """

    entries: np.ndarray
    role: str
    space: Optional[StateSpace] = None

    def __post_init__(self):
        if self.role not in ROLES:
            raise DomainError(f"unknown matrix role {self.role!r}")
        a = np.asarray(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError(f"transition matrix must be square, got shape {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def row_sum_error(self) -> float:
        return float(np.max(np.abs(self.entries.sum(axis=1) - 1.0)))

    def is_stochastic(self, tol: float = 1e-9) -> bool:
        a = self.entries
        return bool(np.all(a >= 0.0) and np.all(a <= 1.0 + tol) and self.row_sum_error() <= tol)


@dataclass(frozen=True)
class SingleTypeParams:
    N: int
    F: int
    rho: float
    arrival: ArrivalDist

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"queue capacity N must be >= 1, got {self.N}")
        if self.F < 1:
            raise DomainError(f"FU count must be >= 1, got {self.F}")
        check_readiness(self.rho)


def consumption_entries(N: int, F: int, rho: float) -> np.ndarray:
    """(N+1, N+1) issue-stage transition probabilities.

    From ``i`` resident instructions, ``i - j`` issue. Fewer than ``F``
    issues means exactly that many were ready; exactly ``F`` issues means at
    least ``F`` were ready. When both conditions hold (``i - j == F``) the
    at-least case wins.
    """
    C = np.zeros((N + 1, N + 1))
    for i in range(N + 1):
        for j in range(i + 1):
            issued = i - j
            if issued == F:
                C[i, j] = math.fsum(binomial_pmf(i, rho, k) for k in range(F, i + 1))
            elif issued < F:
                C[i, j] = binomial_pmf(i, rho, issued)
    return C


def arrival_entries(N: int, arrival: ArrivalDist) -> np.ndarray:
    """(N+1, N+1) dispatch-stage transition probabilities; column N takes the overflow mass."""
    A = np.zeros((N + 1, N + 1))
    for i in range(N + 1):
        for j in range(i, N):
            A[i, j] = arrival.pmf(j - i)
        A[i, N] = 1.0 - math.fsum(A[i, i:N])
    np.clip(A[:, N], 0.0, 1.0, out=A[:, N])
    return A


def consumption_matrix_1d(params: SingleTypeParams) -> TransitionMatrix:
    return TransitionMatrix(consumption_entries(params.N, params.F, params.rho), "consumption")


def arrival_matrix_1d(N: int, arrival: ArrivalDist) -> TransitionMatrix:
    if N < 1:
        raise DomainError(f"queue capacity N must be >= 1, got {N}")
    return TransitionMatrix(arrival_entries(N, arrival), "arrival")
