"""Occupancy states of a T-type issue queue with capacity N.

A state is the tuple ``(n_1, ..., n_T)`` of per-type instruction counts with
``sum(n) <= N``. States are kept in lexicographic order so that matrix row
and column ``k`` always refer to the same tuple.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityExceeded, DomainError, StateCountOverflow

OccupancyState = tuple[int, ...]

DEFAULT_MAX_STATES = 20_000


def state_space_size(T: int, N: int) -> int:
    """Number of T-tuples of non-negative integers summing to at most N.

    Equals ``(T+N)! / (N! T!)``, evaluated multiplicatively so intermediate
    values never exceed the result times ``T``.
    """
    _check_dims(T, N)
    k = min(T, N)
    size = 1
    for i in range(1, k + 1):
        size = size * (T + N - k + i) // i
    if size > sys.maxsize:
        # Python ints do not overflow; the limit is what an index array can hold.
        raise StateCountOverflow(f"state count {size} exceeds the platform index range")
    return size


def boundary_count(T: int, N: int) -> int:
    """Number of T-tuples summing to exactly N (the full-queue states)."""
    if T == 1:
        return 1
    return state_space_size(T - 1, N)


def is_boundary(state: OccupancyState, N: int) -> bool:
    return sum(state) == N


def _check_dims(T, N):
    if not isinstance(T, (int, np.integer)) or not isinstance(N, (int, np.integer)):
        raise DomainError(f"T and N must be integers, got {T!r}, {N!r}")
    if T < 1 or N < 1:
        raise DomainError(f"T and N must be >= 1, got T={T}, N={N}")


def _lex_tuples(T: int, budget: int):
    if T == 1:
        for n in range(budget + 1):
            yield (n,)
        return
    for head in range(budget + 1):
        for tail in _lex_tuples(T - 1, budget - head):
            yield (head, *tail)


@dataclass(frozen=True)
class StateSpace:
    """Lexicographically ordered occupancy states plus their inverse index."""

    T: int
    N: int
    states: tuple[OccupancyState, ...]
    _index: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, k):
        return self.states[k]

    def index_of(self, state) -> int:
        try:
            return self._index[tuple(int(n) for n in state)]
        except KeyError:
            raise DomainError(f"{tuple(state)} is not a state for T={self.T}, N={self.N}") from None

    @property
    def counts(self) -> np.ndarray:
        """(|S|, T) integer array; row k is ``states[k]``."""
        arr = np.array(self.states, dtype=np.int64).reshape(len(self.states), self.T)
        arr.setflags(write=False)
        return arr

    @property
    def totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def boundary_mask(self) -> np.ndarray:
        return self.totals == self.N


def enumerate_states(T: int, N: int, max_states: int = DEFAULT_MAX_STATES) -> StateSpace:
    size = state_space_size(T, N)
    if size > max_states:
        raise CapacityExceeded(
            f"T={T}, N={N} gives {size} states, above the ceiling of {max_states}"
        )
    states = tuple(_lex_tuples(int(T), int(N)))
    index = {s: k for k, s in enumerate(states)}
    return StateSpace(int(T), int(N), states, index)
