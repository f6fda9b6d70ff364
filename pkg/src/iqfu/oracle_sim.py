"""Cycle-level Monte Carlo simulation of the issue queue.

Each cycle first issues: every resident type-t instruction is independently
ready with probability ``rho[t]`` (re-drawn every cycle) and at most
``fu[t]`` ready ones leave. Then it dispatches: each type offers an
independent arrival count. If everything fits with room to spare, it all
enters; otherwise (including landing exactly on a full queue) the free
slots are filled one at a time with types drawn i.i.d. in proportion to
the arrival means.

Nothing here touches the analytic matrices, which is what makes the
simulator usable as an oracle for them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainError
from .multi_type import ModelConfig, type_probabilities
from .state_space import OccupancyState, enumerate_states

GENERATOR = "PCG64"
BLOCK = 1 << 16


@dataclass(frozen=True)
class SimConfig:
    model: ModelConfig
    cycles: int = 1_000_000
    warmup: int = 1_000
    seed: int = 0

    def __post_init__(self):
        if not self.cycles > self.warmup >= 0:
            raise DomainError(f"need cycles > warmup >= 0, got cycles={self.cycles}, warmup={self.warmup}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


@dataclass
class SimReport:
    states: tuple[OccupancyState, ...]
    empirical_pi: np.ndarray
    empirical_L_per_type: tuple[float, ...]
    empirical_L_total: float
    cycles: int
    warmup: int
    seed: int
    generator: str = GENERATOR
    tv_distance_to: Optional[float] = None
    extra: dict = field(default_factory=dict)


def tv_distance(p, q) -> float:
    """Total-variation distance: half the L1 distance."""
    p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise DomainError(f"cannot compare vectors of shapes {p.shape} and {q.shape}")
    return 0.5 * float(np.abs(p - q).sum())


def _issue(state, ready, fu):
    return [n - (r if r < f else f) for n, r, f in zip(state, ready, fu)]


def _dispatch(post, offered, N, draw_slot_types: Callable[[int], Sequence[int]]):
    occupied = sum(post)
    if occupied + sum(offered) < N:
        return [m + k for m, k in zip(post, offered)]
    out = list(post)
    for t in draw_slot_types(N - occupied):
        out[t] += 1
    return out


def step(state, model: ModelConfig, rng: np.random.Generator) -> OccupancyState:
    """Advance one clock cycle (issue, then dispatch) from ``state``."""
    state = [int(n) for n in state]
    if len(state) != model.T or min(state) < 0 or sum(state) > model.N:
        raise DomainError(f"{tuple(state)} is not a valid state for T={model.T}, N={model.N}")
    ready = [int((rng.random(n) < rho).sum()) for n, rho in zip(state, model.rho)]
    post = _issue(state, ready, model.fu)
    offered = [int(a.sample(rng, None)) for a in model.arrivals]
    p = type_probabilities(model)
    nxt = _dispatch(post, offered, model.N, lambda free: rng.choice(model.T, size=free, p=p).tolist())
    return tuple(nxt)


def sample_issue(state, model: ModelConfig, trials: int, rng: np.random.Generator) -> np.ndarray:
    """(trials, T) array of independent post-issue states from ``state``."""
    state = np.asarray(state, dtype=np.int64)
    post = np.empty((trials, model.T), dtype=np.int64)
    for t in range(model.T):
        n = int(state[t])
        ready = (rng.random((trials, n)) < model.rho[t]).sum(axis=1)
        post[:, t] = n - np.minimum(ready, model.fu[t])
    return post


def sample_transitions(state, model: ModelConfig, trials: int, rng: np.random.Generator) -> np.ndarray:
    """(trials, T) array of independent one-cycle successors of ``state``.

    Vectorised form of ``step``. Filling the free slots with i.i.d. types
    is the same as a single multinomial draw of the slot count.
    """
    N = model.N
    post = sample_issue(state, model, trials, rng)
    offered = np.column_stack([a.sample(rng, trials) for a in model.arrivals]).astype(np.int64)
    nxt = post + offered
    over = nxt.sum(axis=1) >= N
    if over.any():
        free = N - post[over].sum(axis=1)
        nxt[over] = post[over] + rng.multinomial(free, type_probabilities(model))
    return nxt


class _SlotPool:
    """Pre-drawn i.i.d. slot types, consumed in order and refilled on demand."""

    def __init__(self, rng, T, p):
        self.rng, self.T, self.p = rng, T, p
        self.buf, self.pos = [], 0

    def take(self, k):
        if self.pos + k > len(self.buf):
            self.buf = self.buf[self.pos:] + self.rng.choice(self.T, size=BLOCK, p=self.p).tolist()
            self.pos = 0
        out = self.buf[self.pos:self.pos + k]
        self.pos += k
        return out


def run(sim: SimConfig) -> SimReport:
    """Simulate from the empty queue; tally post-dispatch states after warmup.

    Random inputs are drawn in blocks of cycles: per type, a cumulative
    count of ready instructions for every possible occupancy, and the
    offered arrival counts. Output is a deterministic function of the seed.
    """
    model = sim.model
    T, N, fu = model.T, model.N, model.fu
    space = enumerate_states(T, N)
    index = {s: k for k, s in enumerate(space.states)}
    rng = np.random.Generator(np.random.PCG64(sim.seed))
    slots = _SlotPool(rng, T, type_probabilities(model))
    tally = [0] * len(space)
    sums = [0] * T
    state = [0] * T
    cycle = 0

    while cycle < sim.cycles:
        b = min(BLOCK, sim.cycles - cycle)
        ready = []
        for rho in model.rho:
            hits = np.zeros((b, N + 1), dtype=np.int64)
            np.cumsum(rng.random((b, N)) < rho, axis=1, out=hits[:, 1:])
            ready.append(hits.tolist())
        offered = list(zip(*(a.sample(rng, b).tolist() for a in model.arrivals)))
        for c in range(b):
            post = _issue(state, [ready[t][c][state[t]] for t in range(T)], fu)
            state = _dispatch(post, offered[c], N, slots.take)
            if cycle >= sim.warmup:
                tally[index[tuple(state)]] += 1
            cycle += 1

    counts = np.array(tally, dtype=float)
    pi = counts / counts.sum()
    S = space.counts
    L = tuple(float(S[:, t] @ pi) for t in range(T))
    return SimReport(space.states, pi, L, float(S.sum(axis=1) @ pi), sim.cycles, sim.warmup, sim.seed)


def run_replicas(sim: SimConfig, seeds: Sequence[int]) -> SimReport:
    """Independent runs merged by averaging frequencies in the given seed order."""
    reports = [run(SimConfig(sim.model, sim.cycles, sim.warmup, s)) for s in seeds]
    pi = np.zeros_like(reports[0].empirical_pi)
    for r in reports:
        pi += r.empirical_pi
    pi /= len(reports)
    S = np.array(reports[0].states)
    L = tuple(float(S[:, t] @ pi) for t in range(sim.model.T))
    return SimReport(reports[0].states, pi, L, float(S.sum(axis=1) @ pi), sim.cycles, sim.warmup,
                     seeds[0], extra={"seeds": list(seeds)})
