"""Per-cycle matrix, stationary distribution and queue-length metrics."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, FlowRatioUndefined, NoConvergence, NonUniqueWarning
from .multi_type import ModelConfig, joint_arrival_matrix, joint_consumption_matrix
from .single_type import TransitionMatrix
from .state_space import DEFAULT_MAX_STATES, StateSpace, enumerate_states

RESIDUAL_TOL = 1e-10
STEP_TOL = 1e-13
MAX_ITER = 1_000_000
PLAIN_ITERS = 10_000
# expected lengths below this are stationary mass left on transient states
ZERO_LENGTH = 1e-9


@dataclass
class SteadyState:
    pi: np.ndarray
    iterations: int
    residual: float
    method: str
    unique: bool = True


@dataclass
class SteadyStateReport:
    pi: np.ndarray
    L_per_type: tuple[float, ...]
    L_total: float
    flow_ratio: tuple[Optional[float], ...]
    p_full: float
    iterations: int = 0
    residual: float = 0.0
    diagnostics: list[str] = field(default_factory=list)


def complete_matrix(C: TransitionMatrix, A: TransitionMatrix) -> TransitionMatrix:
    """One clock cycle: issue (C) followed by dispatch (A)."""
    if C.size != A.size:
        raise DimensionMismatch(f"C is {C.size}x{C.size} but A is {A.size}x{A.size}")
    if C.space is not None and A.space is not None and C.space.states != A.space.states:
        raise DimensionMismatch("C and A are indexed by different state spaces")
    if C.role != "consumption" or A.role != "arrival":
        raise DimensionMismatch(f"expected consumption x arrival, got {C.role} x {A.role}")
    P = C.entries @ A.entries
    return TransitionMatrix(P, "complete", C.space if C.space is not None else A.space)


def _entries(P) -> np.ndarray:
    return P.entries if isinstance(P, TransitionMatrix) else np.asarray(P, dtype=float)


def _residual(pi, P):
    return float(np.max(np.abs(pi @ P - pi)))


def _has_unique_stationary(P) -> bool:
    n = P.shape[0]
    if n == 1:
        return True
    return np.linalg.matrix_rank(P.T - np.eye(n), tol=1e-9) == n - 1


def _direct_solve(P):
    n = P.shape[0]
    # replace one balance equation with the normalisation constraint
    M = P.T - np.eye(n)
    M[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    pi = np.linalg.lstsq(M, b, rcond=None)[0]
    pi = np.clip(pi, 0.0, None)
    return pi / pi.sum()


def steady_state(P, max_iter: int = MAX_ITER, tol: float = RESIDUAL_TOL) -> SteadyState:
    """Left fixed point of a row-stochastic matrix by power iteration.

    Iteration starts from the uniform vector and stops once an update moves
    the vector by less than 1e-13 in L1 or the residual ``max|pi P - pi|``
    drops below ``tol``. Slowly mixing chains switch to repeated squaring
    after ``PLAIN_ITERS`` steps, which still yields ``u P^k`` but doubles
    ``k`` each round; ``max_iter`` caps ``k``. If the cap is reached, a
    direct solve of the balance equations is tried before giving up.
    Chains with several stationary vectors get the power-iteration limit
    from uniform and a NonUniqueWarning.
    """
    P = _entries(P)
    n = P.shape[0]
    pi = np.full(n, 1.0 / n)
    method = "power"
    it = 0
    converged = False
    while it < min(max_iter, PLAIN_ITERS):
        nxt = pi @ P
        nxt /= nxt.sum()
        it += 1
        step = float(np.abs(nxt - pi).sum())
        pi = nxt
        if step < STEP_TOL or _residual(pi, P) < tol:
            converged = True
            break

    Q, k = P, 1
    while not converged and it + k <= max_iter:
        # pi currently equals u P^it; advance by k = 2^j steps at once
        nxt = pi @ Q
        nxt /= nxt.sum()
        it += k
        step = float(np.abs(nxt - pi).sum())
        pi = nxt
        converged = step < STEP_TOL or _residual(pi, P) < tol
        Q, k = Q @ Q, 2 * k

    residual = _residual(pi, P)
    if residual > tol:
        candidate = _direct_solve(P)
        if _residual(candidate, P) <= tol:
            pi, residual, method = candidate, _residual(candidate, P), "direct"
        else:
            raise NoConvergence(
                f"no stationary vector within {tol:g} after {it} iterations "
                f"(residual {residual:.3g}); the chain may be periodic"
            )

    unique = _has_unique_stationary(P)
    if not unique:
        warnings.warn("chain has more than one stationary distribution; "
                      "returning the limit from the uniform start", NonUniqueWarning, stacklevel=2)
    return SteadyState(pi, it, residual, method, unique)


def metrics(pi, space: StateSpace, config: ModelConfig, solve: Optional[SteadyState] = None) -> SteadyStateReport:
    pi = np.asarray(pi, dtype=float)
    S = space.counts
    L = tuple(math.fsum(S[:, t] * pi) for t in range(config.T))
    L_total = math.fsum(S.sum(axis=1) * pi)
    diagnostics = []
    ratios = []
    for t, (mu, Lt) in enumerate(zip(config.mu, L)):
        if Lt < ZERO_LENGTH:
            msg = f"flow ratio undefined for {config.names[t]}: expected queue length is 0"
            warnings.warn(msg, FlowRatioUndefined, stacklevel=2)
            diagnostics.append(msg)
            ratios.append(None)
        else:
            ratios.append(mu / Lt)
    p_full = math.fsum(pi[space.boundary_mask])
    report = SteadyStateReport(pi, L, L_total, tuple(ratios), p_full, diagnostics=diagnostics)
    if solve is not None:
        report.iterations = solve.iterations
        report.residual = solve.residual
        if solve.method != "power":
            diagnostics.append(f"stationary vector from {solve.method} solve")
        if not solve.unique:
            diagnostics.append("NonUnique: chain has several stationary distributions")
    return report


@dataclass
class Solution:
    config: ModelConfig
    space: StateSpace
    C: TransitionMatrix
    A: TransitionMatrix
    P: TransitionMatrix
    report: SteadyStateReport


def solve_model(config: ModelConfig, max_states: int = DEFAULT_MAX_STATES,
                arrival: Optional[TransitionMatrix] = None) -> Solution:
    """Full pipeline: states, joint C and A, P = C A, pi, metrics.

    ``arrival`` lets callers reuse a dispatch matrix across FU configurations,
    since it does not depend on FU counts.
    """
    space = enumerate_states(config.T, config.N, max_states)
    C = joint_consumption_matrix(config, space)
    A = arrival if arrival is not None else joint_arrival_matrix(config, space)
    P = complete_matrix(C, A)
    ss = steady_state(P)
    return Solution(config, space, C, A, P, metrics(ss.pi, space, config, ss))


def flow_ratio_advice(config: ModelConfig, report: SteadyStateReport) -> list[str]:
    """Plain-text hints comparing each type's flow ratio with the best-flowing type.

    These are suggestions only; scaling FU counts by the ratio is not
    claimed to equalise the flow ratios.
    """
    defined = [(r, t) for t, r in enumerate(report.flow_ratio) if r is not None]
    if len(defined) < 2:
        return []
    best, tb = max(defined)
    lines = []
    for r, t in defined:
        if t != tb and r > 0:
            lines.append(
                f"{config.names[t]}: flow ratio {r:.3f} vs {best:.3f} for {config.names[tb]}; "
                f"theoretical FU scaling factor {best / r:.3f} (suggestion only)"
            )
    return lines
