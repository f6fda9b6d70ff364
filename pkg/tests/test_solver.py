import warnings

import numpy as np
import pytest
from hypothesis import given

from iqfu import solver
from iqfu.errors import DimensionMismatch, FlowRatioUndefined, NoConvergence, NonUniqueWarning
from iqfu.multi_type import ModelConfig
from iqfu.single_type import TransitionMatrix
from iqfu.solver import complete_matrix, metrics, solve_model, steady_state
from iqfu.state_space import enumerate_states

import golden
from test_multi_type import TWO_DEC, models


def eig_stationary(P):
    """Independent route: eigenvector of P^T for the eigenvalue closest to 1."""
    w, v = np.linalg.eig(np.asarray(P).T)
    x = np.real(v[:, np.argmin(np.abs(w - 1.0))])
    return x / x.sum()


def test_single_type_complete_matrix(single_model):
    sol = solve_model(single_model)
    np.testing.assert_allclose(sol.P.entries, golden.SINGLE_P, atol=5e-4, rtol=0)
    assert sol.P.role == "complete"


def test_identity_consumption_gives_arrival(two_type_model):
    sol = solve_model(two_type_model)
    eye = TransitionMatrix(np.eye(10), "consumption", sol.space)
    assert np.array_equal(complete_matrix(eye, sol.A).entries, sol.A.entries)


def test_two_type_complete_row(two_type_model):
    sol = solve_model(two_type_model)
    row = sol.P.entries[sol.space.index_of((0, 3))]
    expected = [0, 0, 0.08, 0.37, 0, 0, 0.55, 0, 0, 0]
    assert np.max(np.abs(row - expected)) <= TWO_DEC


def test_complete_matrix_checks_inputs(two_type_model, single_model):
    a = solve_model(two_type_model)
    b = solve_model(single_model)
    with pytest.raises(DimensionMismatch):
        complete_matrix(a.C, b.A)
    with pytest.raises(DimensionMismatch):
        complete_matrix(a.A, a.C)


def test_three_state_chain():
    ss = steady_state(golden.THREE_STATE_P)
    np.testing.assert_allclose(ss.pi, golden.THREE_STATE_PI, atol=1e-3, rtol=0)
    np.testing.assert_allclose(ss.pi, eig_stationary(golden.THREE_STATE_P), atol=1e-10, rtol=0)
    # balance equations give pi = (0.4, 1, 0.125) / 1.525 exactly
    np.testing.assert_allclose(ss.pi, np.array([0.4, 1.0, 0.125]) / 1.525, atol=1e-10, rtol=0)


def test_single_type_matches_eigenvector(single_model):
    sol = solve_model(single_model)
    np.testing.assert_allclose(sol.report.pi, eig_stationary(sol.P.entries), atol=1e-9, rtol=0)
    assert sol.report.L_total == pytest.approx(golden.SINGLE_L, abs=5e-3)


def test_identity_chain_is_uniform_with_warning():
    with pytest.warns(NonUniqueWarning):
        ss = steady_state(np.eye(5))
    assert np.array_equal(ss.pi, np.full(5, 0.2))
    assert not ss.unique


def test_periodic_chain_falls_back_to_direct_solve():
    P = np.array([[0.0, 0.5, 0.5], [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    ss = steady_state(P, max_iter=500)
    assert ss.method == "direct"
    np.testing.assert_allclose(ss.pi, [0.5, 0.25, 0.25], atol=1e-12)


def test_no_convergence(monkeypatch):
    P = np.array([[0.0, 0.5, 0.5], [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    monkeypatch.setattr(solver, "_direct_solve", lambda P: np.full(3, 1 / 3))
    with pytest.raises(NoConvergence):
        steady_state(P, max_iter=50)


@given(models())
def test_residual_bound_on_every_solve(model):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        sol = solve_model(model)
    r = sol.report
    assert np.max(np.abs(r.pi @ sol.P.entries - r.pi)) <= 1e-10
    assert r.residual <= 1e-10
    assert np.all(r.pi >= 0) and abs(r.pi.sum() - 1) <= 1e-9
    assert abs(r.L_total - sum(r.L_per_type)) <= 1e-9
    assert 0 <= r.L_total <= model.N


def test_two_type_metrics(two_type_model):
    r = solve_model(two_type_model).report
    np.testing.assert_allclose(r.L_per_type, golden.TWO_TYPE_L, atol=5e-3)
    assert r.L_total == pytest.approx(golden.TWO_TYPE_L_TOTAL, abs=5e-3)
    np.testing.assert_allclose(r.flow_ratio, golden.TWO_TYPE_R, atol=5e-3)
    assert r.p_full == pytest.approx(golden.TWO_TYPE_P_FULL, abs=0.01)


def test_reproducible(two_type_model):
    a = solve_model(two_type_model).report
    b = solve_model(two_type_model).report
    assert a.pi.tobytes() == b.pi.tobytes()
    assert (a.L_per_type, a.L_total, a.p_full, a.iterations) == (b.L_per_type, b.L_total, b.p_full, b.iterations)


def test_flow_ratio_undefined_for_idle_type():
    model = ModelConfig.poisson(3, [1.0, 0.0], [0.5, 0.5], [1, 1])
    space = enumerate_states(2, 3)
    sol = solve_model(model)
    with pytest.warns(FlowRatioUndefined):
        r = metrics(sol.report.pi, space, model)
    assert r.L_per_type[1] < 1e-9
    assert r.flow_ratio[1] is None
    assert r.flow_ratio[0] == pytest.approx(1.0 / r.L_per_type[0])
    assert any("undefined" in d for d in r.diagnostics)


def test_flow_ratio_advice(two_type_model):
    sol = solve_model(two_type_model)
    lines = solver.flow_ratio_advice(two_type_model, sol.report)
    assert len(lines) == 1 and "type2" in lines[0] and "suggestion" in lines[0]


@pytest.mark.parametrize("eps,method", [(2e-5, "power"), (1e-7, "direct")])
def test_slow_mixing_chain(eps, method):
    # past the plain-iteration budget: squaring reaches the limit unless the cap is hit first
    P = np.array([[1 - eps, eps], [2 * eps, 1 - 2 * eps]])
    ss = steady_state(P)
    assert ss.iterations > solver.PLAIN_ITERS and ss.method == method
    assert ss.residual <= 1e-10
    np.testing.assert_allclose(ss.pi, [2 / 3, 1 / 3], atol=1e-6)
