import numpy as np
import pytest

from impregnation import (
    ConstantPcFront,
    DomainError,
    Layer,
    ModelParams,
    build_grid,
    m1_inflow,
    m1_trapezoid,
    m2_content,
    run,
    verify_balance,
)
from impregnation import solver as solver_mod

FRONT = ConstantPcFront(5.0)


@pytest.mark.parametrize(
    "tau, u0, expected",
    [(0.0, 1.0, 0.0), (0.0, 0.3, 0.0), (1.0 / 30.0, 1.0, 1.0 / 3.0), (1.0 / 60.0, 1.0, (1 - 0.125) / 3)],
)
def test_m1_values(tau, u0, expected):
    assert m1_inflow(FRONT, tau, u0) == pytest.approx(expected, abs=1e-15)


def test_m1_domain():
    with pytest.raises(DomainError):
        m1_inflow(FRONT, 0.04)
    with pytest.raises(DomainError):
        m1_inflow(FRONT, -1e-3)


def test_m1_trapezoid_agrees_at_terminal_time():
    grid = build_grid(FRONT, 1000)
    approx = m1_trapezoid(FRONT, grid)
    exact = m1_inflow(FRONT, grid.times[-1])
    assert abs(approx[-1] - exact) / exact <= 1e-3
    assert np.all(np.diff(approx) > 0)


def test_m2_examples():
    grid = build_grid(FRONT, 20)
    p = ModelParams(eta=6.0)
    full = Layer(20, np.ones(20), np.zeros(20))
    assert m2_content(full, grid, p) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert m2_content(Layer(20, np.zeros(20), np.zeros(20)), grid, p) == 0.0
    one = Layer(1, np.ones(1), np.zeros(1))
    rho1 = grid.faces[1]
    assert m2_content(one, grid, p) == pytest.approx((1 - (1 - rho1) ** 3) / 3, rel=1e-14)
    mixed = Layer(2, np.array([0.5, 0.25]), np.array([0.1, 0.0]))
    want = grid.volumes[0] * (0.5 + 0.6) + grid.volumes[1] * 0.25
    assert m2_content(mixed, grid, p) == pytest.approx(want, rel=1e-14)


def test_pure_fill_balance(run_pure_fill):
    front, params, result = run_pure_fill
    series = verify_balance(result.layers, result.grid, front, params)
    assert series.max_rel_diff <= 1e-8
    assert series.passed and series.status == "PASS"


@pytest.mark.parametrize("fixture", ["run_k10", "run_k100"])
def test_reference_runs_pass(fixture, request):
    front, params, result = request.getfixturevalue(fixture)
    series = verify_balance(result.layers, result.grid, front, params)
    assert series.passed
    assert series.max_rel_diff <= max(100 * 1e-6, 1e-6 * result.grid.n)
    assert np.all(np.diff(series.m1) > 0)
    assert np.all(series.m2 >= 0)


def test_m2_nondecreasing_without_desorption():
    params = ModelParams(kplus=20.0, kminus=0.0)
    result = run(FRONT, params, 200)
    series = verify_balance(result.layers, result.grid, FRONT, params)
    assert np.all(np.diff(series.m2) >= 0)


def test_perturbed_front_flux_fails(monkeypatch):
    real = solver_mod.assemble_u_system

    def leaky(layer_prev, theta_iter, grid, level, params, q=None):
        lower, diag, upper, rhs = real(layer_prev, theta_iter, grid, level, params, q)
        # spurious outflow through the front face: F_front = 0.5 Q u_front
        diag = diag.copy()
        diag[-1] += 0.5 * solver_mod.step_inflow_rate(grid, level)
        return lower, diag, upper, rhs

    monkeypatch.setattr(solver_mod, "assemble_u_system", leaky)
    params = ModelParams(kplus=10.0)
    result = solver_mod.run(FRONT, params, 200)
    series = verify_balance(result.layers, result.grid, FRONT, params)
    assert not series.passed
    assert series.status == "FAIL"


def test_threshold_is_configurable(run_k10):
    front, params, result = run_k10
    series = verify_balance(result.layers, result.grid, front, params, threshold=1e-30)
    assert series.max_rel_diff > 0.0
    assert not series.passed
