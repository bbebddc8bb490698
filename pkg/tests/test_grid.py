import numpy as np
import pytest

from impregnation import (
    ConstantPcFront,
    DomainError,
    FrontLaw,
    InvalidFrontError,
    LinearFront,
    build_grid,
    path_arc_length,
)

from oracles import arc_length_trapezoid

FRONT = ConstantPcFront(5.0)

# trapezoid oracle, 1e6 samples of sqrt(1 + (rho (1 - rho) / 5)^2)
L_SIGMA5 = 1.000666349539


def test_arc_length_constant_pc():
    assert arc_length_trapezoid(lambda r: r * (1 - r) / 5.0) == pytest.approx(L_SIGMA5, rel=1e-11)
    assert path_arc_length(FRONT) == pytest.approx(L_SIGMA5, rel=1e-6)


def test_arc_length_straight_line():
    assert path_arc_length(LinearFront(1.0 / 30.0)) == pytest.approx(np.sqrt(1 + 1 / 900), rel=1e-12)


def test_arc_length_tends_to_one_for_fast_front():
    assert path_arc_length(ConstantPcFront(1e6)) == pytest.approx(1.0, abs=1e-12)


def test_axis_scale_changes_division():
    g1 = build_grid(FRONT, 10)
    g2 = build_grid(FRONT, 10, axis_scale=30.0)
    assert g2.path_length > g1.path_length
    assert not np.allclose(g1.faces, g2.faces)


class _Wiggly(FrontLaw):
    @property
    def rho_e(self):
        return 1.0

    def tau_of_rho(self, rho_f):
        rho = np.asarray(rho_f, dtype=float)
        # slope 1 - 2 cos(6 pi rho) changes sign
        return rho - np.sin(6 * np.pi * rho) / (3 * np.pi)


def test_non_monotone_front_rejected():
    with pytest.raises(InvalidFrontError):
        path_arc_length(_Wiggly())
    with pytest.raises(InvalidFrontError):
        build_grid(_Wiggly(), 10)


@pytest.mark.parametrize("n", [0, 1, 2.5])
def test_grid_size_validated(n):
    with pytest.raises(DomainError):
        build_grid(FRONT, n)


def test_two_cells_split_near_half():
    g = build_grid(FRONT, 2)
    assert g.faces[1] == pytest.approx(0.5, abs=1e-3)


@pytest.mark.parametrize("n", [2, 7, 100])
def test_straight_line_grid_is_uniform(n):
    front = LinearFront(1.0 / 30.0)
    g = build_grid(front, n)
    i = np.arange(n + 1)
    np.testing.assert_allclose(g.faces, i / n, rtol=0, atol=1e-13)
    np.testing.assert_allclose(g.times, i * front.tau_e / n, rtol=0, atol=1e-14)


@pytest.fixture(scope="module")
def grid1000():
    return build_grid(FRONT, 1000)


def test_first_step_tiny(grid1000):
    g = grid1000
    assert g.faces[1] == pytest.approx(1e-3, rel=1e-3)
    assert g.times[1] == pytest.approx(FRONT.tau_of_rho(g.faces[1]), rel=1e-15)
    assert 5e-8 < g.times[1] < 2e-7
    assert g.times[1] < 1e-4 * FRONT.tau_e


def test_grid_invariants(grid1000):
    g = grid1000
    assert g.times[0] == 0.0 and g.faces[0] == 0.0
    assert g.times[-1] == pytest.approx(1.0 / 30.0, abs=1e-12)
    assert g.faces[-1] == 1.0
    assert np.all(np.diff(g.times) > 0) and np.all(np.diff(g.faces) > 0)
    assert np.all(g.midpoints > g.faces[:-1]) and np.all(g.midpoints < g.faces[1:])
    assert np.all(g.volumes > 0)
    assert abs(g.volumes.sum() - 1.0 / 3.0) <= 1e-14
    np.testing.assert_array_equal(g.times, FRONT.tau_of_rho(g.faces))


def test_equal_arc_property(grid1000):
    g = grid1000
    # arc length along the exact path between consecutive nodes, by dense trapezoid
    s = [0.0]
    for a, b in zip(g.faces[:-1], g.faces[1:]):
        r = np.linspace(a, b, 201)
        s.append(s[-1] + np.trapezoid(np.sqrt(1 + (r * (1 - r) / 5.0) ** 2), r))
    s = np.array(s)
    target = np.arange(g.n + 1) * s[-1] / g.n
    assert np.max(np.abs(s - target)) <= 1e-6 * s[-1]
    seg = np.diff(s)
    assert np.max(np.abs(seg - s[-1] / g.n) / (s[-1] / g.n)) <= 1e-6


def test_refinement_halves_steps():
    coarse, fine = build_grid(FRONT, 200), build_grid(FRONT, 400)
    for attr in ("times", "faces"):
        ratio = np.diff(getattr(fine, attr)).max() / np.diff(getattr(coarse, attr)).max()
        assert 0.4 < ratio < 0.6


def test_grid_is_immutable(grid1000):
    with pytest.raises(ValueError):
        grid1000.faces[3] = 0.0
