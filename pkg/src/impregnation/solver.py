"""
Implicit time stepper for the coupled transport/adsorption system.

On each time level the wetted region holds one more cell than before. The
solute balance is written in conservative finite-volume form with exact
spherical cell volumes, first-order upwind advection and two-point central
diffusion; the adsorption kinetics are integrated by backward Euler. The two
are coupled by a fixed-point iteration: coverage first, then concentration.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_banded

from .exceptions import ConvergenceError, DomainError, ImpregnationError
from .front import FrontLaw
from .grid import SpaceTimeGrid, build_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless model parameters.

    eta is the adsorption capacity ratio, d the solute diffusivity, kplus and
    kminus the adsorption and desorption rate constants, u0 the bath
    concentration.
    """

    eta: float = 6.0
    d: float = 0.1
    kplus: float = 10.0
    kminus: float = 0.1
    u0: float = 1.0

    def __post_init__(self):
        for name in ("eta", "d", "kplus", "kminus", "u0"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0.0):
                raise DomainError(f"{name} must be finite and nonnegative, got {value!r}")


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-6
    max_iters: int = 100

    def __post_init__(self):
        if not self.tol > 0.0:
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        if self.max_iters < 1:
            raise DomainError(f"max_iters must be >= 1, got {self.max_iters!r}")


@dataclass
class Layer:
    """Solution on the ``level`` wetted cells at time ``tau_level``."""

    level: int
    u: np.ndarray
    theta: np.ndarray
    iterations_used: int = 0
    residual: float = 0.0


@dataclass
class RunResult:
    grid: SpaceTimeGrid
    layers: list[Layer] = field(default_factory=list)

    @property
    def total_iterations(self) -> int:
        return sum(layer.iterations_used for layer in self.layers)

    @property
    def final(self) -> Layer:
        return self.layers[-1]


def theta_implicit_update(theta_prev, u, dtau, params: ModelParams):
    """Backward-Euler step of ``dtheta/dtau = K+ u (1 - theta) - K- theta``.

    The implicit equation is linear in the new coverage, so it is solved in
    closed form.
    """
    kp_u = params.kplus * np.asarray(u, dtype=float)
    return (np.asarray(theta_prev, dtype=float) + dtau * kp_u) / (
        1.0 + dtau * (kp_u + params.kminus)
    )


def step_inflow_rate(grid: SpaceTimeGrid, level: int) -> float:
    """Imbibition rate averaged over the step ending at ``tau_level``.

    The integral of Q over a step equals the volume of the cell wetted during
    that step, so the average is ``V_level / dtau_level``.
    """
    return float(grid.volumes[level - 1] / (grid.times[level] - grid.times[level - 1]))


def assemble_u_system(layer_prev: Layer | None, theta_iter, grid: SpaceTimeGrid,
                      level: int, params: ModelParams, q: float | None = None):
    """Build the tridiagonal system for the concentrations at ``level``.

    Parameters
    ----------
    layer_prev : Layer or None
        Converged solution at ``level - 1`` (``None`` only for ``level == 1``).
    theta_iter : array_like, shape (level,)
        Current coverage iterate.
    grid : SpaceTimeGrid
    level : int
        Time index, 1-based; the system has ``level`` unknowns.
    params : ModelParams
    q : float, optional
        Imbibition rate used on this step. Defaults to
        :func:`step_inflow_rate`.

    Returns
    -------
    lower, diag, upper, rhs : ndarray
        Each of length ``level``; ``lower[0]`` and ``upper[-1]`` are zero.
    """
    if level < 1 or level > grid.n:
        raise ImpregnationError(f"level {level} outside 1..{grid.n}")
    theta_iter = np.asarray(theta_iter, dtype=float)
    if theta_iter.shape != (level,):
        raise ImpregnationError(f"theta_iter has shape {theta_iter.shape}, expected ({level},)")
    if level > 1 and (layer_prev is None or len(layer_prev.u) != level - 1):
        raise ImpregnationError("layer_prev must hold level - 1 cells")

    dtau = grid.times[level] - grid.times[level - 1]
    if q is None:
        q = step_inflow_rate(grid, level)
    cap = grid.volumes[:level] / dtau

    # content of the newly wetted cell before this step is zero (it was dry)
    content_prev = np.zeros(level)
    if level > 1:
        content_prev[:-1] = layer_prev.u + params.eta * layer_prev.theta

    # interior faces 1..level-1: upwind advection + two-point diffusion
    inner = grid.faces[1:level]
    diff = params.d * (1.0 - inner) ** 2 / np.diff(grid.midpoints[:level])

    lower = np.zeros(level)
    upper = np.zeros(level)
    diag = cap.copy()
    diag[:-1] += q + diff
    diag[1:] += diff
    lower[1:] = -(q + diff)
    upper[:-1] = -diff

    rhs = cap * (content_prev - params.eta * theta_iter)
    # surface face: Danckwerts condition reduces the flux to q * u0
    rhs[0] += q * params.u0
    return lower, diag, upper, rhs


def solve_tridiagonal(lower, diag, upper, rhs) -> np.ndarray:
    n = len(diag)
    ab = np.empty((3, n))
    ab[0, 0] = 0.0
    ab[0, 1:] = upper[:-1]
    ab[1] = diag
    ab[2, :-1] = lower[1:]
    ab[2, -1] = 0.0
    return solve_banded((1, 1), ab, rhs, check_finite=False)


def first_layer(params: ModelParams) -> Layer:
    """Level-1 data: nothing adsorbed yet, liquid at bath concentration."""
    return Layer(level=1, u=np.array([params.u0]), theta=np.zeros(1))


def step(layer_prev: Layer, grid: SpaceTimeGrid, level: int, params: ModelParams,
         cfg: SolverConfig = SolverConfig()) -> Layer:
    """Advance from ``level - 1`` to ``level`` by coverage/concentration iteration."""
    if not 2 <= level <= grid.n:
        raise ImpregnationError(f"step level {level} outside 2..{grid.n}")
    if layer_prev.level != level - 1:
        raise ImpregnationError("layer_prev is not at level - 1")

    dtau = grid.times[level] - grid.times[level - 1]
    theta_old = np.append(layer_prev.theta, 0.0)
    u_k = np.append(layer_prev.u, layer_prev.u[-1])
    theta_k = theta_old.copy()

    lower, diag, upper, _ = assemble_u_system(layer_prev, theta_k, grid, level, params)
    residual = math.inf
    for k in range(1, cfg.max_iters + 1):
        theta_new = theta_implicit_update(theta_old, u_k, dtau, params)
        *_, rhs = assemble_u_system(layer_prev, theta_new, grid, level, params)
        u_new = solve_tridiagonal(lower, diag, upper, rhs)
        residual = max(np.max(np.abs(u_new - u_k)), np.max(np.abs(theta_new - theta_k)))
        u_k, theta_k = u_new, theta_new
        if residual < cfg.tol:
            return Layer(level, u_k, theta_k, k, float(residual))
    raise ConvergenceError(level, float(residual), cfg.max_iters)


def run(front: FrontLaw, params: ModelParams, n: int, cfg: SolverConfig = SolverConfig(),
        axis_scale: float = 1.0) -> RunResult:
    """Solve on the full grid from the first wetted cell to ``tau_e``."""
    grid = build_grid(front, n, axis_scale=axis_scale)
    result = RunResult(grid, [first_layer(params)])
    for level in range(2, grid.n + 1):
        result.layers.append(step(result.layers[-1], grid, level, params, cfg))
    logger.debug("run finished: %d levels, %d iterations", grid.n, result.total_iterations)
    return result
