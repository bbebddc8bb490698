"""Solute bookkeeping: cumulative inflow versus solute held in the pellet."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .front import FrontLaw
from .grid import SpaceTimeGrid
from .solver import Layer, ModelParams

_EPS = 1e-30


def m1_inflow(front: FrontLaw, tau, u0: float = 1.0):
    """Solute that entered through the surface up to time ``tau``.

    ``u0 * int_0^tau Q`` evaluated through ``Q dtau = (1 - rho_f)**2 drho_f``,
    which holds for any front law.
    """
    tau_e = front.tau_e
    t = np.asarray(tau, dtype=float)
    if np.any(t < -1e-12 * tau_e) or np.any(t > tau_e * (1.0 + 1e-12)):
        raise DomainError(f"time outside [0, {tau_e}]: {tau!r}")
    rho = front.rho_of_tau(t)
    out = u0 * (1.0 - (1.0 - np.asarray(rho)) ** 3) / 3.0
    return float(out) if np.ndim(out) == 0 else out


def m1_trapezoid(front: FrontLaw, grid: SpaceTimeGrid, u0: float = 1.0) -> np.ndarray:
    """Quadrature estimate of the inflow at every level ``1..n``.

    Q has an inverse-square-root singularity at ``tau = 0``, so the first
    interval is integrated as ``2 tau_1 Q(tau_1)`` (exact for ``Q ~ tau**-0.5``);
    the rest by the trapezoid rule on the solver's time grid.
    """
    q = np.asarray(front.q_of_rho(grid.faces[1:]), dtype=float)
    dt = np.diff(grid.times)
    acc = np.empty(grid.n)
    acc[0] = 2.0 * grid.times[1] * q[0]
    acc[1:] = acc[0] + np.cumsum(0.5 * (q[1:] + q[:-1]) * dt[1:])
    return u0 * acc


def m2_content(layer: Layer, grid: SpaceTimeGrid, params: ModelParams) -> float:
    """Dissolved plus adsorbed solute, ``sum_j V_j (u_j + eta theta_j)``."""
    if layer.level > grid.n:
        raise DomainError(f"layer level {layer.level} exceeds grid size {grid.n}")
    vol = grid.volumes[: layer.level]
    return float(np.sum(vol * (layer.u + params.eta * layer.theta)))


@dataclass(frozen=True)
class BalanceSeries:
    tau: np.ndarray
    m1: np.ndarray
    m2: np.ndarray
    rel_diff: np.ndarray
    threshold: float = 1e-2

    @property
    def max_rel_diff(self) -> float:
        return float(np.max(self.rel_diff))

    @property
    def max_scaled_diff(self) -> float:
        """``max |m1 - m2|`` relative to the final inflow."""
        return float(np.max(np.abs(self.m1 - self.m2)) / max(self.m1[-1], _EPS))

    @property
    def passed(self) -> bool:
        return self.max_rel_diff <= self.threshold

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def verify_balance(layers, grid: SpaceTimeGrid, front: FrontLaw, params: ModelParams,
                   threshold: float = 1e-2) -> BalanceSeries:
    """Compare inflow and content at every computed level."""
    levels = np.array([layer.level for layer in layers])
    tau = grid.times[levels]
    m1 = np.asarray(m1_inflow(front, tau, params.u0), dtype=float)
    m2 = np.array([m2_content(layer, grid, params) for layer in layers])
    rel = np.abs(m1 - m2) / np.maximum(m1, _EPS)
    return BalanceSeries(tau, m1, m2, rel, threshold)


def conservation_defects(layers, grid: SpaceTimeGrid, params: ModelParams) -> np.ndarray:
    """Per-step residual of the discrete solute balance.

    Entry ``i - 2`` is the content change from level ``i - 1`` to ``i`` minus
    the inflow ``dtau_i * Qbar_i * u0`` over that step, where ``Qbar_i`` is
    the step-averaged rate (equal to the new cell volume over ``dtau_i``).
    """
    content = np.array([m2_content(layer, grid, params) for layer in layers])
    levels = np.array([layer.level for layer in layers])
    inflow = grid.volumes[levels[1:] - 1] * params.u0
    return np.diff(content) - inflow
