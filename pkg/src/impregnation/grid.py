"""
Consistent space-time grid built from the front path.

The curve ``(tau_f(rho), rho)`` is cut into ``n`` pieces of equal arc length.
Each cut point gives one time level ``tau_i`` and one radial face
``rho_i = rho_f(tau_i)``, so exactly one new cell is wetted per time step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, InvalidFrontError
from .front import FrontLaw

MIN_TABLE_INTERVALS = 10_000


@dataclass(frozen=True)
class SpaceTimeGrid:
    """Time levels, faces, midpoints and exact spherical cell volumes.

    Attributes
    ----------
    times : ndarray, shape (n + 1,)
        ``tau_0 = 0 < tau_1 < ... < tau_n = tau_e``.
    faces : ndarray, shape (n + 1,)
        ``rho_0 = 0 < rho_1 < ... < rho_n = rho_e``.
    midpoints : ndarray, shape (n,)
        Cell centres ``(rho_{j-1} + rho_j) / 2`` for ``j = 1..n``.
    volumes : ndarray, shape (n,)
        ``[(1 - rho_{j-1})**3 - (1 - rho_j)**3] / 3``, the integral of
        ``(1 - rho)**2`` over cell ``j``.
    path_length : float
        Arc length of the front path.
    axis_scale : float
        Factor applied to the time axis when measuring arc length.
    """

    times: np.ndarray
    faces: np.ndarray
    midpoints: np.ndarray
    volumes: np.ndarray
    path_length: float
    axis_scale: float = 1.0

    @property
    def n(self) -> int:
        return len(self.volumes)

    @property
    def dtau(self) -> np.ndarray:
        """Step sizes ``tau_i - tau_{i-1}``, index ``i - 1``."""
        return np.diff(self.times)


def cell_volumes(faces) -> np.ndarray:
    """Exact volumes between consecutive faces (weight ``(1 - rho)**2``)."""
    w = (1.0 - np.asarray(faces, dtype=float)) ** 3
    return (w[:-1] - w[1:]) / 3.0


def _arc_table(front: FrontLaw, intervals: int, axis_scale: float):
    rho = np.linspace(0.0, front.rho_e, intervals + 1)
    tau = np.asarray(front.tau_of_rho(rho), dtype=float)
    dt = np.diff(tau)
    if not np.all(dt > 0.0) or tau[0] != 0.0:
        raise InvalidFrontError("front law is not strictly increasing from tau(0) = 0")
    seg = np.hypot(axis_scale * dt, np.diff(rho))
    s = np.concatenate(([0.0], np.cumsum(seg)))
    return rho, s


def path_arc_length(front: FrontLaw, n_samples: int | None = None, axis_scale: float = 1.0) -> float:
    """Length of the front path in the ``(axis_scale * tau, rho)`` plane.

    Polyline (chord) quadrature over ``n_samples`` uniform intervals in
    ``rho``, at least 10**4.
    """
    intervals = max(int(n_samples or 0), MIN_TABLE_INTERVALS)
    _, s = _arc_table(front, intervals, axis_scale)
    return float(s[-1])


def build_grid(front: FrontLaw, n: int, axis_scale: float = 1.0) -> SpaceTimeGrid:
    """Split the front path into ``n`` equal-arc segments.

    The cut points are placed by linear inverse interpolation of the
    cumulative arc table; each ``tau_i`` is then recomputed from the front
    law so every node lies exactly on the path.
    """
    if int(n) != n or n < 2:
        raise DomainError(f"grid size must be an integer >= 2, got {n!r}")
    n = int(n)
    if not axis_scale > 0.0:
        raise DomainError(f"axis_scale must be positive, got {axis_scale!r}")

    rho_tab, s_tab = _arc_table(front, max(10 * n, MIN_TABLE_INTERVALS), axis_scale)
    length = float(s_tab[-1])
    targets = length * np.arange(n + 1) / n
    faces = np.interp(targets, s_tab, rho_tab)
    faces[0] = 0.0
    faces[-1] = front.rho_e
    if not np.all(np.diff(faces) > 0.0):
        raise InvalidFrontError("equal-arc inversion produced non-increasing faces")

    times = np.asarray(front.tau_of_rho(faces), dtype=float)
    if not np.all(np.diff(times) > 0.0):
        raise InvalidFrontError("front law gives non-increasing times on the grid")

    for arr in (times, faces):
        arr.setflags(write=False)
    midpoints = 0.5 * (faces[:-1] + faces[1:])
    volumes = cell_volumes(faces)
    midpoints.setflags(write=False)
    volumes.setflags(write=False)
    return SpaceTimeGrid(times, faces, midpoints, volumes, length, float(axis_scale))
