"""
Front laws: the prescribed trajectory of the liquid front inside the pellet.

A front law maps dimensionless time ``tau`` to the front position ``rho_f``
(``rho = 0`` at the pellet surface, ``rho = 1`` at the centre) and carries the
imbibition rate ``Q = (1 - rho_f)**2 * d rho_f / d tau``. Concrete laws only
have to supply ``tau_of_rho`` and a terminal point; the inverse and the rate
are derived numerically unless a subclass knows them in closed form.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, SingularityError

_MAX_ROOT_ITERS = 200


class FrontLaw(ABC):
    """Monotone front trajectory ``rho_f(tau)`` on ``[0, tau_e]``.

    Subclasses must make ``tau_of_rho`` strictly increasing on
    ``[0, rho_e]`` with ``tau_of_rho(0) == 0``.
    """

    @property
    @abstractmethod
    def rho_e(self) -> float:
        """Terminal front position."""

    @property
    def tau_e(self) -> float:
        """Terminal time, ``tau_of_rho(rho_e)``."""
        return float(self.tau_of_rho(self.rho_e))

    @property
    def terminal_point(self) -> tuple[float, float]:
        return self.tau_e, self.rho_e

    @abstractmethod
    def tau_of_rho(self, rho_f):
        """Time at which the front reaches ``rho_f``. Must accept arrays."""

    def dtau_drho(self, rho_f):
        """Derivative of ``tau_of_rho``; central difference by default."""
        rho_f = np.asarray(rho_f, dtype=float)
        h = 1e-6 * self.rho_e
        lo = np.clip(rho_f - h, 0.0, self.rho_e)
        hi = np.clip(rho_f + h, 0.0, self.rho_e)
        return (self.tau_of_rho(hi) - self.tau_of_rho(lo)) / (hi - lo)

    def _check_rho(self, rho_f, lower_open: bool = False):
        arr = np.asarray(rho_f, dtype=float)
        bad = ~np.isfinite(arr) | (arr < 0.0) | (arr > self.rho_e)
        if np.any(bad):
            raise DomainError(f"front position outside [0, {self.rho_e}]: {rho_f!r}")
        if lower_open and np.any(arr == 0.0):
            raise SingularityError("imbibition rate diverges at rho_f = 0")
        return arr

    def rho_of_tau(self, tau):
        """Invert ``tau_of_rho`` by safeguarded Newton iteration.

        Values of ``tau`` within ``1e-12 * tau_e`` outside ``[0, tau_e]`` are
        clamped; anything further out raises :class:`DomainError`.
        """
        tau_e = self.tau_e
        arr = np.asarray(tau, dtype=float)
        slack = 1e-12 * tau_e
        if np.any(~np.isfinite(arr)) or np.any(arr < -slack) or np.any(arr > tau_e + slack):
            raise DomainError(f"time outside [0, {tau_e}]: {tau!r}")
        arr = np.clip(arr, 0.0, tau_e)
        out = self._invert(np.atleast_1d(arr))
        return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)

    def _invert(self, tau: np.ndarray) -> np.ndarray:
        rho_e = self.rho_e
        tau_e = self.tau_e
        ftol = 1e-14 * tau_e
        xtol = 4.0 * np.finfo(float).eps
        lo = np.zeros_like(tau)
        hi = np.full_like(tau, rho_e)
        x = rho_e * tau / tau_e
        done = (tau <= 0.0) | (tau >= tau_e)
        x[tau <= 0.0] = 0.0
        x[tau >= tau_e] = rho_e
        for _ in range(_MAX_ROOT_ITERS):
            if done.all():
                break
            act = ~done
            xa = x[act]
            f = np.asarray(self.tau_of_rho(xa), dtype=float) - tau[act]
            lo_a = np.where(f <= 0.0, xa, lo[act])
            hi_a = np.where(f > 0.0, xa, hi[act])
            slope = np.asarray(self.dtau_drho(xa), dtype=float)
            with np.errstate(divide="ignore", invalid="ignore"):
                x_new = xa - f / slope
            # fall back to bisection whenever Newton leaves the bracket
            bad = ~np.isfinite(x_new) | (x_new <= lo_a) | (x_new >= hi_a)
            x_new = np.where(bad, 0.5 * (lo_a + hi_a), x_new)
            step = np.abs(x_new - xa)
            lo[act], hi[act], x[act] = lo_a, hi_a, x_new
            scale = np.maximum(x_new, 1.0)
            finished = ((np.abs(f) <= ftol) & (step <= xtol * scale)) | (hi_a - lo_a <= xtol * scale)
            done[act] = finished
        return x

    def q_of_rho(self, rho_f):
        """Imbibition rate ``(1 - rho_f)**2 / (d tau / d rho_f)``."""
        rho = self._check_rho(rho_f, lower_open=True)
        out = np.asarray((1.0 - rho) ** 2 / self.dtau_drho(rho))
        return float(out) if out.ndim == 0 else out

    def q_of_tau(self, tau):
        return self.q_of_rho(self.rho_of_tau(tau))


@dataclass(frozen=True)
class ConstantPcFront(FrontLaw):
    """Imbibition under constant capillary pressure, no air resistance.

    ``tau = (3 rho_f**2 - 2 rho_f**3) / (6 sigma)``; the liquid reaches the
    centre at ``tau_e = 1 / (6 sigma)``.
    """

    sigma: float = 5.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError(f"sigma must be positive and finite, got {self.sigma}")

    @property
    def rho_e(self) -> float:
        return 1.0

    @property
    def tau_e(self) -> float:
        return 1.0 / (6.0 * self.sigma)

    def tau_of_rho(self, rho_f):
        rho = self._check_rho(rho_f)
        out = rho * rho * (3.0 - 2.0 * rho) / (6.0 * self.sigma)
        return float(out) if out.ndim == 0 else out

    def dtau_drho(self, rho_f):
        rho = np.asarray(rho_f, dtype=float)
        out = rho * (1.0 - rho) / self.sigma
        return float(out) if out.ndim == 0 else out

    def q_of_rho(self, rho_f):
        rho = self._check_rho(rho_f, lower_open=True)
        out = self.sigma * (1.0 - rho) / rho
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class LinearFront(FrontLaw):
    """Front moving at constant speed: ``tau = rho_f * tau_end / rho_end``.

    Mostly useful as a degenerate test case, since its path in the
    ``(tau, rho)`` plane is a straight segment.
    """

    tau_end: float = 1.0 / 30.0
    rho_end: float = 1.0

    def __post_init__(self):
        if not (self.tau_end > 0.0 and 0.0 < self.rho_end <= 1.0):
            raise DomainError("LinearFront needs tau_end > 0 and 0 < rho_end <= 1")

    @property
    def rho_e(self) -> float:
        return self.rho_end

    @property
    def tau_e(self) -> float:
        return self.tau_end

    def tau_of_rho(self, rho_f):
        rho = self._check_rho(rho_f)
        out = rho * (self.tau_end / self.rho_end)
        return float(out) if out.ndim == 0 else out

    def dtau_drho(self, rho_f):
        rho = np.asarray(rho_f, dtype=float)
        out = np.full_like(rho, self.tau_end / self.rho_end)
        return float(out) if out.ndim == 0 else out
