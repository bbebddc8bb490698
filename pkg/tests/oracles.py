"""
Independent reference computations used to freeze expected values.

Nothing here imports the solver internals; each oracle recomputes its quantity
by a different route (bisection, trapezoid quadrature, symbolic algebra).
"""

import numpy as np
import sympy as sp


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def constant_pc_tau(rho, sigma):
    return (3 * rho**2 - 2 * rho**3) / (6 * sigma)


def rho_by_bisection(tau, sigma):
    return bisect(lambda r: constant_pc_tau(r, sigma) - tau, 0.0, 1.0)


def arc_length_trapezoid(dtau_drho, rho_e=1.0, samples=10**6):
    r = np.linspace(0.0, rho_e, samples + 1)
    return float(np.trapezoid(np.sqrt(1.0 + dtau_drho(r) ** 2), r))


def theta_by_bisection(theta_prev, u, dtau, kplus, kminus):
    g = lambda th: th - theta_prev - dtau * (kplus * u * (1 - th) - kminus * th)
    return bisect(g, 0.0, 1.0)


def symbolic_fv_system(faces, sigma, d, eta, u0, u_prev, theta_prev, theta_iter):
    """Tridiagonal coefficients of the finite-volume balance, built symbolically.

    ``faces`` are the faces up to the current front; the last cell is the one
    wetted during this step. The step-averaged rate is obtained by integrating
    the constant-capillary-pressure Q over the step.
    """
    faces = [sp.Rational(str(f)) for f in faces]
    n = len(faces) - 1
    sig = sp.Rational(str(sigma))
    rho, tau = sp.symbols("rho tau", positive=True)
    tau_of = lambda r: (3 * r**2 - 2 * r**3) / (6 * sig)
    dtau = tau_of(faces[-1]) - tau_of(faces[-2])
    # int Q dtau over the step, with Q = sigma (1 - rho) / rho and dtau = rho (1 - rho) / sigma drho
    q_int = sp.integrate(sig * (1 - rho) / rho * rho * (1 - rho) / sig, (rho, faces[-2], faces[-1]))
    qbar = q_int / dtau
    u = sp.symbols(f"u1:{n + 1}")
    mids = [(faces[j] + faces[j + 1]) / 2 for j in range(n)]
    vols = [sp.integrate((1 - rho) ** 2, (rho, faces[j], faces[j + 1])) for j in range(n)]

    def flux(k):
        # flux through face k (0 = surface, n = front)
        if k == 0:
            return qbar * u0
        if k == n:
            return 0
        grad = (u[k] - u[k - 1]) / (mids[k] - mids[k - 1])
        return qbar * u[k - 1] - d * (1 - faces[k]) ** 2 * grad

    prev = [u_prev[j] + eta * theta_prev[j] for j in range(n - 1)] + [0]
    eqs = [vols[j] / dtau * (u[j] + eta * theta_iter[j] - prev[j]) + flux(j + 1) - flux(j)
           for j in range(n)]
    lower = np.zeros(n)
    diag = np.zeros(n)
    upper = np.zeros(n)
    rhs = np.zeros(n)
    for j, eq in enumerate(eqs):
        eq = sp.expand(eq)
        diag[j] = float(eq.coeff(u[j]))
        if j > 0:
            lower[j] = float(eq.coeff(u[j - 1]))
        if j < n - 1:
            upper[j] = float(eq.coeff(u[j + 1]))
        rhs[j] = -float(eq.subs({s: 0 for s in u}))
    return lower, diag, upper, rhs
