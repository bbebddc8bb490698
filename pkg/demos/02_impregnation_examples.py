"""
Slow and fast adsorption
========================

sigma = 5, eta = 6, d = 0.1, K- = 0.1, N = 1000, with K+ = 10 and K+ = 100.
Fast adsorption strips the solute near the surface and leaves an egg-shell
profile of adsorbed species.
"""
# %%
import time

import numpy as np

from impregnation import ConstantPcFront, ModelParams, SolverConfig, run, verify_balance

front = ConstantPcFront(sigma=5.0)
cfg = SolverConfig(tol=1e-6, max_iters=100)
results = {}
for kplus in (10.0, 100.0):
    params = ModelParams(eta=6.0, d=0.1, kplus=kplus, kminus=0.1)
    t0 = time.perf_counter()
    results[kplus] = (params, run(front, params, 1000, cfg))
    print(f"K+ = {kplus:5g}: {time.perf_counter() - t0:.2f}s, "
          f"{results[kplus][1].total_iterations} fixed-point iterations")

# %%
# Radial profiles at the end of imbibition (front at the centre).
radii = [0.05, 0.2, 0.4, 0.6, 0.8, 0.95]
print("rho    " + "  ".join(f"{r:7.2f}" for r in radii))
for kplus, (params, result) in results.items():
    mids = result.grid.midpoints
    u = np.interp(radii, mids, result.final.u)
    th = np.interp(radii, mids, result.final.theta)
    print(f"u  {kplus:4g}" + "  ".join(f"{v:7.4f}" for v in u))
    print(f"th {kplus:4g}" + "  ".join(f"{v:7.4f}" for v in th))

# %%
# Correctness test: solute that came in (M1) against solute held (M2).
for kplus, (params, result) in results.items():
    series = verify_balance(result.layers, result.grid, front, params)
    print(f"K+ = {kplus:g}: M1(tau_e) = {series.m1[-1]:.6f}, M2(tau_e) = {series.m2[-1]:.6f}, "
          f"max rel diff {series.max_rel_diff:.1e} -> {series.status}")
