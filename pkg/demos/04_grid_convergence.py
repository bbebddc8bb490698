"""
Grid refinement
===============

Final concentration profile for K+ = 100 on successively doubled grids. The
scheme is first order (upwind advection, backward Euler), so differences
should roughly halve.
"""
# %%
import numpy as np

from impregnation import ConstantPcFront, ModelParams, run

front = ConstantPcFront(5.0)
params = ModelParams(kplus=100.0)
radii = np.linspace(0.05, 0.95, 10)
profiles = {}
for n in (125, 250, 500, 1000, 2000):
    result = run(front, params, n)
    profiles[n] = np.interp(radii, result.grid.midpoints, result.final.u)

# %%
sizes = sorted(profiles)
diffs = [np.max(np.abs(profiles[a] - profiles[b])) for a, b in zip(sizes[:-1], sizes[1:])]
for (a, b), diff in zip(zip(sizes[:-1], sizes[1:]), diffs):
    print(f"N {a:5d} -> {b:5d}: max |du| = {diff:.3e}")
print("observed orders:", np.round(np.log2(np.array(diffs[:-1]) / np.array(diffs[1:])), 2))
