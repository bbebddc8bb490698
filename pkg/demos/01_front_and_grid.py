"""
Front law and the consistent space-time grid
============================================

The front position is prescribed. Here we use constant capillary pressure,
then cut its path in the (tau, rho) plane into equal-arc pieces. Each cut
gives one time level and one new radial cell.
"""
# %%
import numpy as np

from impregnation import ConstantPcFront, build_grid, path_arc_length

front = ConstantPcFront(sigma=5.0)
print("terminal time tau_e =", front.tau_e)          # 1/30
print("tau at rho_f = 0.5  =", front.tau_of_rho(0.5))  # 1/60
print("rho_f at tau = 1/60 =", front.rho_of_tau(1 / 60))
print("Q at rho_f = 0.5    =", front.q_of_rho(0.5))    # sigma (1 - rho) / rho = 5

# %%
# The path is almost a straight line along the rho axis because tau_e << 1,
# so its length is barely above 1.
print("path length L =", path_arc_length(front))

# %%
grid = build_grid(front, n=1000)
dtau = np.diff(grid.times)
print(f"first step: tau_1 = {grid.times[1]:.3e}, rho_1 = {grid.faces[1]:.6f}")
print(f"steps range from {dtau.min():.2e} to {dtau.max():.2e}")
print("sum of cell volumes =", grid.volumes.sum(), "(pellet volume 1/3)")

# %%
# The division depends on how the two axes are scaled relative to each other.
# Stretching time by 30 puts tau and rho on comparable footing and moves the
# cut points; the default leaves the plane unscaled.
stretched = build_grid(front, n=1000, axis_scale=30.0)
print(f"axis_scale=30: tau_1 = {stretched.times[1]:.3e}, rho_1 = {stretched.faces[1]:.6f}")
