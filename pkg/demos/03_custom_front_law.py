"""
Plugging in another front law
=============================

Any strictly increasing tau(rho_f) with tau(0) = 0 works. Only tau_of_rho and
the terminal position are required; the inverse and Q are derived
numerically. This law stops short of the centre (rho_e = 0.8).
"""
# %%
import numpy as np

from impregnation import FrontLaw, ModelParams, run, verify_balance


class SlowingFront(FrontLaw):
    """tau = rho**2 (1 + rho) / 10, front halted at rho = 0.8."""

    @property
    def rho_e(self):
        return 0.8

    def tau_of_rho(self, rho_f):
        rho = self._check_rho(rho_f)
        out = rho**2 * (1.0 + rho) / 10.0
        return float(out) if out.ndim == 0 else out


front = SlowingFront()
print("tau_e =", front.tau_e, " Q(0.4) =", front.q_of_rho(0.4))

# %%
params = ModelParams(eta=6.0, d=0.1, kplus=50.0, kminus=0.1)
result = run(front, params, 400)
series = verify_balance(result.layers, result.grid, front, params)
print("wetted volume:", result.grid.volumes.sum(), " expected:", (1 - 0.2**3) / 3)
print("balance:", series.status, f"(max rel diff {series.max_rel_diff:.1e})")
print("theta at surface / front:", result.final.theta[0], result.final.theta[-1])
