"""Moving-front solver for the impregnation of a porous spherical pellet."""

from .balance import BalanceSeries, conservation_defects, m1_inflow, m1_trapezoid, m2_content, verify_balance
from .exceptions import (
    ConfigError,
    ConvergenceError,
    DomainError,
    ImpregnationError,
    InvalidFrontError,
    SingularityError,
)
from .front import ConstantPcFront, FrontLaw, LinearFront
from .grid import SpaceTimeGrid, build_grid, cell_volumes, path_arc_length
from .solver import (
    Layer,
    ModelParams,
    RunResult,
    SolverConfig,
    assemble_u_system,
    run,
    step,
    theta_implicit_update,
)

__all__ = [
    "BalanceSeries", "ConfigError", "ConstantPcFront", "ConvergenceError", "DomainError",
    "FrontLaw", "ImpregnationError", "InvalidFrontError", "Layer", "LinearFront", "ModelParams",
    "RunResult", "SingularityError", "SolverConfig", "SpaceTimeGrid", "assemble_u_system",
    "build_grid", "cell_volumes", "conservation_defects", "m1_inflow", "m1_trapezoid",
    "m2_content", "path_arc_length", "run", "step", "theta_implicit_update", "verify_balance",
]

__version__ = "0.1.0"
