"""Exception hierarchy shared by the solver modules."""


class ImpregnationError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ImpregnationError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularityError(DomainError):
    """The requested quantity diverges at the given point."""


class InvalidFrontError(ImpregnationError, ValueError):
    """A front law violates the monotonicity contract."""


class ConvergenceError(ImpregnationError, RuntimeError):
    """The fixed-point iteration failed to reach tolerance at a time level."""

    def __init__(self, level: int, residual: float, iterations: int):
        self.level = level
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"fixed-point iteration did not converge at level {level} "
            f"after {iterations} iterations (residual {residual:.3e})"
        )


class ConfigError(ImpregnationError, ValueError):
    """Malformed, unknown or out-of-range configuration entry."""
