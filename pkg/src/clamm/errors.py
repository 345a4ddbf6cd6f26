"""Error types shared across the package."""


class CurveError(Exception):
    """Base class for all curve math errors."""


class DomainError(CurveError):
    """An input value is outside the domain of the operation."""

    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"{field}: {reason}")


class BoundsExceeded(CurveError):
    """A trade would push the pool past an intercept of the real curve."""


class InsufficientLiquidity(CurveError):
    """A trade would fully deplete a reserve that can only be drained asymptotically."""


class ConvergenceFailure(CurveError):
    """Adaptive quadrature hit its depth limit before reaching the requested tolerance."""


class Indeterminate(CurveError):
    """The requested invariant form is 0/0 at this state; use another anchor."""
