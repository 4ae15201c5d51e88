"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a documented invariant (malformed curve, bad labels, ...)."""


class ContractViolation(ValidationError):
    """A caller broke an operation precondition (open curve, mismatched inputs, ...)."""


class OnBoundaryError(ValidationError):
    """Query point lies on the curve, so the winding number is undefined."""


class DegenerateOffsetError(ValidationError):
    """Inner offset would invert a positively curved arc (radius <= offset distance)."""


class SolverError(RuntimeError):
    """Root finder failed to converge; carries the final bracket state."""

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class DegenerateConfigurationError(RuntimeError):
    """A power-diagram cell came out empty for the given seeds/weights."""


class GenerationError(RuntimeError):
    """Rejection sampling exhausted its retry budget."""


class OptimizationError(RuntimeError):
    """The derivative-free search could not leave degenerate configurations."""
