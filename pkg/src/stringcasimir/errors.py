"""Exception types shared across the package."""


class StringCasimirError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StringCasimirError, ValueError):
    """An input lies outside the mathematical domain of the operation."""


class QuadratureError(StringCasimirError):
    """Numerical integration failed its accuracy target.

    Carries the best available value and the estimated absolute error so
    callers can decide whether to proceed anyway.
    """

    def __init__(self, message, best_estimate=None, abs_error=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.abs_error = abs_error


class MultiplicityUndecidedError(StringCasimirError):
    """A winding number failed to stabilize under contour refinement."""

    def __init__(self, message, omega=None):
        super().__init__(message)
        self.omega = omega


class ExtrapolationUnstableError(StringCasimirError):
    """The cutoff extrapolation fit residual exceeded its tolerance."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SpectrumTruncationError(StringCasimirError):
    """A mode sum was requested beyond the available spectrum."""


class ModularLiftRequiredError(DomainError):
    """The q-series is unusable this close to the real axis; apply the
    modular transformation first (see log_abs_dedekind_eta)."""
