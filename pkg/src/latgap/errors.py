"""Shared exception types."""


class LatgapError(Exception):
    """Base class for all workbench errors."""


class ConfigError(LatgapError):
    """Invalid or unparseable experiment configuration."""


class BudgetError(LatgapError):
    """A loop or factorization budget would be exceeded; nothing was truncated."""


class NonMonogenicError(LatgapError):
    """A rational prime divides the index of the power-basis order; refusing to factor."""


class FactorizationError(LatgapError):
    """Ideal factorization failed or did not reproduce the input."""


class ToleranceError(LatgapError):
    """A quadrature did not reach the requested tolerance within budget."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class GridError(LatgapError):
    """A sampled grid is too coarse or has not decayed at its end."""


class ReductionError(LatgapError):
    """No matrix model of the quaternion algebra exists over this residue ring."""


class EigenSeparationError(LatgapError):
    """Class-algebra eigenvectors could not be separated after reseeding."""
