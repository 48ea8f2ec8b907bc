"""Exception types shared across the package."""


class CircxiError(ValueError):
    """Base class for all circxi errors."""


class InvalidAngle(CircxiError):
    """Raised when an input angle is NaN or infinite."""


class SampleTooSmall(CircxiError):
    """Raised when a sample has fewer observations than an operation needs."""


class TiesPresent(CircxiError):
    """Raised when tied coordinates are found under the reject policy.

    Attributes
    ----------
    axis : str
        'x' or 'y', whichever axis carries the first detected ties.
    indices : tuple of int
        Indices of the offending (tied) observations.
    """

    def __init__(self, axis, indices):
        self.axis = axis
        self.indices = tuple(int(i) for i in indices)
        super().__init__(f"tied values on axis {axis} at indices {self.indices}")


class DomainError(CircxiError):
    """Raised when a scalar argument falls outside its documented domain."""


class CutOnDatum(CircxiError):
    """Raised when an angle-grid cut point coincides with a data point."""


class EnumerationTooLarge(CircxiError):
    """Raised when exact null enumeration is requested beyond n = 10."""


class DegenerateSample(CircxiError):
    """Raised by the classical circular correlations on degenerate input."""
