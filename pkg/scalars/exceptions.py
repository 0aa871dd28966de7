"""Errors raised by scalar arithmetic."""


class ScalarError(ValueError):
    """Base class for invalid scalar construction or arithmetic."""


class TruncationMismatchError(ScalarError):
    """Two scalars with different truncation orders were combined."""


class PoleError(ScalarError):
    """An exponent fell below the Laurent window, or a pole was evaluated at zero."""


class ZeroDivisionScalarError(ScalarError, ZeroDivisionError):
    """Inversion of the zero scalar."""
