"""Errors raised by noncommutative algebra arithmetic."""


class AlgebraError(ValueError):
    """Base class for invalid algebra operations."""


class UnknownGeneratorError(AlgebraError):
    """A generator name or index is not part of the algebra."""


class MixedAlgebraError(AlgebraError):
    """Elements from different algebras were combined."""


class RewriteBudgetExceeded(AlgebraError):
    """Normal ordering did not terminate within the configured step budget."""


class NonNilpotentError(AlgebraError):
    """An analytic series was requested for an element whose powers do not vanish."""


class PendingCommutatorError(AlgebraError):
    """A product needed a commutator that has not been elaborated yet."""
