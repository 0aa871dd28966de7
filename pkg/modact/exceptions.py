"""Errors raised by module actions and operator matrices."""


class ActionError(ValueError):
    """The acting element and the target do not fit the requested action kind."""


class MatrixError(ValueError):
    """Operator matrices with incompatible bases, or a series that does not terminate."""
