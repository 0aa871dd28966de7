"""Diagnostics for `.hopf` sources and their elaboration."""
from typing import Optional


class PresentationError(ValueError):
    """A presentation could not be parsed or elaborated."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f'line {self.line}, column {self.column}: {self.message}'


class PresentationSyntaxError(PresentationError):
    """Lexical or grammatical error."""


class WellFoundednessError(PresentationError):
    """Commutation relations that normal ordering cannot resolve consistently."""
