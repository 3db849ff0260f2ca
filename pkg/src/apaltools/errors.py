"""Exceptions raised by apaltools."""
from typing import Optional


class ApalError(Exception):
    """Base class for every error raised on invalid input."""


class FormulaSyntaxError(ApalError, ValueError):
    """Raised when a formula text does not conform to the grammar.

    Args:
        message (str): Human readable description.
        text (str): The text that was parsed.
        position (int): 0-based offset of the offending character.
        line (int): 1-based line of the offending character.
        column (int): 1-based column of the offending character.
        expected (frozenset[str]): Token names acceptable at that position.
    """

    def __init__(
        self,
        message: str,
        text: str,
        position: int,
        line: int = 1,
        column: int = 1,
        expected: Optional[frozenset] = None,
    ):
        self.text = text
        self.position = position
        self.line = line
        self.column = column
        self.expected = frozenset(expected or ())
        super().__init__(message)

    def __str__(self) -> str:
        location = f"line {self.line}, column {self.column}"
        if self.expected:
            return f"{self.args[0]} at {location}; expected one of: {', '.join(sorted(self.expected))}"
        return f"{self.args[0]} at {location}"


class ModelValidationError(ApalError, ValueError):
    """Raised when a model document violates the S5 model invariants."""


class UnknownWorldError(ApalError, KeyError):
    """Raised when a world identifier is not part of the model."""

    def __str__(self) -> str:
        return f"unknown world: {self.args[0]!r}"


class EmptyRestrictionError(ApalError, ValueError):
    """Raised when a model would be restricted to an empty set of worlds."""


class NotBoxFreeError(ApalError, ValueError):
    """Raised when a rewrite is requested on a formula containing box."""


class NonEpistemicError(ApalError, ValueError):
    """Raised when an epistemic formula is required but not supplied."""


class TooManyLettersError(ApalError, ValueError):
    """Raised when a truth table would exceed the letter cap."""


class DerivationFormatError(ApalError, ValueError):
    """Raised when a derivation file line cannot be read.

    Args:
        message (str): Human readable description.
        line_number (int): 1-based line number in the derivation text.
    """

    def __init__(self, message: str, line_number: int):
        self.line_number = line_number
        super().__init__(message)

    def __str__(self) -> str:
        return f"line {self.line_number}: {self.args[0]}"
