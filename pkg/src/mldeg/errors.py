"""Exception types shared across the package."""

from __future__ import annotations


class MldegError(Exception):
    """Base class for every error raised by this package."""


class PolyParseError(MldegError):
    """Raised on malformed polynomial text; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingMismatchError(MldegError):
    """Raised when operands belong to different polynomial rings."""


class NotZeroDimensionalError(MldegError):
    """Raised when a zero-dimensional ideal was required but not supplied.

    ``variable`` names a ring variable with no pure power among the
    leading monomials of the Groebner basis.
    """

    def __init__(self, variable: str):
        super().__init__(
            f"ideal is not zero-dimensional: no pure power of '{variable}' "
            "among the leading monomials"
        )
        self.variable = variable


class GenericityError(MldegError):
    """Raised when repeated random draws never produced an agreeing answer."""


class UnsupportedInputError(MldegError):
    """Raised for inputs outside the supported geometry (e.g. non-isolated
    curve singularities, identically vanishing determinants)."""


class InconsistencyError(MldegError):
    """Raised when a theorem-level consistency check fails, which signals a
    violated hypothesis or an internal bug rather than bad user input."""


class SchemaError(MldegError):
    """Raised when a problem or table file does not match its schema."""
