"""Exception types shared across the package."""


class FtpropError(Exception):
    """Base class for all package errors."""


class DomainError(FtpropError):
    """An argument lies outside the mathematical domain of the operation."""


class SingularityError(FtpropError):
    """The inversion formula is singular at this point (sin(2*theta) = 0)."""


class UndefinedInverseError(FtpropError):
    """The inversion formula leaves the reals (negative radicand)."""


class ParseError(FtpropError):
    """Malformed input data; carries the offending row number."""

    def __init__(self, message, row=None):
        super().__init__(message if row is None else f"row {row}: {message}")
        self.row = row


class ValidationError(FtpropError):
    """Structurally valid input that violates a study-set invariant."""
