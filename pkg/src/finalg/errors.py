"""Exception types shared across the package."""


class FinalgError(Exception):
    """Base class for errors raised by this package."""


class ParseError(FinalgError):
    """Malformed presentation or series text.

    Carries the 1-based line number when the failure is tied to a line.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MismatchError(FinalgError):
    """Two operands with incompatible characteristic or mode."""


class BoundExceededError(FinalgError):
    """A degree outside the truncation bound was requested."""


class ResourceLimitError(FinalgError):
    """A configured resource ceiling (monomials, pairs, degree) was hit."""
