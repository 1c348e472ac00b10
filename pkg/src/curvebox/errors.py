"""Exception types shared across the package."""


class CurveboxError(Exception):
    """Base class for all errors raised by curvebox."""


class UsageError(CurveboxError, ValueError):
    """Bad arguments: wrong modulus, out-of-range parameters, malformed input."""


class DomainError(CurveboxError, ArithmeticError):
    """A mathematical hypothesis required by an operation does not hold."""


class ParseError(UsageError):
    """Polynomial or interval text could not be parsed.

    ``column`` is 1-based and points at the offending character.
    """

    def __init__(self, message, text="", column=None):
        self.text = text
        self.column = column
        if column is not None:
            message = f"{message} (line 1, column {column})"
        super().__init__(message)
