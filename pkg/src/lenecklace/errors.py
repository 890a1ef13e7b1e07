"""Exception hierarchy shared by every module in the package."""


class LeNecklaceError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(LeNecklaceError, ValueError):
    """A label, size or subset lies outside the ranges allowed by the type."""


class OutOfShapeError(LeNecklaceError, ValueError):
    """A square does not belong to the shape it was placed in."""

    def __init__(self, square, message=None):
        self.square = square
        super().__init__(message or f"square {tuple(square)} is not in the shape")


class DominanceError(LeNecklaceError, RuntimeError):
    """The nearest northwest + square failed to dominate the other candidates.

    Raised only for fillings that break the Le condition; on a validated
    diagram it signals an internal invariant breach.
    """


class InconsistentNecklaceError(LeNecklaceError, ValueError):
    """The reverse construction met data no valid necklace can produce."""

    def __init__(self, message, index=None, square=None):
        self.index = index
        self.square = square
        super().__init__(message)


class ScaleGuardError(LeNecklaceError, RuntimeError):
    """An exhaustive enumeration was requested beyond the configured size."""


class ParseError(LeNecklaceError, ValueError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
