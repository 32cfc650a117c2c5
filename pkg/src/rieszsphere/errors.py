"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class WindowError(ValueError):
    """(N, s) outside every closed-form validity window."""


class UnsupportedRangeError(ValueError):
    """Parameter range deliberately not implemented."""


class BracketError(ValueError):
    """Root bracket without a sign change."""


class NumericError(ArithmeticError):
    """An iterative scheme failed to converge."""


class FormatError(ValueError):
    """Malformed input file."""
