"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Operand shapes or lengths do not match."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateCodeError(ValueError):
    """A generator matrix does not have full row rank."""


class InvalidTransformError(ValueError):
    """A row transform is singular or a permutation is malformed."""


class InfeasibleSizeError(RuntimeError):
    """The requested computation exceeds its enumeration guard."""


class MatrixParseError(ValueError):
    """Malformed matrix text. ``line`` is 1-based, or None for empty input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
