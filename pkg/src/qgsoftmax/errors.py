"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible shapes for the requested operation."""


class ParseError(ValueError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SingularMatrixError(ValueError):
    """Matrix is singular (or numerically too close to singular) to invert."""
