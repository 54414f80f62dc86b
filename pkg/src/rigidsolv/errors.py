"""Exception types shared across the package."""


class AmbientMismatchError(ValueError):
    """Raised when operands live over different ambient groups or rings."""


class WordSyntaxError(ValueError):
    """Raised on malformed word input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured resource cap."""
