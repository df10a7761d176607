"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed instance file; message names the offending line."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ContractError(ValueError):
    """A documented precondition of an operation was violated by the caller."""


class GuardError(RuntimeError):
    """A brute-force oracle refused an input too large for exhaustive search."""
