"""Exception hierarchy shared across the library, service, and CLI."""


class TransversalError(Exception):
    """Base class for all library errors."""


class ContextMismatchError(TransversalError):
    """Operands live in different variable contexts (or coefficient fields)."""


class ParseError(TransversalError):
    """Syntax or semantic error in session / polynomial text, with location."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{message} (line {line}, column {col})" if line else message)
        self.message = message
        self.line = line
        self.col = col


class PreconditionError(TransversalError):
    """An operation's mathematical precondition does not hold (improper ideal,
    failed regular-sequence hypothesis, invalid family parameters, ...)."""


class CapExceededError(TransversalError):
    """A desk-scale safety cap was exceeded (variable count, rank 2^p, ...)."""


class ExactDivisionError(TransversalError):
    """An exact polynomial division left a remainder.  For ideal-quotient
    generators this indicates an implementation bug, never bad input."""


class InternalConsistencyError(TransversalError):
    """Two routes that a theorem forces to agree disagreed.  Always a bug."""
