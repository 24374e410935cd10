"""Exception hierarchy shared by all diagwalk modules."""


class DiagwalkError(Exception):
    """Base class for all library errors."""


class PreconditionError(DiagwalkError):
    """An operation was called on input violating its contract.

    Each violation carries a short machine-readable ``code`` so callers
    (and the CLI) can distinguish error classes without string matching.
    """

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class ParseError(DiagwalkError):
    """Syntax error in an input expression, annotated with a position."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class TelescoperNotFoundError(DiagwalkError):
    """No telescoper exists up to the requested order."""
