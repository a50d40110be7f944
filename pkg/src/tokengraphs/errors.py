"""Exception hierarchy shared by every module."""


class TokenGraphError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(TokenGraphError):
    """A request exceeds a hard size cap (derived vertices, isomorphism size, corpus size)."""


class BudgetExceeded(TokenGraphError):
    """A bounded search ran out of nodes before reaching a verdict.

    ``bounds`` carries whatever bracketing information the search had collected.
    """

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds


class InvariantError(TokenGraphError, AssertionError):
    """An internal cross-check failed; this always indicates a bug."""
