"""Shared exception types.

DomainError covers violated mathematical preconditions, PrecisionError covers
requests beyond the provable precision of a truncated object.  The CLI maps
them to exit codes 2 and 3.
"""


class DomainError(ValueError):
    """A mathematical precondition is violated."""


class PrecisionError(RuntimeError):
    """A truncated object cannot answer at the requested precision."""


class CheckFailure(RuntimeError):
    """A verification run produced a failing check (CLI exit code 1)."""
