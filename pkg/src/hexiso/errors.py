"""Exception hierarchy for hexiso.

Argument and precondition problems are ``ValueError`` subclasses so callers
that already catch ``ValueError`` keep working.  Resource guards and the
normalization iteration cap are ``RuntimeError`` subclasses: they report on
the run, not on the input.
"""


class HexIsoError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentsError(HexIsoError, ValueError):
    """Arguments outside an operation's documented range."""


class InvalidEdgeError(InvalidArgumentsError):
    """A vertex pair that is not an edge of the hexagonal grid."""


class ContainmentError(HexIsoError, ValueError):
    """A vertex set that is not contained in the requested region."""


class EmptySetError(HexIsoError, ValueError):
    """An operation that needs at least one vertex received none."""


class PreconditionError(HexIsoError, ValueError):
    """A structural precondition (e.g. "no bad rows") does not hold."""


class DomainError(HexIsoError, ValueError):
    """A scalar argument outside a function's validity window."""


class ResourceGuardError(HexIsoError, RuntimeError):
    """A search request larger than the supported desk scale."""


class NonTerminationError(HexIsoError, RuntimeError):
    """Normalization exceeded its iteration cap."""


__all__ = [
    "HexIsoError",
    "InvalidArgumentsError",
    "InvalidEdgeError",
    "ContainmentError",
    "EmptySetError",
    "PreconditionError",
    "DomainError",
    "ResourceGuardError",
    "NonTerminationError",
]
