"""Exception hierarchy for skolemcircles."""


class SkolemError(ValueError):
    """Base class for all errors raised by this package."""


class SymbolCountError(SkolemError):
    """A symbol does not occur exactly twice."""


class DistanceError(SkolemError):
    """The two copies of a symbol are not at the required cyclic distance."""


class OverlapError(SkolemError):
    """Two pairs claim the same position."""


class InvalidInput(SkolemError):
    pass


class DegenerateOrder(SkolemError):
    """Operation is undefined for the given (too small) order."""


class OrderMismatch(SkolemError):
    pass


class CoverageError(SkolemError):
    """Glued parts do not cover the symbols 1..m."""


class DisjointnessError(SkolemError):
    """Glued parts share a symbol."""


class InvalidPartError(SkolemError):
    """A glued part is not a valid Skolem-type sequence."""


class ShardOverlapError(SkolemError):
    """Shard prefixes do not partition the search space."""


class FormatError(SkolemError):
    """Malformed catalog, counts or checkpoint file."""


class ValidationError(SkolemError):
    """A record read from a file is not a valid circle."""
