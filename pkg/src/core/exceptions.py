"""
Error hierarchy for the k-Dyck toolkit.

Precondition failures also derive from ValueError so callers that only know
the standard library can still catch them.
"""


class KDyckError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(KDyckError, ValueError):
    pass


class PathParseError(KDyckError, ValueError):
    pass


class InvalidPathError(KDyckError, ValueError):
    pass


class ResourceLimitError(KDyckError):
    """Raised when an exhaustive enumeration would exceed the step guard."""

    def __init__(self, length: int, limit: int):
        super().__init__(
            f"enumeration of {length}-step paths exceeds the limit of {limit} steps "
            f"(set KDYCK_BRUTE_LIMIT to raise it)"
        )
        self.length = length
        self.limit = limit


class BijectionError(KDyckError):
    pass


class InconsistencyError(KDyckError, ArithmeticError):
    """An internal cross-check between two exact computations failed."""
