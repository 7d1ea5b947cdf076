"""Exception types shared across the package."""


class ChevBassError(Exception):
    """Base class for all package errors."""


class InputError(ChevBassError, ValueError):
    """Malformed or out-of-contract input."""


class FactorizationBoundError(ChevBassError):
    """A cofactor could not be split below the trial-division bound."""


class OracleSizeError(ChevBassError):
    """The brute-force oracle refused an input above its element bound."""


class InternalError(ChevBassError, AssertionError):
    """A structural invariant failed; indicates a bug, not bad input."""
