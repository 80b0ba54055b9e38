"""Shared exception types."""


class LatthreshError(Exception):
    """Base class for all package errors."""


class ArityMismatchError(LatthreshError, ValueError):
    """Two values with different arities were combined."""


class DomainError(LatthreshError, ValueError):
    """Input violates a structural precondition (not an up-set, not a
    closure system, not a lattice, ...)."""


class CapacityError(LatthreshError, ValueError):
    """Requested size exceeds an enforced enumeration cap."""


class ParseError(LatthreshError, ValueError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
