"""Exception hierarchy shared by every module."""


class RSMError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RSMError, ValueError):
    """An input object violates one of its structural invariants."""


class InfiniteCutError(RSMError):
    """Every (s,t)-cut has infinite cost."""


class CapExceeded(RSMError):
    """A configured size cap refused the computation.

    ``caps`` maps each failed cap name to a ``(limit, observed)`` pair so that
    callers can report exactly what was too large.
    """

    def __init__(self, message, caps=None):
        super().__init__(message)
        self.caps = dict(caps or {})


class LatticeOverflow(CapExceeded):
    """A minimizer lattice has more members than the enumeration cap."""
