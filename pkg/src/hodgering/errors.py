"""Exception hierarchy shared by every module."""


class HodgeRingError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HodgeRingError, ValueError):
    """Malformed or inconsistent user input."""


class ValidationError(InputError):
    """A coefficient table violates a symmetry or parity constraint."""


class UnsupportedModeError(InputError):
    """The requested coefficient domain is not supported for this question."""


class InternalInvariantError(HodgeRingError, RuntimeError):
    """A structural identity that must always hold has failed.

    Seeing one of these means a bug in the library, not bad input.
    """
