"""Exception types shared across the package."""


class EntropyError(Exception):
    """Base class for all errors raised by genentropy."""


class DomainError(EntropyError, ValueError):
    """An argument lies outside the domain of the operation."""


class RangeError(EntropyError, OverflowError):
    """A result cannot be represented in double precision."""
