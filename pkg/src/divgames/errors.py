"""Exception types raised across the package."""


class DiversityGameError(Exception):
    """Base class for all package errors."""


class InvalidGameError(DiversityGameError, ValueError):
    """A game could not be constructed from the given counts or orders."""


class DomainError(DiversityGameError, ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(DiversityGameError, ValueError):
    """Malformed input: a non-permutation order, a bad partition, a bad document."""


class PreconditionError(DiversityGameError, ValueError):
    """A constructive solver was called on a game outside its hypothesis."""


class ResourceLimitError(DiversityGameError, RuntimeError):
    """An enumeration would exceed the configured size cap."""
