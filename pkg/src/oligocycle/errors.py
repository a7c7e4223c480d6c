"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the documented domain of an operation."""


class CorruptDataError(ValueError):
    """Serialized or received data failed validation during decoding."""
