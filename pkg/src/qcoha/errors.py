"""Exceptions shared across the engine."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed its configured size budget."""


class NotSymmetricError(ValueError):
    """Raised when a polynomial expected to be symmetric is not."""
