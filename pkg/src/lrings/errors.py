"""Exceptions shared across modules."""


class CapExceeded(RuntimeError):
    """An enumeration would sweep more candidates than the configured cap."""

    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size


class ConsistencyError(RuntimeError):
    """Two characterizations that must agree disagreed, or a guaranteed
    invariant failed. Either the implementation is broken or a theorem is
    false; both are fatal."""
