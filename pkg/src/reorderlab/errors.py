"""Exceptions shared across the package."""

from __future__ import annotations


class ReorderError(Exception):
    """Base class for all reorderlab errors."""


class InvalidSequenceError(ReorderError, ValueError):
    """An input sequence violates a structural requirement.

    ``position`` is the 1-based index of the offending entry when known.
    """

    def __init__(self, message: str, position: int | None = None) -> None:
        super().__init__(message)
        self.position = position


class InvalidParameterError(ReorderError, ValueError):
    """A scalar parameter is outside its allowed range."""


class CapacityExceededError(ReorderError):
    """A receiver buffer is too small for the observed trace."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(message)
        self.position = position
