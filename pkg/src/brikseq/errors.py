"""Shared exception types for resource and representation limits."""

from __future__ import annotations


class BrikseqError(Exception):
    """Base class for all library-specific errors."""


class CapExceededError(BrikseqError):
    """A request went past a configured resource cap.

    Carries the cap name, its value, and the offending request so callers
    can report or re-run with a raised limit.
    """

    def __init__(self, cap_name: str, cap_value: int, requested: int) -> None:
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.requested = requested
        super().__init__(
            f"{cap_name} cap is {cap_value}, requested {requested}"
        )


class RepresentationLimitError(BrikseqError):
    """The exact value cannot be held in memory as an integer."""


class InsufficientPrecisionError(BrikseqError):
    """The requested enclosure is too wide for the computation asked of it."""
