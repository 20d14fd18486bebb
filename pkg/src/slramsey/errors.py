"""Shared exception types."""

from __future__ import annotations


class OracleBudgetError(RuntimeError):
    """An exhaustive search would exceed its work budget.

    Raised instead of returning a partial or heuristic answer: callers either
    get an exact result or this error, never a wrong value.
    """


class InsufficientInputError(ValueError):
    """The input is too small or too degenerate for a guaranteed extraction.

    ``stage`` names the extraction stage whose size precondition failed.
    """

    def __init__(self, message: str, *, stage: str | None = None):
        super().__init__(message)
        self.stage = stage


class InternalVerificationError(RuntimeError):
    """A constructed object failed its own re-verification.

    Every extraction in this package re-checks its output against the
    defining inequalities before returning.  This error firing means a bug,
    not a property of the input; it must never occur in normal operation.
    """
