"""Shared exception types."""

from __future__ import annotations


class BudgetExceededError(Exception):
    """A solve ran out of time; carries the proven [lower, upper] interval."""

    def __init__(self, lower: int, upper: int):
        super().__init__(f"budget exhausted; proven interval [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper


class CompositionError(Exception):
    """A pattern composition failed verification (defect signal, not a user error)."""
