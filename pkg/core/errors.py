from __future__ import annotations

from typing import Optional


class BudgetExceeded(RuntimeError):
    """A request needs more than the configured resources allow."""

    def __init__(self, message: str, *, required: Optional[int] = None, limit: Optional[int] = None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class CensusUnavailable(BudgetExceeded):
    """No census can be produced for the requested rank."""
