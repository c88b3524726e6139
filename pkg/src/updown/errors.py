"""Exception types shared across the package."""
from __future__ import annotations


class BudgetExceeded(ValueError):
    """A request falls outside the configured computational budget."""

    def __init__(self, what: str, value: int, limit: int) -> None:
        super().__init__(f"{what}={value} exceeds budget limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


def check_budget(what: str, value: int, limit: int) -> None:
    if value > limit:
        raise BudgetExceeded(what, value, limit)
