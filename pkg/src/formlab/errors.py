"""Exception types shared across the package."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A computation exceeded one of the configured budgets.

    Distinguishable from ordinary failures so callers (and the CLI) can
    report budget exhaustion separately from wrong answers.
    """

    def __init__(self, budget: str, limit: int, needed: int | None = None):
        self.budget = budget
        self.limit = limit
        self.needed = needed
        detail = f"{budget} budget exceeded (limit {limit}"
        if needed is not None:
            detail += f", needed >= {needed}"
        detail += ")"
        super().__init__(detail)


class CatalogError(ValueError):
    """A catalog file failed validation; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
