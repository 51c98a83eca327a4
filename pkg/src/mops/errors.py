"""Exception types shared across the package."""

from __future__ import annotations


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


class ParseError(ValueError):
    """Raised on malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeLimitError(ValueError):
    """Raised when an instance exceeds a brute-force enumeration bound."""


class BudgetExceededError(RuntimeError):
    """Raised when an exact search runs out of its node budget.

    ``best`` is the best lower bound proved before the budget ran out and
    ``nodes`` the number of candidates explored.
    """

    def __init__(self, message: str, best: int, nodes: int):
        super().__init__(message)
        self.best = best
        self.nodes = nodes


class RandomizationError(RuntimeError):
    """Raised when the randomized parity solver fails verification repeatedly.

    ``seeds`` lists the derived seeds that were tried.
    """

    def __init__(self, message: str, seeds: list[int]):
        super().__init__(message)
        self.seeds = list(seeds)
