"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when a graph or threshold document violates the file format."""


class BudgetExceededError(RuntimeError):
    """Raised when an exact search runs out of its caller-supplied work budget.

    The search never returns a possibly-wrong answer: it either finishes or
    raises this.
    """


class ConstructionError(RuntimeError):
    """Raised when a dynamo construction cannot certify its own output."""
