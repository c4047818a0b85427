"""Exception types shared across the package.

The CLI maps these onto exit codes (see ``edgetrans.cli``).
"""

from __future__ import annotations


class EdgeTransError(Exception):
    """Base class for all package errors."""


class GraphFormatError(EdgeTransError, ValueError):
    """Malformed graph, coloring, trace or partition data."""


class UnknownIdError(EdgeTransError, KeyError):
    """A vertex or edge id that does not exist in the graph."""

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class BudgetExceeded(EdgeTransError):
    """A search ran out of its node or count budget before reaching a verdict."""


class HypothesisRefuted(EdgeTransError):
    """An input does not satisfy the hypotheses an algorithm needs.

    ``witness`` optionally carries an object (for example a subgraph with no
    proper q-coloring) that proves the refutation.
    """

    def __init__(self, message: str, witness: object | None = None) -> None:
        super().__init__(message)
        self.witness = witness


class PreconditionError(EdgeTransError, ValueError):
    """An operation was called with arguments outside its contract."""


class InvariantViolation(EdgeTransError):
    """A situation that the underlying theory says cannot happen did happen."""
