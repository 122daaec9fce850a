"""Exception types shared across the package."""

from __future__ import annotations


class GraphInputError(ValueError):
    """Malformed graph, vertex set or file contents."""


class SizeLimitError(GraphInputError):
    """A brute-force routine was asked to run beyond its size cap."""


class ClassViolation(Exception):
    """The input lies outside the graph class an operation requires.

    ``witness`` is the induced copy of a forbidden pattern that proves it,
    when one is available.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(RuntimeError):
    """An internal consistency check failed. Always a bug or an escalation."""


class GenerationError(RuntimeError):
    """A random instance could not be produced within its budget."""
