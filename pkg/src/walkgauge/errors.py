"""Shared exception types."""

__all__ = ["TheoremViolationError"]


class TheoremViolationError(RuntimeError):
    """A proved invariant failed numerically; indicates a bug or a
    pathological precision case, never ignored silently."""
