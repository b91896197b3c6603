"""Shared exception types."""

__all__ = ["GuardError"]


class GuardError(RuntimeError):
    """An operation would enumerate more states than its size guard allows.

    Raised instead of silently grinding through huge groups; callers that
    really want the big computation pass ``allow_large=True``.
    """
