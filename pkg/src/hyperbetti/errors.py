"""Exception types shared across the package.

The CLI maps these onto exit codes: bad parameters and violated call
preconditions are usage errors, exceeded size budgets are reported
separately so callers can retry with larger explicit bounds.
"""

from __future__ import annotations


class ParameterError(ValueError):
    """A constructor or operation received out-of-range parameters."""


class PreconditionError(ValueError):
    """An operation was called on an object outside its contract."""


class SizeBudgetError(RuntimeError):
    """A computation would exceed its configured size budget.

    Raised before any partial result is produced; nothing is truncated
    silently.  The message names the budget that would be exceeded.
    """
