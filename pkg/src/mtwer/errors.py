"""Exception hierarchy.

``MtwerError`` is the base for everything raised on bad input data or
infeasible requests; callers that want a single catch-all (e.g. the CLI)
catch that. Programming errors keep raising the usual builtins.
"""


class MtwerError(Exception):
    """Base class for all data and feasibility errors."""


class MixedSessionIds(MtwerError):
    """A segment list contains segments from more than one session."""


class NegativeDuration(MtwerError):
    """A segment ends before it begins."""


class MissingTimes(MtwerError):
    """An operation needs begin/end times that the input does not carry."""


class UnsortedTokens(MtwerError):
    """Word tokens passed to the time-constrained distance are not sorted
    by begin time."""


class ComplexityGuardExceeded(MtwerError):
    """The estimated dynamic-programming cell count exceeds the budget.

    Raised instead of silently approximating; use a time-constrained
    variant or the greedy approximation for such inputs.
    """


class TooLarge(MtwerError):
    """The brute-force oracle was asked to enumerate too large an instance."""


class SweepLimitExceeded(MtwerError):
    """The greedy search did not converge within the sweep limit.

    The search strictly improves on every accepted move, so hitting this
    indicates a bug rather than an expected outcome.
    """


class InconsistentState(MtwerError):
    """Incremental greedy bookkeeping does not match the assignment."""


class MalformedDocument(MtwerError):
    """A transcript file could not be parsed; the message carries the
    position (record index or line number)."""


class MissingRequiredKey(MalformedDocument):
    """A transcript record lacks a required key."""


class NonNumericTime(MalformedDocument):
    """A transcript record carries a non-numeric time value."""


class BadFieldCount(MalformedDocument):
    """A line-oriented transcript record has too few fields."""
