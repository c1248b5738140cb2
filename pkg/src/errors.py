"""Exception hierarchy.

Usage faults map to CLI exit code 3, search faults to exit code 2.
Verification failures are never raised; they are report content.
"""

from __future__ import annotations


class ColoringError(Exception):
    """Base class for every error raised by this package."""


# ── Usage faults (bad arguments, bad files) ──

class UsageFault(ColoringError):
    """The caller asked for something the operation does not accept."""


class InvalidSpec(UsageFault):
    pass


class OddK(UsageFault):
    pass


class OddM(UsageFault):
    pass


class BadT(UsageFault):
    pass


class EmptySet(UsageFault):
    pass


class LengthMismatch(UsageFault):
    pass


class MalformedDocument(UsageFault):
    pass


# ── Search faults (no coloring exists, or none found in budget) ──

class SearchFault(ColoringError):
    """No coloring exists, or none was found within the budget."""


class NotIntervalColorable(SearchFault):
    pass


class NotColorable(SearchFault):
    pass


class RangeUnavailable(SearchFault):
    pass


class TargetInfeasibleAtBudget(SearchFault):
    """The target color count was not reached.

    The verified baseline coloring is still available on ``baseline``.
    """

    def __init__(self, message: str, baseline=None, outcome=None):
        super().__init__(message)
        self.baseline = baseline
        self.outcome = outcome


# ── Structural faults (an input coloring does not have a required property) ──

class InvalidBase(ColoringError):
    pass


class NotRegular(ColoringError):
    pass


class NotVerified(ColoringError):
    pass


class AlreadyMinimal(ColoringError):
    pass


class CasePartitionError(ColoringError):
    pass


class ContiguityViolation(ColoringError):
    pass
