"""Exceptions raised by fundtrig.

All of them derive from ``ValueError`` so callers that only care about
"bad parameters" can catch a single type.
"""


class FundTrigError(ValueError):
    """Base class for all fundtrig errors."""


class EvenOrTooSmallN(FundTrigError):
    pass


class NonFiniteInput(FundTrigError):
    pass


class IndexOutOfRange(FundTrigError):
    pass


class BudgetTooLarge(FundTrigError):
    pass


class DegenerateDenominator(FundTrigError):
    pass


class GridMismatch(FundTrigError):
    pass


class SingularSystem(FundTrigError):
    pass
