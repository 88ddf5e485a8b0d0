"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class RankMetricError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(RankMetricError, ValueError):
    pass


class ReducibleModulus(RankMetricError, ValueError):
    pass


class DegreeMismatch(RankMetricError, ValueError):
    pass


class NotABasis(RankMetricError, ValueError):
    pass


class AmbientMismatch(RankMetricError, ValueError):
    pass


class EnumerationTooLarge(RankMetricError):
    """A requested exhaustive enumeration exceeds the configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: {size} items exceeds cap {cap}")
        self.size = size
        self.cap = cap


class NonIntegralCount(RankMetricError, ArithmeticError):
    """An exact quotient that must be an integer is not."""

    def __init__(self, numerator: int, denominator: int, what: str = "count") -> None:
        super().__init__(f"{what} {numerator}/{denominator} is not an integer")
        self.numerator = numerator
        self.denominator = denominator


class InvalidCode(RankMetricError, ValueError):
    pass


class DependentEvaluationPoints(RankMetricError, ValueError):
    pass


class DimensionTooLarge(RankMetricError, ValueError):
    pass


class BlockCountMismatch(RankMetricError, AssertionError):
    pass


class TTooSmall(RankMetricError, ValueError):
    pass


class HypothesisViolated(RankMetricError, ValueError):
    pass


class BOutOfRange(RankMetricError, ValueError):
    pass


class ParseError(RankMetricError, ValueError):
    pass
