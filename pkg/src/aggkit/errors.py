"""Exception hierarchy shared by every aggkit module."""

from __future__ import annotations


class AggregationError(ValueError):
    """Base class for all errors raised by aggkit."""


class BoundaryViolation(AggregationError):
    pass


class MonotonicityViolation(AggregationError):
    """Raised with the offending pair of subsets (as bitmasks)."""

    def __init__(self, message: str, smaller: int, larger: int):
        super().__init__(message)
        self.smaller = smaller
        self.larger = larger


class RangeViolation(AggregationError):
    pass


class GroundSetTooLarge(AggregationError):
    pass


class DomainError(AggregationError):
    pass


class RangeError(AggregationError):
    """An intermediate value left the range of a generator."""


class WeightError(AggregationError):
    pass


class DimensionMismatch(AggregationError):
    pass


class NoBracket(AggregationError):
    pass


class NotMonotone(AggregationError):
    pass


class QuadratureFailure(AggregationError):
    pass


class DegenerateG(AggregationError):
    pass


class OutOfInterval(AggregationError):
    pass


class GeneratorNotNormalized(AggregationError):
    pass


class NotCardinalityBased(AggregationError):
    def __init__(self, message: str, first: int, second: int):
        super().__init__(message)
        self.first = first
        self.second = second


class SpecError(AggregationError):
    """Malformed or unknown aggregator / measure description."""
