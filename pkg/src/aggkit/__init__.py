"""Aggregation functions: means, associative operations, fuzzy integrals and
sampled property checks."""

from aggkit.axioms import PropertyReport, Sampler
from aggkit.core import BinaryMeasure, FuzzyMeasure, GeneratorSpec, WeightVector
from aggkit.errors import AggregationError
from aggkit.specs import Aggregator, build, load

__version__ = "0.1.0"

__all__ = [
    "AggregationError",
    "Aggregator",
    "BinaryMeasure",
    "FuzzyMeasure",
    "GeneratorSpec",
    "PropertyReport",
    "Sampler",
    "WeightVector",
    "build",
    "load",
]
