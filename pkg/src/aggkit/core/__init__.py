"""Domain types: fuzzy measures, weights, generators and invariant signatures."""

from aggkit.core.generators import (
    FAMILIES,
    GeneratorSpec,
    Interval,
    affine,
    composed,
    exp,
    identity,
    log,
    neg_complement,
    power,
    reciprocal,
    rescaled,
)
from aggkit.core.io import dump_measure, load_measure, measure_from_json, measure_to_json
from aggkit.core.measures import (
    BinaryMeasure,
    FuzzyMeasure,
    additive_measure,
    cardinality_measure,
    classify_measure,
    mask_of,
    measure_from_function,
    members,
    necessity_measure,
    popcount,
    possibility_measure,
    random_measure,
    validate_measure,
)
from aggkit.core.signature import InvariantSignature, invariant_signature
from aggkit.core.weights import EPS_NORM, WeightVector, as_weights

EPS_INV = 1e-9

__all__ = [
    "EPS_INV",
    "EPS_NORM",
    "FAMILIES",
    "BinaryMeasure",
    "FuzzyMeasure",
    "GeneratorSpec",
    "Interval",
    "InvariantSignature",
    "WeightVector",
    "additive_measure",
    "affine",
    "as_weights",
    "cardinality_measure",
    "classify_measure",
    "composed",
    "dump_measure",
    "exp",
    "identity",
    "invariant_signature",
    "load_measure",
    "log",
    "mask_of",
    "measure_from_function",
    "measure_from_json",
    "measure_to_json",
    "members",
    "necessity_measure",
    "neg_complement",
    "popcount",
    "possibility_measure",
    "power",
    "random_measure",
    "reciprocal",
    "rescaled",
    "validate_measure",
]
