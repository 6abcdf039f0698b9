from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from aggkit.errors import WeightError

EPS_NORM = 1e-9

NORMALIZATIONS = ("sum-one", "max-one", "min-zero")


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights with one of three normalizations.

    ``sum-one`` is used by WAM/OWA and quasi-linear means, ``max-one`` by the
    (ordered) weighted maximum and ``min-zero`` by the (ordered) weighted
    minimum.
    """

    weights: tuple[float, ...]
    normalization: str = "sum-one"

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        object.__setattr__(self, "weights", w)
        if self.normalization not in NORMALIZATIONS:
            raise WeightError(f"unknown normalization {self.normalization!r}")
        if not w:
            raise WeightError("empty weight vector")
        if any(not math.isfinite(v) for v in w):
            raise WeightError("weights must be finite")
        if self.normalization == "sum-one":
            if any(v < 0 for v in w):
                raise WeightError(f"negative weight in {w}")
            total = math.fsum(w)
            if abs(total - 1.0) > EPS_NORM:
                raise WeightError(f"weights sum to {total!r}, expected 1")
        else:
            if any(v < 0 or v > 1 for v in w):
                raise WeightError(f"weights must lie in [0, 1]: {w}")
            if self.normalization == "max-one" and max(w) != 1.0:
                if abs(max(w) - 1.0) > EPS_NORM:
                    raise WeightError(f"max weight is {max(w)!r}, expected 1")
            if self.normalization == "min-zero" and min(w) != 0.0:
                if abs(min(w)) > EPS_NORM:
                    raise WeightError(f"min weight is {min(w)!r}, expected 0")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def as_weights(w: WeightVector | Iterable[float], normalization: str = "sum-one") -> WeightVector:
    if isinstance(w, WeightVector):
        if w.normalization != normalization:
            return WeightVector(w.weights, normalization)
        return w
    return WeightVector(tuple(w), normalization)
