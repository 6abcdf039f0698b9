from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from aggkit.errors import DomainError

STRICT = "<"
EQUAL = "="


@dataclass(frozen=True)
class InvariantSignature:
    """Orbit of a vector under strictly increasing bijections of the reals.

    ``perm`` is 1-based: ``x[perm[0]-1] <= x[perm[1]-1] <= ...``; ``relations``
    records whether each consecutive pair is strict or tied.
    """

    perm: tuple[int, ...]
    relations: tuple[str, ...]

    def __str__(self) -> str:
        return f"π=({','.join(map(str, self.perm))}) rel=({','.join(self.relations)})"


def invariant_signature(x: Sequence[float]) -> InvariantSignature:
    xs = [float(v) for v in x]
    if any(not math.isfinite(v) for v in xs):
        raise DomainError("signature needs finite components")
    order = sorted(range(len(xs)), key=lambda i: xs[i])  # stable: ties by index
    rel = tuple(
        EQUAL if xs[order[j]] == xs[order[j + 1]] else STRICT for j in range(len(xs) - 1)
    )
    return InvariantSignature(tuple(i + 1 for i in order), rel)
