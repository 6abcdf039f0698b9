"""Fuzzy measures (capacities) on N = {1, ..., n}, stored by subset bitmask.

Element ``i`` (1-based) corresponds to bit ``i - 1``, so ``values[0]`` is the
empty set and ``values[2**n - 1]`` the whole ground set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from aggkit.core.weights import EPS_NORM, WeightVector, as_weights
from aggkit.errors import (
    BoundaryViolation,
    GroundSetTooLarge,
    MonotonicityViolation,
    RangeViolation,
    SpecError,
)

MAX_N = 20
CLASSIFY_CAP = 12


def mask_of(subset: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based element indices."""
    m = 0
    for i in subset:
        if i < 1:
            raise SpecError(f"element indices are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def members(mask: int) -> tuple[int, ...]:
    """1-based elements of ``mask`` in ascending order."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _format_set(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


@dataclass(frozen=True, eq=True)
class FuzzyMeasure:
    """Monotone set function with mu(empty) = 0 and mu(N) = 1.

    Construction validates; an invalid table raises instead of being repaired.
    """

    n: int
    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        _check_table(self.n, vals)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __call__(self, subset: int | Iterable[int]) -> float:
        if isinstance(subset, (int, np.integer)):
            return self.values[int(subset)]
        return self.values[mask_of(subset)]

    def __len__(self) -> int:
        return len(self.values)


def _check_table(n: int, vals: Sequence[float]) -> None:
    if not isinstance(n, int) or n < 1:
        raise SpecError(f"ground set size must be a positive integer, got {n!r}")
    if n > MAX_N:
        raise GroundSetTooLarge(f"n={n} exceeds the supported maximum {MAX_N}")
    if len(vals) != 1 << n:
        raise SpecError(f"expected {1 << n} values for n={n}, got {len(vals)}")
    for m, v in enumerate(vals):
        if not math.isfinite(v) or v < -EPS_NORM or v > 1 + EPS_NORM:
            raise RangeViolation(f"mu({_format_set(m)}) = {v!r} outside [0, 1]")
    for t in range(1, 1 << n):
        vt = vals[t]
        rest = t
        while rest:
            low = rest & -rest
            rest ^= low
            s = t ^ low
            if vals[s] > vt + EPS_NORM:
                raise MonotonicityViolation(
                    f"mu({_format_set(s)}) = {vals[s]!r} > mu({_format_set(t)}) = {vt!r}",
                    s,
                    t,
                )
    if abs(vals[0]) > EPS_NORM:
        raise BoundaryViolation(f"mu(empty) = {vals[0]!r}, expected 0")
    if abs(vals[-1] - 1.0) > EPS_NORM:
        raise BoundaryViolation(f"mu(N) = {vals[-1]!r}, expected 1")


def validate_measure(raw: Sequence[float]) -> FuzzyMeasure:
    size = len(raw)
    if size < 2 or size & (size - 1):
        raise SpecError(f"measure table length must be a power of two >= 2, got {size}")
    return FuzzyMeasure(size.bit_length() - 1, tuple(raw))


def measure_from_function(n: int, fn) -> FuzzyMeasure:
    """Tabulate ``fn(mask)`` over all subsets."""
    return FuzzyMeasure(n, tuple(fn(m) for m in range(1 << n)))


def additive_measure(w: WeightVector | Sequence[float]) -> FuzzyMeasure:
    w = as_weights(w, "sum-one")
    n = len(w)
    vals = [0.0] * (1 << n)
    for m in range(1, 1 << n):
        vals[m] = math.fsum(w[i - 1] for i in members(m))
    return FuzzyMeasure(n, tuple(vals))


def possibility_measure(w: WeightVector | Sequence[float]) -> FuzzyMeasure:
    """mu(S) = max of the weights in S; weights must be max-one."""
    w = as_weights(w, "max-one")
    n = len(w)
    vals = [0.0] + [max(w[i - 1] for i in members(m)) for m in range(1, 1 << n)]
    vals[-1] = 1.0
    return FuzzyMeasure(n, tuple(vals))


def necessity_measure(w: WeightVector | Sequence[float]) -> FuzzyMeasure:
    """mu(S) = min of the weights outside S (1 for S = N); weights min-zero."""
    w = as_weights(w, "min-zero")
    n = len(w)
    full = (1 << n) - 1
    vals = [min((w[i - 1] for i in members(full ^ m)), default=1.0) for m in range(1 << n)]
    vals[0] = 0.0
    return FuzzyMeasure(n, tuple(vals))


def cardinality_measure(by_size: Sequence[float]) -> FuzzyMeasure:
    """Symmetric measure from its values on sizes 0..n (``by_size[k]``)."""
    n = len(by_size) - 1
    return FuzzyMeasure(n, tuple(by_size[popcount(m)] for m in range(1 << n)))


def random_measure(rng: np.random.Generator, n: int) -> FuzzyMeasure:
    """Random valid measure: monotone hull of uniform draws, rescaled."""
    u = rng.random(1 << n)
    vals = [0.0] * (1 << n)
    for m in range(1, 1 << n):
        best = u[m]
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            best = max(best, vals[m ^ low])
        vals[m] = best
    top = vals[-1]
    vals = [v / top for v in vals]
    vals[0], vals[-1] = 0.0, 1.0
    return FuzzyMeasure(n, tuple(vals))


def classify_measure(mu: FuzzyMeasure, cap: int = CLASSIFY_CAP) -> dict[str, bool]:
    """Decide the additive / possibility / necessity / cardinality / binary flags.

    Each flag is checked through an equivalent singleton characterization
    (e.g. possibility <=> mu(S) = max_{i in S} mu({i})), which is exhaustive
    over all subsets and costs O(n 2^n) rather than O(4^n).
    """
    n = mu.n
    if n > cap:
        raise GroundSetTooLarge(f"n={n} exceeds classification cap {cap}")
    v = mu.values
    full = mu.full
    single = [v[1 << i] for i in range(n)]
    co_single = [v[full ^ (1 << i)] for i in range(n)]

    def close(a, b):
        return abs(a - b) <= EPS_NORM

    additive = possibility = necessity = card = True
    by_size: dict[int, float] = {}
    for m in range(1 << n):
        elems = members(m)
        if additive and not close(v[m], math.fsum(single[i - 1] for i in elems)):
            additive = False
        if possibility and m and not close(v[m], max(single[i - 1] for i in elems)):
            possibility = False
        if necessity and m != full:
            outside = members(full ^ m)
            if not close(v[m], min(co_single[i - 1] for i in outside)):
                necessity = False
        k = len(elems)
        if card:
            if k in by_size and not close(by_size[k], v[m]):
                card = False
            by_size.setdefault(k, v[m])
    binary = all(close(x, 0.0) or close(x, 1.0) for x in v)
    return {
        "additive": additive,
        "possibility": possibility,
        "necessity": necessity,
        "cardinality_based": card,
        "binary": binary,
    }


@dataclass(frozen=True)
class BinaryMeasure:
    """0/1-valued measure given by its upward-closed family of winning sets."""

    n: int
    winning: frozenset[int]

    def __post_init__(self):
        full = (1 << self.n) - 1
        win = frozenset(int(m) for m in self.winning)
        object.__setattr__(self, "winning", win)
        if 0 in win:
            raise BoundaryViolation("the empty set cannot be winning")
        if full not in win:
            raise BoundaryViolation("the ground set must be winning")
        for m in win:
            if m & ~full:
                raise SpecError(f"subset {m} outside ground set of size {self.n}")
            for i in range(self.n):
                sup = m | (1 << i)
                if sup not in win:
                    raise MonotonicityViolation(
                        f"{_format_set(m)} wins but {_format_set(sup)} does not", m, sup
                    )

    @classmethod
    def from_generators(cls, n: int, sets: Iterable[int | Iterable[int]]) -> BinaryMeasure:
        """Upward closure of the given subsets (bitmasks or 1-based index lists)."""
        gens = [s if isinstance(s, int) else mask_of(s) for s in sets]
        full = (1 << n) - 1
        win = frozenset(m for m in range(1, full + 1) if any(m & g == g for g in gens))
        return cls(n, win | {full})

    def __call__(self, mask: int) -> int:
        return 1 if mask in self.winning else 0

    def minimal_sets(self) -> list[int]:
        return sorted(
            m for m in self.winning if not any((m ^ (1 << i)) in self.winning for i in members_bits(m))
        )

    def to_measure(self) -> FuzzyMeasure:
        return FuzzyMeasure(self.n, tuple(float(self(m)) for m in range(1 << self.n)))


def members_bits(mask: int) -> list[int]:
    return [i - 1 for i in members(mask)]
