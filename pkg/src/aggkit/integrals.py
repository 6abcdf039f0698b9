"""Discrete Choquet and Sugeno integrals and their special cases.

Sorting is ascending and stable (ties broken by original index).  The upper
set ``A_(i)`` holds the indices of the ``n - i + 1`` largest components, and
``A_(n+1)`` is empty.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

from aggkit.core.measures import BinaryMeasure, FuzzyMeasure, cardinality_measure, members, popcount
from aggkit.core.weights import WeightVector, as_weights
from aggkit.errors import DimensionMismatch, DomainError, NotCardinalityBased, RangeViolation, SpecError


@dataclass(frozen=True)
class SortView:
    """Ascending order of ``x``: ``order[i]`` is the 0-based index of x_(i+1);
    ``upper[i]`` is the bitmask of A_(i+1), with ``upper[n] == 0``."""

    order: tuple[int, ...]
    upper: tuple[int, ...]


def _vector(x: Sequence[float]) -> list[float]:
    xs = [float(v) for v in x]
    if not xs:
        raise DimensionMismatch("cannot aggregate an empty vector")
    if not all(math.isfinite(v) for v in xs):
        raise DomainError(f"non-finite input in {xs}")
    return xs


def _exact_dot(coeffs: Sequence[float], xs: Sequence[float]) -> float:
    # one rounding at the end: (3,1,2) with OWA weights (0.5,0.3,0.2) gives 1.7
    return float(sum(Fraction(c) * Fraction(v) for c, v in zip(coeffs, xs)))


def _upper_sets(order: Sequence[int]) -> tuple[int, ...]:
    n = len(order)
    upper = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        upper[i] = upper[i + 1] | (1 << order[i])
    return tuple(upper)


def sort_view(x: Sequence[float]) -> SortView:
    xs = _vector(x)
    order = tuple(sorted(range(len(xs)), key=lambda i: xs[i]))
    return SortView(order, _upper_sets(order))


def _check_n(xs: Sequence[float], n: int) -> None:
    if len(xs) != n:
        raise DimensionMismatch(f"{len(xs)} inputs for a measure on {n} elements")


def _unit(xs: Sequence[float]) -> None:
    for v in xs:
        if not 0.0 <= v <= 1.0:
            raise RangeViolation(f"input {v!r} outside [0, 1]")


def choquet(x: Sequence[float], mu: FuzzyMeasure, order: Sequence[int] | None = None) -> float:
    """sum_i x_(i) (mu(A_(i)) - mu(A_(i+1))).

    ``order`` may supply any ascending permutation (0-based) of ``x``; the
    value does not depend on how ties are broken.
    """
    xs = _vector(x)
    _check_n(xs, mu.n)
    if order is None:
        view = sort_view(xs)
    else:
        order = tuple(int(i) for i in order)
        if sorted(order) != list(range(len(xs))):
            raise SpecError(f"{order} is not a permutation of 0..{len(xs) - 1}")
        if any(xs[a] > xs[b] for a, b in zip(order, order[1:])):
            raise SpecError("order does not sort x ascending")
        view = SortView(order, _upper_sets(order))
    v = mu.values
    u = view.upper
    val = float(
        sum(
            Fraction(xs[k]) * (Fraction(v[u[i]]) - Fraction(v[u[i + 1]]))
            for i, k in enumerate(view.order)
        )
    )
    return min(max(val, min(xs)), max(xs))


def sugeno(x: Sequence[float], mu: FuzzyMeasure) -> float:
    """max_i min(x_(i), mu(A_(i))) on [0, 1]^n."""
    xs = _vector(x)
    _check_n(xs, mu.n)
    _unit(xs)
    view = sort_view(xs)
    return max(min(xs[k], mu.values[view.upper[i]]) for i, k in enumerate(view.order))


def sugeno_disjunctive(x: Sequence[float], mu: FuzzyMeasure) -> float:
    """max over nonempty T of min(mu(T), min_{i in T} x_i); needs no sorting.

    The empty set contributes mu(empty) = 0 and is skipped.
    """
    xs = _vector(x)
    _check_n(xs, mu.n)
    _unit(xs)
    best = 0.0
    for t in range(1, 1 << mu.n):
        best = max(best, min(mu.values[t], min(xs[i - 1] for i in members(t))))
    return best


def _median(vals: Sequence[float]) -> float:
    if len(vals) % 2 == 0:
        raise SpecError("median of an even number of values is not a selection")
    return sorted(vals)[len(vals) // 2]


def sugeno_weighted_median(x: Sequence[float], mu: FuzzyMeasure) -> float:
    """median(x_1, ..., x_n, mu(A_(2)), ..., mu(A_(n)))."""
    xs = _vector(x)
    _check_n(xs, mu.n)
    _unit(xs)
    view = sort_view(xs)
    return _median(xs + [mu.values[view.upper[i]] for i in range(1, mu.n)])


def _matched(x: Sequence[float], w: WeightVector) -> list[float]:
    xs = _vector(x)
    if len(xs) != len(w):
        raise DimensionMismatch(f"{len(w)} weights for {len(xs)} inputs")
    return xs


def owa(x: Sequence[float], w: WeightVector | Sequence[float]) -> float:
    """sum_i w_i x_(i) with x ascending."""
    w = as_weights(w, "sum-one")
    xs = sorted(_matched(x, w))
    return min(max(_exact_dot(w, xs), xs[0]), xs[-1])


def wam(x: Sequence[float], w: WeightVector | Sequence[float]) -> float:
    w = as_weights(w, "sum-one")
    xs = _matched(x, w)
    return min(max(_exact_dot(w, xs), min(xs)), max(xs))


def order_statistic(x: Sequence[float], k: int) -> float:
    """k-th smallest component, 1 <= k <= n."""
    xs = _vector(x)
    if not 1 <= k <= len(xs):
        raise IndexError(f"order statistic k={k} outside 1..{len(xs)}")
    return sorted(xs)[k - 1]


def _dec(v: float) -> Decimal:
    # shortest repr, so decimal inputs such as 0.3 convert exactly
    return Decimal(repr(float(v)))


def owa_to_measure(w: WeightVector | Sequence[float], n: int | None = None) -> FuzzyMeasure:
    """Cardinality-based measure with mu(S) = w_{n-s+1} + ... + w_n, s = |S|.

    Partial sums are accumulated in decimal so that decimal weights give
    correctly rounded measure values.
    """
    w = as_weights(w, "sum-one")
    if n is not None and n != len(w):
        raise DimensionMismatch(f"{len(w)} weights for n={n}")
    n = len(w)
    by_size = [0.0] * (n + 1)
    acc = Decimal(0)
    for s in range(1, n + 1):
        acc += _dec(w[n - s])
        by_size[s] = float(acc)
    by_size[n] = 1.0
    return cardinality_measure(by_size)


def cardinality_values(mu: FuzzyMeasure, tol: float = 0.0) -> list[float]:
    """Values of a cardinality-based measure by subset size.

    Raises NotCardinalityBased with the first pair of equal-size subsets whose
    values differ by more than ``tol``.
    """
    first: dict[int, int] = {}
    for m in range(1 << mu.n):
        k = popcount(m)
        if k not in first:
            first[k] = m
        elif abs(mu.values[m] - mu.values[first[k]]) > tol:
            raise NotCardinalityBased(
                f"mu differs on subsets {members(first[k])} and {members(m)} of equal size",
                first[k],
                m,
            )
    return [mu.values[first[k]] for k in range(mu.n + 1)]


def measure_to_owa(mu: FuzzyMeasure, tol: float = 0.0) -> WeightVector:
    """w_{n-s} = mu(S + i) - mu(S) for |S| = s, differences taken in decimal."""
    c = [_dec(v) for v in cardinality_values(mu, tol)]
    n = mu.n
    w = [0.0] * n
    for s in range(n):
        w[n - s - 1] = float(c[s + 1] - c[s])
    return WeightVector(tuple(w), "sum-one")


def pmax(x: Sequence[float], w: WeightVector | Sequence[float]) -> float:
    """Weighted maximum max_i min(w_i, x_i)."""
    w = as_weights(w, "max-one")
    xs = _matched(x, w)
    _unit(xs)
    return max(min(wi, v) for wi, v in zip(w, xs))


def pmin(x: Sequence[float], w: WeightVector | Sequence[float]) -> float:
    """Weighted minimum min_i max(w_i, x_i)."""
    w = as_weights(w, "min-zero")
    xs = _matched(x, w)
    _unit(xs)
    return min(max(wi, v) for wi, v in zip(w, xs))


def opmax(x: Sequence[float], w: WeightVector | Sequence[float]) -> float:
    """Ordered weighted maximum max_i min(w_i, x_(i))."""
    w = as_weights(w, "max-one")
    xs = _matched(x, w)
    _unit(xs)
    return max(min(wi, v) for wi, v in zip(w, sorted(xs)))


def opmin(x: Sequence[float], w: WeightVector | Sequence[float]) -> float:
    """Ordered weighted minimum min_i max(w_i, x_(i))."""
    w = as_weights(w, "min-zero")
    xs = _matched(x, w)
    _unit(xs)
    return min(max(wi, v) for wi, v in zip(w, sorted(xs)))


def opmax_to_measure(w: WeightVector | Sequence[float]) -> FuzzyMeasure:
    """Cardinality-based mu with sugeno(., mu) = opmax(., w).

    mu(S) = max_{j >= n-|S|+1} w_j: a weight can only ever meet the larger
    order statistics, so each weight is carried down to smaller indices.
    """
    w = as_weights(w, "max-one")
    n = len(w)
    by_size = [0.0] + [max(w[n - s :]) for s in range(1, n + 1)]
    by_size[n] = 1.0
    return cardinality_measure(by_size)


def opmin_to_measure(w: WeightVector | Sequence[float]) -> FuzzyMeasure:
    """Cardinality-based mu with sugeno(., mu) = opmin(., w).

    mu(S) = min_{j <= n-|S|} w_j for 0 < |S| < n.
    """
    w = as_weights(w, "min-zero")
    n = len(w)
    by_size = [0.0] + [min(w[: n - s]) for s in range(1, n)] + [1.0]
    return cardinality_measure(by_size)


def measure_to_opmax(mu: FuzzyMeasure) -> WeightVector:
    """Nonincreasing opmax weights w_i = mu(any set of size n-i+1)."""
    c = cardinality_values(mu)
    n = mu.n
    return WeightVector(tuple(c[n - i] for i in range(n)), "max-one")


def measure_to_opmin(mu: FuzzyMeasure) -> WeightVector:
    """Nonincreasing opmin weights w_i = mu(any set of size n-i), w_n = 0."""
    c = cardinality_values(mu)
    n = mu.n
    return WeightVector(tuple(c[n - i] for i in range(1, n + 1)), "min-zero")


def lattice_polynomial(x: Sequence[float], gamma: BinaryMeasure) -> float:
    """max over winning S of min_{i in S} x_i (minimal winning sets suffice)."""
    xs = _vector(x)
    _check_n(xs, gamma.n)
    return max(min(xs[i - 1] for i in members(m)) for m in gamma.minimal_sets())


def upward_closed_families(n: int) -> list[BinaryMeasure]:
    """All 0/1 measures on n elements, by brute force over families of sets.

    Only feasible for n <= 4 (2^16 candidate families).
    """
    if n > 4:
        raise SpecError("brute-force enumeration is limited to n <= 4")
    full = (1 << n) - 1
    inner = list(range(1, full))
    out = []
    for choice in itertools.product((False, True), repeat=len(inner)):
        win = {m for m, keep in zip(inner, choice) if keep} | {full}
        if all((m | (1 << i)) in win for m in win for i in range(n)):
            out.append(BinaryMeasure(n, frozenset(win)))
    return out


def geometric_weights(n: int, theta: float) -> WeightVector:
    """w_i proportional to (1-theta)^(n-i) theta^(i-1); theta=1/2 is uniform."""
    theta = float(theta)
    if not 0.0 <= theta <= 1.0:
        raise SpecError(f"theta must lie in [0, 1], got {theta}")
    if n < 1:
        raise SpecError("n must be positive")
    terms = [(1.0 - theta) ** (n - i) * theta ** (i - 1) for i in range(1, n + 1)]
    total = math.fsum(terms)
    return WeightVector(tuple(t / total for t in terms), "sum-one")
