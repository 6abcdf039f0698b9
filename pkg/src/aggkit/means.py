"""Quasi-arithmetic, quasi-linear, root-mean-power, Chisini, Lagrangian and
Cauchy means."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from aggkit._numerics import EPS_QUAD, adaptive_simpson, bisect
from aggkit.core.generators import GeneratorSpec
from aggkit.core.weights import WeightVector, as_weights
from aggkit.errors import DegenerateG, DimensionMismatch, DomainError, RangeError, SpecError

# below this |alpha| the root-mean-power is evaluated as the geometric mean
ALPHA_ZERO = 1e-7


def _vector(x: Sequence[float]) -> list[float]:
    xs = [float(v) for v in x]
    if not xs:
        raise DimensionMismatch("cannot aggregate an empty vector")
    if any(math.isnan(v) for v in xs):
        raise DomainError("NaN input")
    return xs


def _clamp(v: float, lo: float, hi: float) -> float:
    # the exact result is internal; only rounding can push it outside
    return min(max(v, lo), hi)


def _transform(xs: list[float], f: GeneratorSpec) -> list[float]:
    for v in xs:
        f.check_domain(v)
    return [f(v) for v in xs]


def quasi_arithmetic_mean(x: Sequence[float], f: GeneratorSpec) -> float:
    xs = _vector(x)
    fx = _transform(xs, f)
    return _clamp(f.inverse(math.fsum(fx) / len(xs)), min(xs), max(xs))


def quasi_linear_mean(
    x: Sequence[float], w: WeightVector | Sequence[float], f: GeneratorSpec
) -> float:
    xs = _vector(x)
    w = as_weights(w, "sum-one")
    if len(w) != len(xs):
        raise DimensionMismatch(f"{len(w)} weights for {len(xs)} inputs")
    fx = _transform(xs, f)
    # zero-weight terms drop out even when f(x_i) is infinite
    acc = math.fsum(wi * fi for wi, fi in zip(w, fx) if wi != 0.0)
    return _clamp(f.inverse(acc), min(xs), max(xs))


def quasi_linear_function(
    x: Sequence[float], p: Sequence[float], q: float, f: GeneratorSpec
) -> float:
    xs = _vector(x)
    p = [float(v) for v in p]
    if len(p) != len(xs):
        raise DimensionMismatch(f"{len(p)} coefficients for {len(xs)} inputs")
    if any(not (v > 0 and math.isfinite(v)) for v in p):
        raise SpecError("quasi-linear function coefficients must be positive")
    fx = _transform(xs, f)
    t = math.fsum(pi * fi for pi, fi in zip(p, fx)) + float(q)
    if not f.range.contains(t):
        raise RangeError(f"affine combination {t!r} outside generator range {f.range}")
    return f.inverse(t)


def arithmetic_mean(x: Sequence[float]) -> float:
    xs = _vector(x)
    return _clamp(math.fsum(xs) / len(xs), min(xs), max(xs))


def geometric_mean(x: Sequence[float]) -> float:
    xs = _positive(x)
    return _clamp(math.exp(math.fsum(map(math.log, xs)) / len(xs)), min(xs), max(xs))


def harmonic_mean(x: Sequence[float]) -> float:
    return root_mean_power(x, -1.0)


def quadratic_mean(x: Sequence[float]) -> float:
    return root_mean_power(x, 2.0)


def _positive(x: Sequence[float]) -> list[float]:
    xs = _vector(x)
    if any(v <= 0 or math.isinf(v) for v in xs):
        raise DomainError(f"root-mean-power needs positive finite inputs, got {xs}")
    return xs


def _logsumexp(t: Sequence[float]) -> float:
    m = max(t)
    return m + math.log(math.fsum(math.exp(v - m) for v in t))


def root_mean_power(x: Sequence[float], alpha: float) -> float:
    """((1/n) sum x_i^alpha)^(1/alpha) with the geometric / min / max limits.

    Evaluated in log space so that large ``|alpha|`` neither overflows nor
    underflows.
    """
    xs = _positive(x)
    alpha = float(alpha)
    if alpha == math.inf:
        return max(xs)
    if alpha == -math.inf:
        return min(xs)
    if math.isnan(alpha):
        raise DomainError("alpha is NaN")
    if abs(alpha) < ALPHA_ZERO:
        return geometric_mean(xs)
    logs = [alpha * math.log(v) for v in xs]
    val = math.exp((_logsumexp(logs) - math.log(len(xs))) / alpha)
    return _clamp(val, min(xs), max(xs))


def exponential_mean(x: Sequence[float], alpha: float) -> float:
    """(1/alpha) ln((1/n) sum e^(alpha x_i)), in shifted log-sum-exp form."""
    xs = _vector(x)
    alpha = float(alpha)
    if alpha == 0 or not math.isfinite(alpha):
        raise SpecError("exponential mean needs a finite nonzero alpha")
    val = (_logsumexp([alpha * v for v in xs]) - math.log(len(xs))) / alpha
    return _clamp(val, min(xs), max(xs))


def chisini_solve(
    g: Callable[[Sequence[float]], float],
    x: Sequence[float],
    bracket: tuple[float, float] | None = None,
    tol: float | None = None,
) -> float:
    """Find M with g(M, ..., M) = g(x) by bisection on ``bracket``.

    The bracket defaults to ``[min x, max x]``.
    """
    xs = _vector(x)
    n = len(xs)
    lo, hi = bracket if bracket is not None else (min(xs), max(xs))
    if lo == hi:
        if g([lo] * n) != g(xs):
            raise DomainError("degenerate bracket does not solve the Chisini equation")
        return float(lo)
    return bisect(lambda t: g([t] * n), float(lo), float(hi), g(xs), tol=tol)


def _check_pair(x: float, y: float, f: GeneratorSpec) -> tuple[float, float]:
    lo, hi = (x, y) if x <= y else (y, x)
    f.check_domain(lo)
    f.check_domain(hi)
    return lo, hi


def lagrangian_mean(x: float, y: float, f: GeneratorSpec) -> float:
    """f^-1 of the average of f over the segment between x and y."""
    x, y = float(x), float(y)
    if x == y:
        return x
    lo, hi = _check_pair(x, y, f)
    width = hi - lo
    avg = adaptive_simpson(f, lo, hi, tol=EPS_QUAD * width) / width
    return _clamp(f.inverse(avg), lo, hi)


def logarithmic_mean(x: float, y: float) -> float:
    x, y = float(x), float(y)
    if x <= 0 or y <= 0:
        raise DomainError("logarithmic mean needs positive inputs")
    if x == y:
        return x
    lo, hi = min(x, y), max(x, y)
    return _clamp((x - y) / (math.log(x) - math.log(y)), lo, hi)


def cauchy_mean(x: float, y: float, f: GeneratorSpec, g: GeneratorSpec) -> float:
    """Mean value from the Cauchy mean value theorem for the pair (f, g).

    ``g = f`` recovers the quasi-arithmetic 2-mean, ``g = identity`` the
    Lagrangian mean and ``f = identity`` the anti-Lagrangian means.
    """
    x, y = float(x), float(y)
    if x == y:
        return x
    lo, hi = _check_pair(x, y, f)
    g.check_domain(lo)
    g.check_domain(hi)
    denom = g(hi) - g(lo)
    if denom == 0 or not math.isfinite(denom):
        raise DegenerateG(f"g({lo}) and g({hi}) do not span a usable interval")
    integral = adaptive_simpson(lambda t: f(t) * g.derivative(t), lo, hi, tol=EPS_QUAD * abs(denom))
    return _clamp(f.inverse(integral / denom), lo, hi)


MEAN_KINDS = (
    "arithmetic",
    "quadratic",
    "geometric",
    "harmonic",
    "root-power",
    "exponential",
    "quasi-arithmetic",
    "quasi-linear",
    "quasi-linear-function",
)


@dataclass(frozen=True)
class MeanSpec:
    """A mean from the catalog, callable on a vector."""

    kind: str
    alpha: float | None = None
    generator: GeneratorSpec | None = None
    weights: tuple[float, ...] | None = None
    p: tuple[float, ...] | None = None
    q: float = 0.0

    def __post_init__(self):
        if self.kind not in MEAN_KINDS:
            raise SpecError(f"unknown mean kind {self.kind!r}")
        if self.kind in ("root-power", "exponential") and self.alpha is None:
            raise SpecError(f"{self.kind} mean needs alpha")
        if self.kind.startswith("quasi") and self.generator is None:
            raise SpecError(f"{self.kind} mean needs a generator")
        if self.kind == "quasi-linear":
            if self.weights is None:
                raise SpecError("quasi-linear mean needs weights")
            as_weights(self.weights, "sum-one")
        if self.kind == "quasi-linear-function":
            if self.p is None or any(v <= 0 for v in self.p):
                raise SpecError("quasi-linear function needs positive p")

    def __call__(self, x: Sequence[float]) -> float:
        k = self.kind
        if k == "arithmetic":
            return arithmetic_mean(x)
        if k == "quadratic":
            return quadratic_mean(x)
        if k == "geometric":
            return geometric_mean(x)
        if k == "harmonic":
            return harmonic_mean(x)
        if k == "root-power":
            return root_mean_power(x, self.alpha)
        if k == "exponential":
            return exponential_mean(x, self.alpha)
        if k == "quasi-arithmetic":
            return quasi_arithmetic_mean(x, self.generator)
        if k == "quasi-linear":
            return quasi_linear_mean(x, self.weights, self.generator)
        return quasi_linear_function(x, self.p, self.q, self.generator)
