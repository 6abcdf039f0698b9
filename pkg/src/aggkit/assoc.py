"""Generator-based associative operations, ordinal sums and the idempotent
associative family."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from aggkit.axioms import PropertyReport, Sampler, check_associativity, check_monotonicity, check_symmetry
from aggkit.core import EPS_INV
from aggkit.core.generators import GeneratorSpec, Interval, affine, composed
from aggkit.errors import (
    DimensionMismatch,
    GeneratorNotNormalized,
    OutOfInterval,
    RangeError,
    SpecError,
)

INF = math.inf


def aczelian(x: float, y: float, f: GeneratorSpec) -> float:
    """f^-1(f(x) + f(y)); sum for the identity, product for log."""
    return aczelian_n([x, y], f)


def aczelian_n(x: Sequence[float], f: GeneratorSpec) -> float:
    if not x:
        raise DimensionMismatch("empty input")
    for v in x:
        f.check_domain(float(v))
    t = math.fsum(f(float(v)) for v in x)
    if not f.range.contains(t):
        raise RangeError(f"generator sum {t!r} outside range {f.range}")
    return f.inverse(t)


# -- Archimedean semigroups ---------------------------------------------------

ORIENTATIONS = ("conjunctive", "disjunctive")


@dataclass(frozen=True)
class ArchimedeanSpec:
    """Continuous Archimedean operation on ``[a, b]`` from an additive generator.

    Conjunctive: generator strictly decreasing with f(b) = 0, identity b, zero a.
    Disjunctive: generator strictly increasing with f(a) = 0, identity a, zero b.
    The capped value (f(a) resp. f(b)) may be +inf, the strict case.
    """

    orientation: str
    interval: tuple[float, float]
    generator: GeneratorSpec
    cap: float = field(init=False)

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise SpecError(f"orientation must be one of {ORIENTATIONS}")
        a, b = (float(v) for v in self.interval)
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise SpecError(f"bad interval {self.interval}")
        object.__setattr__(self, "interval", (a, b))
        f = self.generator
        dom = f.domain
        if not (dom.closure_contains(a) and dom.closure_contains(b)):
            raise SpecError(f"generator domain {dom} does not cover [{a}, {b}]")
        conj = self.orientation == "conjunctive"
        if f.increasing == conj:
            want = "decreasing" if conj else "increasing"
            raise SpecError(f"{self.orientation} generator must be strictly {want}")
        zero_end, cap_end = (b, a) if conj else (a, b)
        if abs(f(zero_end)) > EPS_INV:
            raise SpecError(f"generator must vanish at {zero_end}, got {f(zero_end)!r}")
        cap = f(cap_end)
        if not cap > 0:
            raise SpecError("generator must be positive away from the identity")
        object.__setattr__(self, "cap", cap)

    @property
    def nilpotent(self) -> bool:
        return math.isfinite(self.cap)

    @property
    def identity(self) -> float:
        return self.interval[1] if self.orientation == "conjunctive" else self.interval[0]

    @property
    def zero(self) -> float:
        return self.interval[0] if self.orientation == "conjunctive" else self.interval[1]


def _check_in(v: float, a: float, b: float) -> float:
    v = float(v)
    if not a <= v <= b:
        raise OutOfInterval(f"{v} outside [{a}, {b}]")
    return v


def archimedean(x: float, y: float, spec: ArchimedeanSpec) -> float:
    a, b = spec.interval
    x, y = _check_in(x, a, b), _check_in(y, a, b)
    # endpoint laws hold exactly, not up to generator round-off
    if x == spec.identity:
        return y
    if y == spec.identity:
        return x
    if x == spec.zero or y == spec.zero:
        return spec.zero
    f = spec.generator
    t = f(x) + f(y)
    if t >= spec.cap:
        return spec.zero
    return min(max(f.inverse(t), a), b)


def archimedean_n(x: Sequence[float], spec: ArchimedeanSpec) -> float:
    if not x:
        raise DimensionMismatch("empty input")
    a, b = spec.interval
    return reduce(lambda acc, v: archimedean(acc, v, spec), x[1:], _check_in(x[0], a, b))


# -- normalized forms ---------------------------------------------------------

FORMS = ("luka", "strict-product", "dual-luka", "dual-product")


def _check_normalized(g: GeneratorSpec, interval: tuple[float, float]) -> None:
    a, b = interval
    if not g.increasing:
        raise GeneratorNotNormalized("normalized generator must be strictly increasing")
    dom = g.domain
    if not (dom.closure_contains(a) and dom.closure_contains(b)):
        raise GeneratorNotNormalized(f"generator domain {dom} does not cover [{a}, {b}]")
    if abs(g(a)) > EPS_INV or abs(g(b) - 1.0) > EPS_INV:
        raise GeneratorNotNormalized(f"need g({a}) = 0 and g({b}) = 1, got {g(a)!r}, {g(b)!r}")


def normalized_form(
    x: float,
    y: float,
    g: GeneratorSpec,
    form: str,
    interval: tuple[float, float] = (0.0, 1.0),
) -> float:
    return normalized_form_n([x, y], g, form, interval)


def normalized_form_n(
    x: Sequence[float],
    g: GeneratorSpec,
    form: str,
    interval: tuple[float, float] = (0.0, 1.0),
) -> float:
    """Sequence versions of the four normalized Archimedean forms.

    luka:           g^-1(max(sum g(x_i) - n + 1, 0))
    strict-product: g^-1(prod g(x_i))
    dual-luka:      g^-1(min(sum g(x_i), 1))
    dual-product:   g^-1(1 - prod(1 - g(x_i)))
    """
    if form not in FORMS:
        raise SpecError(f"form must be one of {FORMS}")
    if not x:
        raise DimensionMismatch("empty input")
    a, b = (float(v) for v in interval)
    _check_normalized(g, (a, b))
    gx = [min(max(g(_check_in(v, a, b)), 0.0), 1.0) for v in x]
    n = len(gx)
    if form == "luka":
        t = max(math.fsum(gx) - n + 1, 0.0)
    elif form == "strict-product":
        t = math.prod(gx)
    elif form == "dual-luka":
        t = min(math.fsum(gx), 1.0)
    else:
        t = 1.0 - math.prod(1.0 - v for v in gx)
    if t == 0.0:
        return a
    if t == 1.0:
        return b
    return min(max(g.inverse(t), a), b)


def form_generator(form: str, g: GeneratorSpec | None = None) -> tuple[str, GeneratorSpec]:
    """Additive generator realizing a normalized form, as (orientation, f).

    luka: f = 1 - g; strict-product: f = -ln g; dual-luka: f = g;
    dual-product: f = -ln(1 - g).
    """
    from aggkit.core.generators import identity, log, neg_complement

    g = g if g is not None else identity()
    if form == "luka":
        return "conjunctive", composed(neg_complement(), g)
    if form == "strict-product":
        return "conjunctive", composed(affine(-1.0, 0.0), composed(log(), g))
    if form == "dual-luka":
        return "disjunctive", g
    if form == "dual-product":
        return "disjunctive", composed(affine(-1.0, 0.0), composed(log(), composed(neg_complement(), g)))
    raise SpecError(f"form must be one of {FORMS}")


# -- ordinal sums -------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One summand: an Archimedean operation on [0, 1] acting on the
    affinely rescaled coordinate (x - lo) / (hi - lo)."""

    lo: float
    hi: float
    operation: ArchimedeanSpec

    def __post_init__(self):
        if not self.lo < self.hi:
            raise SpecError(f"component interval [{self.lo}, {self.hi}] is empty")
        if self.operation.interval != (0.0, 1.0):
            raise SpecError("component operations are defined on the unit interval")

    def apply(self, x: float, y: float) -> float:
        w = self.hi - self.lo
        u = min(max((x - self.lo) / w, 0.0), 1.0)
        v = min(max((y - self.lo) / w, 0.0), 1.0)
        out = self.lo + w * archimedean(u, v, self.operation)
        return min(max(out, self.lo), self.hi)


@dataclass(frozen=True)
class OrdinalSumSpec:
    orientation: str
    interval: tuple[float, float]
    components: tuple[Component, ...] = ()

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise SpecError(f"orientation must be one of {ORIENTATIONS}")
        a, b = (float(v) for v in self.interval)
        if not a < b:
            raise SpecError(f"bad interval {self.interval}")
        object.__setattr__(self, "interval", (a, b))
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        for c in comps:
            if c.lo < a or c.hi > b:
                raise SpecError(f"component [{c.lo}, {c.hi}] outside [{a}, {b}]")
            if c.operation.orientation != self.orientation:
                raise SpecError("component orientation must match the ordinal sum")
        spans = sorted((c.lo, c.hi) for c in comps)
        for (_, hi1), (lo2, _) in zip(spans, spans[1:]):
            if lo2 < hi1:
                raise SpecError("component interiors overlap")

    def locate(self, x: float) -> int | None:
        # shared endpoints go to the lower-indexed component
        for k, c in enumerate(self.components):
            if c.lo <= x <= c.hi:
                return k
        return None


def ordinal_sum(x: float, y: float, spec: OrdinalSumSpec) -> float:
    a, b = spec.interval
    x, y = _check_in(x, a, b), _check_in(y, a, b)
    kx, ky = spec.locate(x), spec.locate(y)
    if kx is not None and kx == ky:
        return spec.components[kx].apply(x, y)
    return min(x, y) if spec.orientation == "conjunctive" else max(x, y)


def ordinal_sum_n(x: Sequence[float], spec: OrdinalSumSpec) -> float:
    if not x:
        raise DimensionMismatch("empty input")
    return reduce(lambda acc, v: ordinal_sum(acc, v, spec), x[1:], float(x[0]))


# -- idempotent associative family -------------------------------------------


@dataclass(frozen=True)
class IdempotentAssocSpec:
    alpha: float
    beta: float


def alpha_beta(x: float, y: float, spec: IdempotentAssocSpec) -> float:
    a, b = spec.alpha, spec.beta
    return max(min(a, x), min(b, y), min(x, y))


def alpha_beta_n(x: Sequence[float], spec: IdempotentAssocSpec) -> float:
    """(a ^ x_1) v (a ^ b ^ x_2..x_{n-1}) v (b ^ x_n) v min(x)."""
    if not x:
        raise DimensionMismatch("empty input")
    xs = [float(v) for v in x]
    a, b = spec.alpha, spec.beta
    terms = [min(a, xs[0]), min(b, xs[-1]), min(xs)]
    ab = min(a, b)
    terms.extend(min(ab, v) for v in xs[1:-1])
    return max(terms)


def median_assoc_n(x: Sequence[float], alpha: float) -> float:
    if not x:
        raise DimensionMismatch("empty input")
    lo, hi = min(x), max(x)
    return float(sorted((lo, hi, alpha))[1])


def czogala_drewniak(x: float, y: float, g: Callable[[float], float], tie: str = "take-min") -> float:
    """Idempotent associative operation with identity e = g(e), g decreasing."""
    if tie not in ("take-min", "take-max"):
        raise SpecError("tie must be 'take-min' or 'take-max'")
    gx = g(x)
    if y < gx:
        return min(x, y)
    if y > gx:
        return max(x, y)
    return min(x, y) if tie == "take-min" else max(x, y)


# -- t-norm / t-conorm / uninorm predicates ------------------------------------

IDENTITY_GRID = 1001
IDENTITY_REFINE = 60


def _binary(op: Callable[[float, float], float]):
    return lambda v: op(v[0], v[1])


def _identity_residual(op, e: float, probes: Sequence[float]) -> float:
    return max(max(abs(op(e, t) - t), abs(op(t, e) - t)) for t in probes)


def _identity_law(op, e: float, probes, tol: float, name: str) -> PropertyReport:
    for t in probes:
        for lhs in (op(e, t), op(t, e)):
            if abs(lhs - t) > tol:
                return PropertyReport.failed(
                    name,
                    len(probes),
                    tol,
                    {"identity": e, "x": t, "values": [op(e, t), op(t, e)]},
                )
    return PropertyReport.passed(name, len(probes), tol)


def _combine(name: str, parts: list[PropertyReport], extra: dict | None = None) -> PropertyReport:
    failed = [p for p in parts if not p.holds]
    total = sum(p.samples for p in parts)
    tol = max(p.tolerance for p in parts)
    if failed:
        w = {"law": failed[0].name, **(failed[0].witness or {})}
        return PropertyReport.failed(name, total, tol, w)
    rep = PropertyReport.passed(name, total, tol)
    if extra:
        rep = rep.with_notes(*(f"{k}={v!r}" for k, v in extra.items()))
    return rep


def _common_laws(op, sampler: Sampler) -> list[PropertyReport]:
    A = _binary(op)
    s = sampler.replace(domain=(0.0, 1.0), n=2)
    return [
        check_symmetry(A, s),
        check_monotonicity(A, "nondecreasing", s),
        check_associativity(A, s),
    ]


def is_tnorm(op: Callable[[float, float], float], sampler: Sampler | None = None) -> PropertyReport:
    sampler = sampler or Sampler()
    probes = _probe_points(sampler)
    parts = _common_laws(op, sampler) + [_identity_law(op, 1.0, probes, sampler.tol("idempotent"), "identity")]
    return _combine("t-norm", parts)


def is_tconorm(op: Callable[[float, float], float], sampler: Sampler | None = None) -> PropertyReport:
    sampler = sampler or Sampler()
    probes = _probe_points(sampler)
    parts = _common_laws(op, sampler) + [_identity_law(op, 0.0, probes, sampler.tol("idempotent"), "identity")]
    return _combine("t-conorm", parts)


def find_identity(op: Callable[[float, float], float], probes: Sequence[float]) -> tuple[float, float]:
    """Best identity candidate on [0, 1] and its max residual.

    Grid search followed by interval halving on the max-residual.
    """
    grid = np.linspace(0.0, 1.0, IDENTITY_GRID)
    res = [_identity_residual(op, float(e), probes) for e in grid]
    k = int(np.argmin(res))
    best, best_res = float(grid[k]), res[k]
    if best_res == 0.0:
        return best, 0.0
    step = 1.0 / (IDENTITY_GRID - 1)
    lo, hi = max(best - step, 0.0), min(best + step, 1.0)
    for _ in range(IDENTITY_REFINE):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if _identity_residual(op, m1, probes) <= _identity_residual(op, m2, probes):
            hi = m2
        else:
            lo = m1
    mid = 0.5 * (lo + hi)
    r = _identity_residual(op, mid, probes)
    if r < best_res:
        best, best_res = mid, r
    return best, best_res


def _probe_points(sampler: Sampler) -> list[float]:
    rng = sampler.rng("identity")
    count = max(sampler.samples // 10, 16)
    return [0.0, 0.5, 1.0] + [float(v) for v in rng.random(count)]


def is_uninorm(op: Callable[[float, float], float], sampler: Sampler | None = None) -> PropertyReport:
    sampler = sampler or Sampler()
    probes = _probe_points(sampler)
    e, res = find_identity(op, probes)
    tol = sampler.tol("idempotent")
    parts = _common_laws(op, sampler) + [_identity_law(op, e, probes, tol, "identity")]
    return _combine("uninorm", parts, {"identity": e, "residual": res})
