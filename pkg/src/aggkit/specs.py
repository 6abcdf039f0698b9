"""AggregatorSpec: JSON descriptions of catalog aggregators.

A spec is an object with a ``kind`` tag, the parameters of that kind and an
optional arity ``n``.  Unknown kinds and unknown keys are rejected.  Building
a spec returns an :class:`Aggregator`, a callable on a sequence of floats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Sequence

from aggkit import assoc, integrals, means
from aggkit.core.generators import GeneratorSpec, identity
from aggkit.core.io import load_measure, measure_from_json
from aggkit.core.measures import BinaryMeasure
from aggkit.core.weights import WeightVector
from aggkit.errors import DimensionMismatch, SpecError


@dataclass(frozen=True)
class Aggregator:
    """A built spec.  ``n`` is None when any arity is accepted."""

    kind: str
    fn: Callable[[Sequence[float]], float]
    n: int | None = None

    def __call__(self, x: Sequence[float]) -> float:
        if self.n is not None and len(x) != self.n:
            raise DimensionMismatch(f"{self.kind} expects {self.n} inputs, got {len(x)}")
        return float(self.fn(list(x)))


def _pair(kind: str, op: Callable[[float, float], float]):
    def fn(x):
        if len(x) != 2:
            raise DimensionMismatch(f"{kind} is a two-variable mean, got {len(x)} inputs")
        return op(x[0], x[1])

    return fn


def _median(x):
    s = sorted(x)
    k = len(s)
    return s[k // 2] if k % 2 else 0.5 * (s[k // 2 - 1] + s[k // 2])


def _ricci(x):
    # x_n + sum_{i<n} (x_n - x_i)
    return len(x) * x[-1] - math.fsum(x[:-1])


def _bounded_sum(x):
    return min(math.fsum(x), 1.0)


# kind -> (required keys, optional keys)
KINDS: dict[str, tuple[set[str], set[str]]] = {
    "arithmetic": (set(), set()),
    "geometric": (set(), set()),
    "harmonic": (set(), set()),
    "quadratic": (set(), set()),
    "root-power": ({"alpha"}, set()),
    "exponential": ({"alpha"}, set()),
    "quasi-arithmetic": ({"generator"}, set()),
    "quasi-linear": ({"generator", "weights"}, set()),
    "quasi-linear-function": ({"generator", "p"}, {"q"}),
    "lagrangian": ({"generator"}, set()),
    "logarithmic": (set(), set()),
    "cauchy": ({"f", "g"}, set()),
    "aczelian": ({"generator"}, set()),
    "archimedean": ({"orientation", "generator"}, {"interval"}),
    "normalized-form": ({"form"}, {"generator", "interval"}),
    "ordinal-sum": ({"orientation"}, {"interval", "components"}),
    "alpha-beta": ({"alpha", "beta"}, set()),
    "median-assoc": ({"alpha"}, set()),
    "czogala-drewniak": ({"generator"}, {"tie"}),
    "choquet": (set(), {"measure", "measure_file"}),
    "sugeno": (set(), {"measure", "measure_file"}),
    "owa": ({"weights"}, set()),
    "wam": ({"weights"}, set()),
    "geometric-wam": ({"theta"}, set()),
    "pmax": ({"weights"}, set()),
    "pmin": ({"weights"}, set()),
    "opmax": ({"weights"}, set()),
    "opmin": ({"weights"}, set()),
    "lattice-poly": ({"n", "winning"}, set()),
    "order-statistic": ({"k"}, set()),
    "min": (set(), set()),
    "max": (set(), set()),
    "median": (set(), set()),
    "projection": ({"k"}, set()),
    "bounded-sum": (set(), set()),
    "product": (set(), set()),
    "ricci": (set(), set()),
}


def _num(d: dict, key: str) -> float:
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SpecError(f"'{key}' must be a number, got {v!r}")
    return float(v)


def _int(d: dict, key: str) -> int:
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"'{key}' must be an integer, got {v!r}")
    return v


def _numbers(d: dict, key: str) -> tuple[float, ...]:
    v = d[key]
    if not isinstance(v, list) or not v:
        raise SpecError(f"'{key}' must be a nonempty list of numbers")
    return tuple(_num({key: e}, key) for e in v)


def _interval(d: dict) -> tuple[float, float]:
    iv = d.get("interval", [0.0, 1.0])
    if not isinstance(iv, list) or len(iv) != 2:
        raise SpecError("'interval' must be a two-element list")
    return _num({"a": iv[0]}, "a"), _num({"b": iv[1]}, "b")


def _gen(d: dict, key: str) -> GeneratorSpec:
    return GeneratorSpec.from_dict(d[key])


def _components(d: dict, orientation: str) -> tuple[assoc.Component, ...]:
    out = []
    for c in d.get("components", []):
        if not isinstance(c, dict):
            raise SpecError("ordinal-sum components must be objects")
        extra = set(c) - {"interval", "generator", "form"}
        if extra:
            raise SpecError(f"unknown keys in component: {sorted(extra)}")
        lo, hi = _interval(c)
        if ("generator" in c) == ("form" in c):
            raise SpecError("a component needs exactly one of 'generator' or 'form'")
        if "form" in c:
            orient, f = assoc.form_generator(c["form"])
        else:
            orient, f = orientation, _gen(c, "generator")
        if orient != orientation:
            raise SpecError(f"component form {c.get('form')!r} has orientation {orient}")
        out.append(assoc.Component(lo, hi, assoc.ArchimedeanSpec(orient, (0.0, 1.0), f)))
    return tuple(out)


def _measure(d: dict, base: Path | None):
    if ("measure" in d) == ("measure_file" in d):
        raise SpecError("give exactly one of 'measure' or 'measure_file'")
    if "measure" in d:
        return measure_from_json(d["measure"])
    path = Path(d["measure_file"])
    if base is not None and not path.is_absolute():
        path = base / path
    return load_measure(path)


def build(spec: dict[str, Any], base_dir: str | Path | None = None) -> Aggregator:
    """Construct the aggregator described by ``spec``."""
    if not isinstance(spec, dict):
        raise SpecError("aggregator spec must be a JSON object")
    kind = spec.get("kind")
    if kind not in KINDS:
        raise SpecError(f"unknown aggregator kind {kind!r}")
    required, optional = KINDS[kind]
    allowed = required | optional | {"kind", "n"}
    extra = set(spec) - allowed
    if extra:
        raise SpecError(f"unknown keys for {kind!r}: {sorted(extra)}")
    missing = required - set(spec)
    if missing:
        raise SpecError(f"{kind!r} is missing keys {sorted(missing)}")
    n = _int(spec, "n") if "n" in spec else None
    base = Path(base_dir) if base_dir is not None else None
    fn, fixed = _make(kind, spec, base)
    if fixed is not None:
        if n is not None and n != fixed:
            raise SpecError(f"'n'={n} conflicts with the {fixed} inputs implied by the parameters")
        n = fixed
    return Aggregator(kind, fn, n)


def _make(kind: str, d: dict, base: Path | None):
    """Return (callable, arity implied by the parameters or None)."""
    simple = {
        "arithmetic": means.arithmetic_mean,
        "geometric": means.geometric_mean,
        "harmonic": means.harmonic_mean,
        "quadratic": means.quadratic_mean,
        "min": min,
        "max": max,
        "median": _median,
        "bounded-sum": _bounded_sum,
        "product": math.prod,
        "ricci": _ricci,
    }
    if kind in simple:
        return simple[kind], None
    if kind == "root-power":
        a = _num(d, "alpha")
        return (lambda x: means.root_mean_power(x, a)), None
    if kind == "exponential":
        a = _num(d, "alpha")
        means.MeanSpec("exponential", alpha=a)
        return (lambda x: means.exponential_mean(x, a)), None
    if kind == "quasi-arithmetic":
        f = _gen(d, "generator")
        return (lambda x: means.quasi_arithmetic_mean(x, f)), None
    if kind == "quasi-linear":
        f, w = _gen(d, "generator"), WeightVector(_numbers(d, "weights"))
        return (lambda x: means.quasi_linear_mean(x, w, f)), len(w)
    if kind == "quasi-linear-function":
        f, p = _gen(d, "generator"), _numbers(d, "p")
        q = _num(d, "q") if "q" in d else 0.0
        means.MeanSpec("quasi-linear-function", generator=f, p=p, q=q)
        return (lambda x: means.quasi_linear_function(x, p, q, f)), len(p)
    if kind == "lagrangian":
        f = _gen(d, "generator")
        return _pair(kind, lambda a, b: means.lagrangian_mean(a, b, f)), 2
    if kind == "logarithmic":
        return _pair(kind, means.logarithmic_mean), 2
    if kind == "cauchy":
        f, g = _gen(d, "f"), _gen(d, "g")
        return _pair(kind, lambda a, b: means.cauchy_mean(a, b, f, g)), 2
    if kind == "aczelian":
        f = _gen(d, "generator")
        return (lambda x: assoc.aczelian_n(x, f)), None
    if kind == "archimedean":
        spec = assoc.ArchimedeanSpec(d["orientation"], _interval(d), _gen(d, "generator"))
        return (lambda x: assoc.archimedean_n(x, spec)), None
    if kind == "normalized-form":
        form = d["form"]
        if form not in assoc.FORMS:
            raise SpecError(f"form must be one of {assoc.FORMS}")
        g = _gen(d, "generator") if "generator" in d else identity()
        iv = _interval(d)
        assoc.normalized_form_n([iv[0]], g, form, iv)
        return (lambda x: assoc.normalized_form_n(x, g, form, iv)), None
    if kind == "ordinal-sum":
        orient = d["orientation"]
        if orient not in assoc.ORIENTATIONS:
            raise SpecError(f"orientation must be one of {assoc.ORIENTATIONS}")
        spec = assoc.OrdinalSumSpec(orient, _interval(d), _components(d, orient))
        return (lambda x: assoc.ordinal_sum_n(x, spec)), None
    if kind == "alpha-beta":
        spec = assoc.IdempotentAssocSpec(_num(d, "alpha"), _num(d, "beta"))
        return (lambda x: assoc.alpha_beta_n(x, spec)), None
    if kind == "median-assoc":
        a = _num(d, "alpha")
        return (lambda x: assoc.median_assoc_n(x, a)), None
    if kind == "czogala-drewniak":
        g = _gen(d, "generator")
        if g.increasing:
            raise SpecError("czogala-drewniak needs a decreasing generator")
        tie = d.get("tie", "take-min")
        if tie not in ("take-min", "take-max"):
            raise SpecError("tie must be 'take-min' or 'take-max'")

        def cd(x):
            out = float(x[0])
            for v in x[1:]:
                out = assoc.czogala_drewniak(out, v, g, tie)
            return out

        return cd, None
    if kind in ("choquet", "sugeno"):
        mu = _measure(d, base)
        op = integrals.choquet if kind == "choquet" else integrals.sugeno
        return (lambda x: op(x, mu)), mu.n
    if kind in ("owa", "wam"):
        w = WeightVector(_numbers(d, "weights"), "sum-one")
        op = integrals.owa if kind == "owa" else integrals.wam
        return (lambda x: op(x, w)), len(w)
    if kind == "geometric-wam":
        theta = _num(d, "theta")
        integrals.geometric_weights(1, theta)
        return (lambda x: integrals.wam(x, integrals.geometric_weights(len(x), theta))), None
    if kind in ("pmax", "opmax"):
        w = WeightVector(_numbers(d, "weights"), "max-one")
        op = integrals.pmax if kind == "pmax" else integrals.opmax
        return (lambda x: op(x, w)), len(w)
    if kind in ("pmin", "opmin"):
        w = WeightVector(_numbers(d, "weights"), "min-zero")
        op = integrals.pmin if kind == "pmin" else integrals.opmin
        return (lambda x: op(x, w)), len(w)
    if kind == "lattice-poly":
        n = _int(d, "n")
        sets = d["winning"]
        if not isinstance(sets, list) or not sets:
            raise SpecError("'winning' must be a nonempty list of index lists")
        for s in sets:
            if not isinstance(s, list) or not all(isinstance(i, int) and 1 <= i <= n for i in s):
                raise SpecError(f"bad winning set {s!r} for n={n}")
        gamma = BinaryMeasure.from_generators(n, [s for s in sets])
        return (lambda x: integrals.lattice_polynomial(x, gamma)), n
    if kind == "order-statistic":
        k = _int(d, "k")
        if k < 1:
            raise SpecError("k must be at least 1")
        return (lambda x: integrals.order_statistic(x, k)), None
    if kind == "projection":
        k = _int(d, "k")
        if k < 1:
            raise SpecError("k must be at least 1")

        def proj(x):
            if k > len(x):
                raise DimensionMismatch(f"projection k={k} needs at least {k} inputs")
            return float(x[k - 1])

        return proj, None
    raise SpecError(f"unhandled kind {kind!r}")  # pragma: no cover


def load(path: str | Path) -> Aggregator:
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc})") from None
    return build(obj, base_dir=path.parent)
