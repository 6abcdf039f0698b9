"""Seeded sampling checkers for aggregation properties.

Every checker takes an aggregator ``A`` (a callable on a sequence of floats)
and a :class:`Sampler`, and returns a :class:`PropertyReport`.  A passing
report only ever says ``holds-on-samples``: nothing here is a proof.

Each law is a pair (case generator, violation predicate).  A failing report
carries the offending case, and :func:`verify_witness` re-runs the predicate
on it.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import math
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Sequence

import numpy as np

from aggkit.errors import AggregationError, SpecError

Aggregator = Callable[[Sequence[float]], float]

HOLDS = "holds-on-samples"
FAILS = "fails"

DEFAULT_TOLERANCES = {
    "symmetry": 1e-9,
    "nondecreasing": 1e-9,
    "strict": 1e-9,
    "unanimous": 1e-9,
    "idempotent": 1e-9,
    "weak-idempotent": 1e-9,
    "conjunctive": 1e-9,
    "disjunctive": 1e-9,
    "internal": 1e-9,
    "associative": 1e-9,
    "seq-associative": 1e-9,
    "decomposable": 1e-9,
    "bisymmetric": 1e-9,
    "comonotonic-additive": 1e-12,
    "comonotonic-minitive": 0.0,
    "comonotonic-maxitive": 0.0,
    "weakly-minitive": 0.0,
    "weakly-maxitive": 0.0,
    "non-compensative": 0.0,
    "additive": 1e-12,
    "meaningful-io-ratio": 1e-9,
    "meaningful-in-ratio": 1e-9,
    "meaningful-io-interval": 1e-9,
    "meaningful-in-interval": 1e-9,
    "meaningful-io-ordinal": 1e-9,
    "meaningful-in-ordinal": 1e-9,
    "continuity-smoke": 1e-9,
}


@dataclass(frozen=True)
class Sampler:
    """Sampling configuration; identical configs give identical streams.

    Every law draws from its own generator seeded by ``(seed, law name)``,
    so a report does not depend on which other checks ran before it.
    """

    seed: int = 0
    domain: tuple[float, float] = (0.0, 1.0)
    n: int = 3
    samples: int = 1000
    n_max: int = 5
    tolerances: dict[str, float] = field(default_factory=dict)
    corners: bool = True
    lipschitz: float = 1e3

    def __post_init__(self):
        lo, hi = (float(v) for v in self.domain)
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise SpecError(f"sampling domain must be a finite interval, got {self.domain}")
        object.__setattr__(self, "domain", (lo, hi))
        if self.n < 1 or self.n_max < 1 or self.samples < 1:
            raise SpecError("n, n_max and samples must be positive")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise SpecError(f"tolerance overrides for unknown laws: {sorted(unknown)}")

    def rng(self, law: str) -> np.random.Generator:
        return np.random.default_rng([self.seed % 2**64, zlib.crc32(law.encode())])

    def tol(self, law: str) -> float:
        return self.tolerances.get(law, DEFAULT_TOLERANCES.get(law, 1e-9))

    def replace(self, **changes) -> Sampler:
        return dataclasses.replace(self, **changes)

    def uniform(self, rng: np.random.Generator, size, lo=None, hi=None) -> list:
        lo = self.domain[0] if lo is None else lo
        hi = self.domain[1] if hi is None else hi
        return rng.uniform(lo, hi, size).tolist()

    def vectors(self, rng: np.random.Generator, n: int, count: int, corners: bool | None = None):
        """Hypercube vertices first (when few enough), then uniform draws."""
        out: list[list[float]] = []
        use_corners = self.corners if corners is None else corners
        if use_corners and 2**n <= count // 2:
            out.extend(list(c) for c in itertools.product(self.domain, repeat=n))
        while len(out) < count:
            out.append(self.uniform(rng, n))
        return out


@dataclass(frozen=True)
class PropertyReport:
    name: str
    verdict: str
    samples: int
    tolerance: float
    witness: dict[str, Any] | None = None
    skipped: int = 0
    notes: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @classmethod
    def passed(cls, name, samples, tolerance, skipped=0, notes=()):
        return cls(name, HOLDS, samples, tolerance, None, skipped, tuple(notes))

    @classmethod
    def failed(cls, name, samples, tolerance, witness, skipped=0, notes=()):
        return cls(name, FAILS, samples, tolerance, witness, skipped, tuple(notes))

    def with_notes(self, *notes: str) -> PropertyReport:
        return dataclasses.replace(self, notes=self.notes + tuple(notes))

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.name,
            "verdict": self.verdict,
            "samples": self.samples,
            "skipped": self.skipped,
            "tolerance": self.tolerance,
            "witness": self.witness,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        line = f"{self.name}: {self.verdict} ({self.samples} samples"
        if self.skipped:
            line += f", {self.skipped} skipped"
        line += f", tol={self.tolerance!r})"
        if self.witness is not None:
            line += " witness=" + json.dumps(self.witness, sort_keys=True)
        for note in self.notes:
            line += f" [{note}]"
        return line


def close(a: float, b: float, tol: float) -> bool:
    """Equality up to ``tol`` relative to max(1, |a|, |b|); ``tol=0`` is exact."""
    if a == b:
        return True
    if tol == 0 or not (math.isfinite(a) and math.isfinite(b)):
        return False
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


# -- piecewise-linear ordinal transforms ---------------------------------------


@dataclass(frozen=True)
class PiecewiseLinear:
    """Strictly increasing piecewise-linear bijection of the reals.

    Linear between knots, slope-1 continuation outside them.
    """

    knots: tuple[float, ...]
    values: tuple[float, ...]

    def __call__(self, x: float) -> float:
        k, v = self.knots, self.values
        if x <= k[0]:
            return v[0] + (x - k[0])
        if x >= k[-1]:
            return v[-1] + (x - k[-1])
        return float(np.interp(x, k, v))

    def to_dict(self) -> dict[str, list[float]]:
        return {"knots": list(self.knots), "values": list(self.values)}

    @classmethod
    def from_dict(cls, d) -> PiecewiseLinear:
        return cls(tuple(d["knots"]), tuple(d["values"]))

    @classmethod
    def random(cls, rng: np.random.Generator, domain: tuple[float, float]) -> PiecewiseLinear:
        """5-9 interior breakpoints, slopes log-uniform in [1e-2, 1e2],
        rescaled so that the domain is mapped onto itself."""
        lo, hi = domain
        inner = np.sort(rng.uniform(lo, hi, int(rng.integers(5, 10))))
        knots = np.concatenate(([lo], inner, [hi]))
        slopes = 10.0 ** rng.uniform(-2.0, 2.0, len(knots) - 1)
        rise = np.concatenate(([0.0], np.cumsum(slopes * np.diff(knots))))
        values = lo + rise * (hi - lo) / rise[-1]
        values[0], values[-1] = lo, hi
        keep = np.concatenate(([True], np.diff(knots) > 0))
        return cls(tuple(knots[keep].tolist()), tuple(values[keep].tolist()))


# -- law machinery ------------------------------------------------------------


@dataclass(frozen=True)
class Law:
    name: str
    cases: Callable[[Sampler, np.random.Generator], Iterator[dict]]
    violation: Callable[[Aggregator, dict, float], dict | None]


LAWS: dict[str, Law] = {}


def _law(name):
    def register(pair):
        cases, violation = pair
        LAWS[name] = Law(name, cases, violation)
        return pair

    return register


def run_law(name: str, A: Aggregator, sampler: Sampler | None = None) -> PropertyReport:
    sampler = sampler or Sampler()
    law = LAWS[name]
    tol = sampler.tol(name)
    rng = sampler.rng(name)
    used = skipped = 0
    notes: list[str] = []
    for case in law.cases(sampler, rng):
        try:
            bad = law.violation(A, case, tol)
        except (AggregationError, ZeroDivisionError, OverflowError):
            skipped += 1
            continue
        used += 1
        if bad is not None:
            if "note" in bad:
                notes.append(bad.pop("note"))
                if not bad:
                    continue
            witness = {"case": case, "observed": bad}
            return PropertyReport.failed(name, used, tol, witness, skipped)
    return PropertyReport.passed(name, used, tol, skipped, sorted(set(notes)))


def verify_witness(A: Aggregator, report: PropertyReport) -> bool:
    """True when the report's witness still violates its law."""
    if report.witness is None:
        return False
    bad = LAWS[report.name].violation(A, report.witness["case"], report.tolerance)
    return bad is not None and set(bad) != {"note"}


# -- elementary properties -----------------------------------------------------


def _sym_cases(s: Sampler, rng):
    n = s.n
    all_perms = list(itertools.permutations(range(n))) if n <= 8 else None
    for idx, x in enumerate(s.vectors(rng, n, s.samples)):
        if all_perms is not None:
            perm = all_perms[idx % len(all_perms)]
        else:
            perm = tuple(rng.permutation(n).tolist())
        yield {"x": x, "perm": list(perm)}
        if n > 1:
            j = int(rng.integers(0, n - 1))
            swap = list(range(n))
            swap[j], swap[j + 1] = swap[j + 1], swap[j]
            yield {"x": x, "perm": swap}


def _sym_violation(A, case, tol):
    x = case["x"]
    px = [x[i] for i in case["perm"]]
    a, b = A(x), A(px)
    return None if close(a, b, tol) else {"A(x)": a, "A(perm x)": b, "perm_x": px}


_law("symmetry")((_sym_cases, _sym_violation))


def _mono_cases(grade):
    def cases(s: Sampler, rng):
        n = s.n
        for _ in range(s.samples):
            x = s.uniform(rng, n)
            y = list(x)
            if grade == "strict":
                idx = [int(rng.integers(0, n))]
            elif grade == "unanimous":
                idx = list(range(n))
            else:
                mask = rng.random(n) < 0.5
                mask[int(rng.integers(0, n))] = True
                idx = [i for i in range(n) if mask[i]]
            for i in idx:
                u, v = sorted(s.uniform(rng, 2))
                if u == v:
                    v = s.domain[1]
                x[i], y[i] = u, v
            yield {"x": x, "x_prime": y}

    return cases


def _mono_violation(strict):
    def violation(A, case, tol):
        a, b = A(case["x"]), A(case["x_prime"])
        if b < a and not close(a, b, tol):
            return {"A(x)": a, "A(x_prime)": b, "reason": "decrease"}
        if strict and not b > a:
            return {"A(x)": a, "A(x_prime)": b, "reason": "no strict increase"}
        return None

    return violation


for _grade, _strict in (("nondecreasing", False), ("strict", True), ("unanimous", True)):
    _law(_grade)((_mono_cases(_grade), _mono_violation(_strict)))


def _idem_cases(weak):
    def cases(s: Sampler, rng):
        lo, hi = s.domain
        pts = [lo, hi] if weak else [lo, hi, 0.5 * (lo + hi)] + s.uniform(rng, s.samples - 3)
        for c in pts:
            yield {"c": c, "n": s.n}

    return cases


def _idem_violation(A, case, tol):
    c = case["c"]
    v = A([c] * case["n"])
    return None if close(v, c, tol) else {"A(c,...,c)": v}


_law("idempotent")((_idem_cases(False), _idem_violation))
_law("weak-idempotent")((_idem_cases(True), _idem_violation))


def _vec_cases(s: Sampler, rng):
    for x in s.vectors(rng, s.n, s.samples):
        yield {"x": x}


def _bound_violation(kind):
    def violation(A, case, tol):
        x = case["x"]
        v = A(x)
        lo, hi = min(x), max(x)
        below = v < lo and not close(v, lo, tol)
        above = v > hi and not close(v, hi, tol)
        bad = {
            "conjunctive": above or (v > lo and not close(v, lo, tol)),
            "disjunctive": below or (v < hi and not close(v, hi, tol)),
            "internal": below or above,
        }[kind]
        return {"A(x)": v, "min": lo, "max": hi} if bad else None

    return violation


for _kind in ("conjunctive", "disjunctive", "internal"):
    _law(_kind)((_vec_cases, _bound_violation(_kind)))


def _cont_cases(s: Sampler, rng):
    delta = 1e-6 * (s.domain[1] - s.domain[0])
    for x in s.vectors(rng, s.n, s.samples, corners=False):
        i = int(rng.integers(0, s.n))
        step = delta if x[i] + delta <= s.domain[1] else -delta
        yield {"x": x, "i": i, "delta": step, "L": s.lipschitz}


def _cont_violation(A, case, tol):
    x = case["x"]
    y = list(x)
    y[case["i"]] += case["delta"]
    a, b = A(x), A(y)
    bound = case["L"] * abs(case["delta"])
    if abs(b - a) > bound + tol:
        return {"A(x)": a, "A(x+delta)": b, "bound": bound}
    return None


_law("continuity-smoke")((_cont_cases, _cont_violation))


# -- meaningfulness -------------------------------------------------------------


def _log_uniform(rng, lo=1e-1, hi=1e1) -> float:
    return float(10.0 ** rng.uniform(math.log10(lo), math.log10(hi)))


def _io_ratio_cases(s: Sampler, rng):
    for x in s.vectors(rng, s.n, s.samples, corners=False):
        yield {"x": x, "r": _log_uniform(rng)}


def _io_ratio_violation(A, case, tol):
    x, r = case["x"], case["r"]
    lhs, rhs = A([r * v for v in x]), r * A(x)
    return None if close(lhs, rhs, tol) else {"A(rx)": lhs, "r*A(x)": rhs}


def _io_interval_cases(s: Sampler, rng):
    width = s.domain[1] - s.domain[0]
    for x in s.vectors(rng, s.n, s.samples, corners=False):
        yield {"x": x, "r": _log_uniform(rng), "s": float(rng.uniform(-width, width))}


def _io_interval_violation(A, case, tol):
    x, r, sh = case["x"], case["r"], case["s"]
    lhs, rhs = A([r * v + sh for v in x]), r * A(x) + sh
    return None if close(lhs, rhs, tol) else {"A(rx+s)": lhs, "r*A(x)+s": rhs}


def _io_ordinal_cases(s: Sampler, rng):
    for x in s.vectors(rng, s.n, s.samples, corners=False):
        yield {"x": x, "phi": PiecewiseLinear.random(rng, s.domain).to_dict()}


def _io_ordinal_violation(A, case, tol):
    x = case["x"]
    phi = PiecewiseLinear.from_dict(case["phi"])
    lhs, rhs = A([phi(v) for v in x]), phi(A(x))
    return None if close(lhs, rhs, tol) else {"A(phi x)": lhs, "phi(A(x))": rhs}


GROUP = 10


def _grouped(s: Sampler, rng, extra):
    for _ in range(max(s.samples // GROUP, 1)):
        xs = [s.uniform(rng, s.n) for _ in range(GROUP)]
        yield {"xs": xs, **extra(rng)}


def _in_ratio_cases(s: Sampler, rng):
    return _grouped(s, rng, lambda g: {"r": _log_uniform(g)})


def _in_ratio_violation(A, case, tol):
    r = case["r"]
    ratios = []
    for x in case["xs"]:
        base = A(x)
        if base == 0:
            continue  # ratio undefined; such samples carry no information
        ratios.append(A([r * v for v in x]) / base)
    if not ratios:
        return {"note": "all base values zero"}
    if ratios[0] <= 0:
        return {"ratios": ratios, "reason": "nonpositive ratio"}
    for q in ratios[1:]:
        if not close(q, ratios[0], tol):
            return {"ratios": ratios, "reason": "ratio depends on x"}
    return None


def _in_interval_cases(s: Sampler, rng):
    width = s.domain[1] - s.domain[0]
    return _grouped(
        s, rng, lambda g: {"r": _log_uniform(g), "s": float(g.uniform(-width, width))}
    )


def _in_interval_violation(A, case, tol):
    r, sh = case["r"], case["s"]
    a = [A(x) for x in case["xs"]]
    b = [A([r * v + sh for v in x]) for x in case["xs"]]
    i_lo, i_hi = int(np.argmin(a)), int(np.argmax(a))
    if close(a[i_lo], a[i_hi], tol):
        if all(close(v, b[0], tol) for v in b):
            return {"note": "constant outputs accepted via constant branch"}
        return {"A(x)": a, "A(rx+s)": b, "reason": "constant inputs map to varying outputs"}
    R = (b[i_hi] - b[i_lo]) / (a[i_hi] - a[i_lo])
    S = b[i_lo] - R * a[i_lo]
    if not R > 0:
        return {"R": R, "S": S, "reason": "non-increasing affine link"}
    for ai, bi in zip(a, b):
        if not close(bi, R * ai + S, tol):
            return {"A(x)": a, "A(rx+s)": b, "R": R, "S": S, "reason": "not affine"}
    return None


def _cmp(a, b, tol):
    if close(a, b, tol):
        return 0
    return -1 if a < b else 1


def _in_ordinal_cases(s: Sampler, rng):
    for _ in range(s.samples):
        x = s.uniform(rng, s.n)
        # half the pairs share a value pattern so that ties occur
        y = list(rng.permutation(x).tolist()) if rng.random() < 0.5 else s.uniform(rng, s.n)
        yield {"x": x, "y": y, "phi": PiecewiseLinear.random(rng, s.domain).to_dict()}


def _in_ordinal_violation(A, case, tol):
    phi = PiecewiseLinear.from_dict(case["phi"])
    x, y = case["x"], case["y"]
    before = _cmp(A(x), A(y), tol)
    after = _cmp(A([phi(v) for v in x]), A([phi(v) for v in y]), tol)
    if before != after:
        return {"order_before": before, "order_after": after}
    return None


_law("meaningful-io-ratio")((_io_ratio_cases, _io_ratio_violation))
_law("meaningful-in-ratio")((_in_ratio_cases, _in_ratio_violation))
_law("meaningful-io-interval")((_io_interval_cases, _io_interval_violation))
_law("meaningful-in-interval")((_in_interval_cases, _in_interval_violation))
_law("meaningful-io-ordinal")((_io_ordinal_cases, _io_ordinal_violation))
_law("meaningful-in-ordinal")((_in_ordinal_cases, _in_ordinal_violation))


# -- algebraic laws -------------------------------------------------------------


def _assoc_cases(s: Sampler, rng):
    for t in s.vectors(rng, 3, s.samples):
        yield {"x": t}


def _assoc_violation(A, case, tol):
    x, y, z = case["x"]
    left = A([A([x, y]), z])
    right = A([x, A([y, z])])
    return None if close(left, right, tol) else {"A(A(x,y),z)": left, "A(x,A(y,z))": right}


_law("associative")((_assoc_cases, _assoc_violation))


def _split_cases(s: Sampler, rng):
    lo, hi = s.domain
    for c in (lo, hi, 0.5 * (lo + hi)):
        yield {"x": [c], "k": 0}
    combos = [(n, k) for n in range(2, s.n_max + 1) for k in range(1, n)]
    per = max(s.samples // max(len(combos), 1), 20)
    for n, k in combos:
        for x in s.vectors(rng, n, per):
            yield {"x": x, "k": k}


def _seq_assoc_violation(A, case, tol):
    x, k = case["x"], case["k"]
    whole = A(x)
    if k == 0:
        return None if close(whole, x[0], tol) else {"A(x)": whole, "reason": "A(x) != x for n=1"}
    parts = A([A(x[:k]), A(x[k:])])
    return None if close(whole, parts, tol) else {"A(x)": whole, "A(A(head),A(tail))": parts}


def _decomp_violation(A, case, tol):
    x, k = case["x"], case["k"]
    whole = A(x)
    if k == 0:
        return None if close(whole, x[0], tol) else {"A(x)": whole, "reason": "A(x) != x for n=1"}
    n = len(x)
    parts = A([A(x[:k])] * k + [A(x[k:])] * (n - k))
    return None if close(whole, parts, tol) else {"A(x)": whole, "A(k.A(head),(n-k).A(tail))": parts}


_law("seq-associative")((_split_cases, _seq_assoc_violation))
_law("decomposable")((_split_cases, _decomp_violation))


def _bisym_cases(s: Sampler, rng):
    top = min(4, s.n_max)
    shapes = [(p, m) for p in range(1, top + 1) for m in range(1, top + 1) if p * m > 1]
    per = max(s.samples // len(shapes), 20) if shapes else 0
    lo, hi = s.domain
    for c in (lo, hi):
        yield {"matrix": [[c]]}
    for p, m in shapes:
        for _ in range(per):
            yield {"matrix": [s.uniform(rng, m) for _ in range(p)]}


def _bisym_violation(A, case, tol):
    mat = case["matrix"]
    if len(mat) == 1 and len(mat[0]) == 1:
        v = A(mat[0])
        return None if close(v, mat[0][0], tol) else {"A(x)": v, "reason": "A(x) != x for n=1"}
    rows = A([A(row) for row in mat])
    cols = A([A(list(col)) for col in zip(*mat)])
    return None if close(rows, cols, tol) else {"rows_first": rows, "columns_first": cols}


_law("bisymmetric")((_bisym_cases, _bisym_violation))


def _comonotone_cases(s: Sampler, rng, half=True):
    lo, hi = s.domain
    a, b = (lo / 2, hi / 2) if half else (lo, hi)
    n = s.n
    for _ in range(s.samples):
        perm = rng.permutation(n)
        u = sorted(s.uniform(rng, n, a, b))
        v = sorted(s.uniform(rng, n, a, b))
        x, y = [0.0] * n, [0.0] * n
        for j, i in enumerate(perm):
            x[i], y[i] = u[j], v[j]
        yield {"x": x, "y": y}


def _pair_violation(combine, merge, label):
    def violation(A, case, tol):
        x, y = case["x"], case["y"]
        lhs = A([combine(p, q) for p, q in zip(x, y)])
        rhs = merge(A(x), A(y))
        return None if close(lhs, rhs, tol) else {f"A(x {label} y)": lhs, f"A(x) {label} A(y)": rhs}

    return violation


_law("comonotonic-additive")(
    (_comonotone_cases, _pair_violation(lambda p, q: p + q, lambda a, b: a + b, "+"))
)
_law("comonotonic-minitive")(
    (lambda s, r: _comonotone_cases(s, r, False), _pair_violation(min, min, "min"))
)
_law("comonotonic-maxitive")(
    (lambda s, r: _comonotone_cases(s, r, False), _pair_violation(max, max, "max"))
)


def _free_pair_cases(s: Sampler, rng):
    lo, hi = s.domain
    for _ in range(s.samples):
        yield {"x": s.uniform(rng, s.n, lo / 2, hi / 2), "y": s.uniform(rng, s.n, lo / 2, hi / 2)}


_law("additive")((_free_pair_cases, _pair_violation(lambda p, q: p + q, lambda a, b: a + b, "+")))


def _weak_cases(s: Sampler, rng):
    lo, hi = s.domain
    rs = [lo, hi, 0.5 * (lo + hi)]
    for x in s.vectors(rng, s.n, s.samples):
        rs.append(float(rng.uniform(lo, hi)))
        yield {"x": x, "r": rs[-1] if len(rs) > 3 else lo}
    for r in rs[:3]:
        yield {"x": s.uniform(rng, s.n), "r": r}


def _weak_violation(op):
    def violation(A, case, tol):
        x, r = case["x"], case["r"]
        lhs = A([op(v, r) for v in x])
        rhs = op(A(x), r)
        return None if close(lhs, rhs, tol) else {"lhs": lhs, "rhs": rhs}

    return violation


_law("weakly-minitive")((_weak_cases, _weak_violation(min)))
_law("weakly-maxitive")((_weak_cases, _weak_violation(max)))


def _noncomp_cases(s: Sampler, rng):
    n = s.n
    grid = [i / 20 for i in range(21)]
    extra = s.uniform(rng, max(s.samples // 2**n - len(grid), 0), 0.0, 1.0)
    for mask in range(1 << n):
        for r in grid + extra:
            yield {"S": [i + 1 for i in range(n) if mask >> i & 1], "n": n, "r": r}


def _noncomp_violation(A, case, tol):
    n, r = case["n"], case["r"]
    inside = [1.0 if i + 1 in case["S"] else 0.0 for i in range(n)]
    base = A(inside)
    low = A([r * v for v in inside])
    high = A([v + r * (1.0 - v) for v in inside])
    for val, label in ((low, "A(r 1_S)"), (high, "A(1_S + r 1_N\\S)")):
        if not (close(val, base, tol) or close(val, r, tol)):
            return {label: val, "A(1_S)": base}
    return None


_law("non-compensative")((_noncomp_cases, _noncomp_violation))


PROPERTIES = tuple(LAWS)


# -- public checker entry points ---------------------------------------------------


def _with_n(sampler: Sampler | None, n: int | None) -> Sampler:
    sampler = sampler or Sampler()
    return sampler if n is None else sampler.replace(n=n)


def check_symmetry(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    return run_law("symmetry", A, _with_n(sampler, n))


def check_monotonicity(
    A: Aggregator, grade: str = "nondecreasing", sampler: Sampler | None = None, n: int | None = None
) -> PropertyReport:
    if grade not in ("nondecreasing", "strict", "unanimous"):
        raise SpecError(f"unknown monotonicity grade {grade!r}")
    s = _with_n(sampler, n)
    if grade == "nondecreasing":
        return run_law(grade, A, s)
    # the increasing grades include nondecreasing monotonicity
    base = run_law("nondecreasing", A, s)
    if not base.holds:
        return dataclasses.replace(base, name=grade)
    rep = run_law(grade, A, s)
    return dataclasses.replace(rep, samples=rep.samples + base.samples, skipped=rep.skipped + base.skipped)


def check_idempotency(
    A: Aggregator, sampler: Sampler | None = None, weak: bool = False, n: int | None = None
) -> PropertyReport:
    return run_law("weak-idempotent" if weak else "idempotent", A, _with_n(sampler, n))


def check_conjunctive(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    return run_law("conjunctive", A, _with_n(sampler, n))


def check_disjunctive(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    return run_law("disjunctive", A, _with_n(sampler, n))


def check_internal(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    return run_law("internal", A, _with_n(sampler, n))


SCALES = ("ratio", "interval", "ordinal")


def check_meaningfulness(
    A: Aggregator,
    scale: str,
    sampler: Sampler | None = None,
    io: bool = True,
    n: int | None = None,
) -> PropertyReport:
    """``scale`` is ratio / interval / ordinal, or a full property name such as
    ``meaningful-in-interval``."""
    name = scale if scale.startswith("meaningful-") else f"meaningful-{'io' if io else 'in'}-{scale}"
    if name not in LAWS:
        raise SpecError(f"unknown meaningfulness variant {scale!r}")
    return run_law(name, A, _with_n(sampler, n))


def check_associativity(A: Aggregator, sampler: Sampler | None = None) -> PropertyReport:
    """Two-variable associativity; ``A`` is called on pairs."""
    return run_law("associative", A, sampler or Sampler())


def check_sequence_associativity(
    A: Aggregator, sampler: Sampler | None = None, n_max: int | None = None
) -> PropertyReport:
    s = sampler or Sampler()
    return run_law("seq-associative", A, s if n_max is None else s.replace(n_max=n_max))


def check_decomposability(
    A: Aggregator, sampler: Sampler | None = None, n_max: int | None = None
) -> PropertyReport:
    s = sampler or Sampler()
    return run_law("decomposable", A, s if n_max is None else s.replace(n_max=n_max))


def check_bisymmetry(A: Aggregator, sampler: Sampler | None = None, n_max: int | None = None) -> PropertyReport:
    s = sampler or Sampler()
    return run_law("bisymmetric", A, s if n_max is None else s.replace(n_max=n_max))


def check_comonotonic(
    A: Aggregator, law: str = "additive", sampler: Sampler | None = None, n: int | None = None
) -> PropertyReport:
    if law not in ("additive", "minitive", "maxitive"):
        raise SpecError(f"unknown comonotonic law {law!r}")
    return run_law(f"comonotonic-{law}", A, _with_n(sampler, n))


def check_additivity(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    return run_law("additive", A, _with_n(sampler, n))


def check_non_compensation(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    return run_law("non-compensative", A, _with_n(sampler, n))


def check_weak_min_max_itivity(
    A: Aggregator, sampler: Sampler | None = None, n: int | None = None
) -> tuple[PropertyReport, PropertyReport]:
    s = _with_n(sampler, n)
    return run_law("weakly-minitive", A, s), run_law("weakly-maxitive", A, s)


def check_continuity_smoke(A: Aggregator, sampler: Sampler | None = None, n: int | None = None) -> PropertyReport:
    """Heuristic only: continuity cannot be decided from samples."""
    return run_law("continuity-smoke", A, _with_n(sampler, n)).with_notes("heuristic")


def check(name: str, A: Aggregator, sampler: Sampler | None = None) -> PropertyReport:
    """Run a property by its stable string identifier."""
    if name not in LAWS:
        raise SpecError(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}")
    if name in ("strict", "unanimous"):
        return check_monotonicity(A, name, sampler)
    if name == "continuity-smoke":
        return check_continuity_smoke(A, sampler)
    return run_law(name, A, sampler or Sampler())


def check_suite(names: Sequence[str], A: Aggregator, sampler: Sampler | None = None) -> list[PropertyReport]:
    return [check(name, A, sampler) for name in names]
