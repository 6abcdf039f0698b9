"""Catalog of strictly monotone scalar generators.

A generator is described by a family tag plus parameters, never by an opaque
callable, so that inverse and derivative are always available in closed form
and the description can be written to JSON.

Evaluation at an open finite endpoint of the domain returns the one-sided
limit (for instance ``log(0) = -inf``).  Archimedean operations rely on this to
represent strict generators with ``f(a) = +inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from aggkit.errors import DomainError, SpecError

INF = math.inf

FAMILIES = (
    "identity",
    "power",
    "log",
    "exp",
    "reciprocal",
    "affine",
    "neg-complement",
    "composed",
)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise SpecError(f"empty interval [{self.lo}, {self.hi}]")
        # infinite endpoints are never attained
        if math.isinf(self.lo):
            object.__setattr__(self, "lo_closed", False)
        if math.isinf(self.hi):
            object.__setattr__(self, "hi_closed", False)

    def contains(self, x: float) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def closure_contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def intersect(self, other: Interval) -> Interval:
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lo_closed, hi_closed)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


REALS = Interval(-INF, INF, False, False)
POSITIVE = Interval(0.0, INF, False, False)
NONNEGATIVE = Interval(0.0, INF, True, False)


def _pow(x: float, alpha: float) -> float:
    if x == 0.0:
        return INF if alpha < 0 else 0.0
    if math.isinf(x):
        return 0.0 if alpha < 0 else INF
    try:
        return x**alpha
    except OverflowError:
        return INF


def _exp(t: float) -> float:
    try:
        return math.exp(t)
    except OverflowError:
        return INF


def _log(y: float) -> float:
    if y == 0.0:
        return -INF
    if math.isinf(y):
        return INF
    return math.log(y)


@dataclass(frozen=True)
class GeneratorSpec:
    """A strictly monotone generator drawn from :data:`FAMILIES`.

    Use the module-level constructors (:func:`power`, :func:`affine`, ...)
    rather than filling the fields by hand.
    """

    family: str
    alpha: float | None = None
    r: float | None = None
    s: float | None = None
    outer: GeneratorSpec | None = None
    inner: GeneratorSpec | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown generator family {self.family!r}")
        if self.family in ("power", "exp"):
            if self.alpha is None or not math.isfinite(self.alpha) or self.alpha == 0:
                raise SpecError(f"{self.family} generator needs a finite nonzero alpha")
        if self.family == "affine":
            if self.r is None or self.s is None or self.r == 0:
                raise SpecError("affine generator needs r != 0 and s")
            if not (math.isfinite(self.r) and math.isfinite(self.s)):
                raise SpecError("affine coefficients must be finite")
        if self.family == "composed":
            if self.outer is None or self.inner is None:
                raise SpecError("composed generator needs outer and inner")

    # -- structure -----------------------------------------------------------

    @property
    def increasing(self) -> bool:
        fam = self.family
        if fam in ("identity", "log"):
            return True
        if fam in ("power", "exp"):
            return self.alpha > 0
        if fam in ("reciprocal", "neg-complement"):
            return False
        if fam == "affine":
            return self.r > 0
        return self.outer.increasing == self.inner.increasing

    @property
    def domain(self) -> Interval:
        fam = self.family
        if fam == "power":
            return NONNEGATIVE if self.alpha > 0 else POSITIVE
        if fam in ("log", "reciprocal"):
            return POSITIVE
        if fam == "composed":
            inner_dom = self.inner.domain
            img = self.inner.image(inner_dom)
            usable = img.intersect(self.outer.domain)
            return inner_dom.intersect(self.inner.preimage(usable))
        return REALS

    @property
    def range(self) -> Interval:
        return self.image(self.domain)

    def image(self, iv: Interval) -> Interval:
        """Image of an interval (inside the domain) under this generator."""
        lo, hi = self(iv.lo), self(iv.hi)
        if self.increasing:
            return Interval(lo, hi, iv.lo_closed and math.isfinite(lo), iv.hi_closed and math.isfinite(hi))
        return Interval(hi, lo, iv.hi_closed and math.isfinite(hi), iv.lo_closed and math.isfinite(lo))

    def preimage(self, iv: Interval) -> Interval:
        """Preimage of an interval contained in the range."""
        lo, hi = self.inverse(iv.lo), self.inverse(iv.hi)
        if self.increasing:
            return Interval(lo, hi, iv.lo_closed, iv.hi_closed)
        return Interval(hi, lo, iv.hi_closed, iv.lo_closed)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x: float) -> float:
        fam = self.family
        if fam == "identity":
            return x
        if fam == "power":
            if x < 0:
                raise DomainError(f"power generator undefined at {x}")
            return _pow(x, self.alpha)
        if fam == "log":
            if x < 0:
                raise DomainError(f"log generator undefined at {x}")
            return _log(x)
        if fam == "exp":
            return _exp(self.alpha * x)
        if fam == "reciprocal":
            if x < 0:
                raise DomainError(f"reciprocal generator undefined at {x}")
            return INF if x == 0 else 1.0 / x
        if fam == "affine":
            return self.r * x + self.s
        if fam == "neg-complement":
            return 1.0 - x
        return self.outer(self.inner(x))

    def inverse(self, y: float) -> float:
        fam = self.family
        if fam == "identity":
            return y
        if fam == "power":
            if y < 0:
                raise DomainError(f"{y} outside the range of the power generator")
            return _pow(y, 1.0 / self.alpha)
        if fam == "log":
            if y == -INF:
                return 0.0
            return _exp(y)
        if fam == "exp":
            if y < 0:
                raise DomainError(f"{y} outside the range of the exp generator")
            return _log(y) / self.alpha
        if fam == "reciprocal":
            if y < 0:
                raise DomainError(f"{y} outside the range of the reciprocal generator")
            return INF if y == 0 else 1.0 / y
        if fam == "affine":
            return (y - self.s) / self.r
        if fam == "neg-complement":
            return 1.0 - y
        return self.inner.inverse(self.outer.inverse(y))

    def derivative(self, x: float) -> float:
        fam = self.family
        if fam == "identity":
            return 1.0
        if fam == "power":
            return self.alpha * _pow(x, self.alpha - 1.0)
        if fam == "log":
            return 1.0 / x
        if fam == "exp":
            return self.alpha * _exp(self.alpha * x)
        if fam == "reciprocal":
            return -1.0 / (x * x)
        if fam == "affine":
            return self.r
        if fam == "neg-complement":
            return -1.0
        return self.outer.derivative(self.inner(x)) * self.inner.derivative(x)

    def check_domain(self, x: float) -> None:
        if not self.domain.contains(x):
            raise DomainError(f"{x} outside generator domain {self.domain} ({self.family})")

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"family": self.family}
        if self.family in ("power", "exp"):
            out["alpha"] = self.alpha
        elif self.family == "affine":
            out["r"] = self.r
            out["s"] = self.s
        elif self.family == "composed":
            out["outer"] = self.outer.to_dict()
            out["inner"] = self.inner.to_dict()
        return out

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> GeneratorSpec:
        if not isinstance(d, dict) or "family" not in d:
            raise SpecError(f"generator must be an object with a 'family' key, got {d!r}")
        fam = d["family"]
        allowed = {
            "power": {"alpha"},
            "exp": {"alpha"},
            "affine": {"r", "s"},
            "composed": {"outer", "inner"},
        }.get(fam, set())
        extra = set(d) - allowed - {"family"}
        if extra:
            raise SpecError(f"unknown keys for generator {fam!r}: {sorted(extra)}")
        missing = allowed - set(d)
        if missing:
            raise SpecError(f"generator {fam!r} missing keys {sorted(missing)}")
        if fam == "composed":
            return composed(cls.from_dict(d["outer"]), cls.from_dict(d["inner"]))
        try:
            return cls(
                fam,
                alpha=_num(d.get("alpha")),
                r=_num(d.get("r")),
                s=_num(d.get("s")),
            )
        except TypeError as exc:
            raise SpecError(str(exc)) from None


def _num(v: Any) -> float | None:
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SpecError(f"expected a number, got {v!r}")
    return float(v)


def identity() -> GeneratorSpec:
    return GeneratorSpec("identity")


def power(alpha: float) -> GeneratorSpec:
    return GeneratorSpec("power", alpha=float(alpha))


def log() -> GeneratorSpec:
    return GeneratorSpec("log")


def exp(alpha: float = 1.0) -> GeneratorSpec:
    return GeneratorSpec("exp", alpha=float(alpha))


def reciprocal() -> GeneratorSpec:
    return GeneratorSpec("reciprocal")


def affine(r: float, s: float = 0.0) -> GeneratorSpec:
    return GeneratorSpec("affine", r=float(r), s=float(s))


def neg_complement() -> GeneratorSpec:
    return GeneratorSpec("neg-complement")


def composed(outer: GeneratorSpec, inner: GeneratorSpec) -> GeneratorSpec:
    """``x -> outer(inner(x))``."""
    return GeneratorSpec("composed", outer=outer, inner=inner)


def rescaled(f: GeneratorSpec, r: float, s: float = 0.0) -> GeneratorSpec:
    """``r*f + s``; same quasi-arithmetic mean as ``f`` for any ``r != 0``."""
    return composed(affine(r, s), f)
