"""Adaptive Simpson quadrature and bisection used by the means module."""

from __future__ import annotations

import math
from typing import Callable

from aggkit.errors import NoBracket, NotMonotone, QuadratureFailure

EPS_QUAD = 1e-10
MAX_DEPTH = 50
EPS_ROOT = 1e-12
MAX_BISECT = 200


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = EPS_QUAD,
    max_depth: int = MAX_DEPTH,
) -> float:
    """Integral of ``f`` over ``[a, b]`` to absolute tolerance ``tol``."""
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def step(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        if not math.isfinite(delta):
            raise QuadratureFailure(f"non-finite integrand on [{a}, {b}]")
        if abs(delta) <= 15.0 * tol or m in (a, b):
            return left + right + delta / 15.0
        if depth >= max_depth:
            raise QuadratureFailure(f"no convergence on [{a}, {b}] at depth {depth}")
        return step(a, m, fa, flm, fm, left, tol / 2, depth + 1) + step(
            m, b, fm, frm, fb, right, tol / 2, depth + 1
        )

    return step(a, b, fa, fm, fb, whole, tol, 0)


def bisect(
    h: Callable[[float], float],
    lo: float,
    hi: float,
    target: float,
    tol: float | None = None,
    max_iter: int = MAX_BISECT,
) -> float:
    """Solve ``h(t) = target`` on ``[lo, hi]`` for strictly monotone ``h``.

    Raises :class:`NoBracket` when the target is not between ``h(lo)`` and
    ``h(hi)`` and :class:`NotMonotone` when a midpoint value falls outside the
    current bracket images.
    """
    if lo > hi:
        lo, hi = hi, lo
    if tol is None:
        tol = EPS_ROOT * (1.0 + max(abs(lo), abs(hi)))
    hlo, hhi = h(lo), h(hi)
    if hlo == target:
        return lo
    if hhi == target:
        return hi
    if not (min(hlo, hhi) <= target <= max(hlo, hhi)):
        raise NoBracket(f"target {target!r} not between h({lo})={hlo!r} and h({hi})={hhi!r}")
    if hlo == hhi:
        raise NotMonotone(f"h is constant on [{lo}, {hi}]")
    rising = hhi > hlo
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        hm = h(mid)
        if not (min(hlo, hhi) <= hm <= max(hlo, hhi)):
            raise NotMonotone(f"h({mid})={hm!r} outside [{hlo!r}, {hhi!r}]")
        if hm == target:
            return mid
        if (hm < target) == rising:
            lo, hlo = mid, hm
        else:
            hi, hhi = mid, hm
    return 0.5 * (lo + hi)
