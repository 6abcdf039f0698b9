import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aggkit.axioms import Sampler, check_comonotonic, check_meaningfulness, check_non_compensation
from aggkit.axioms import check_weak_min_max_itivity
from aggkit.core import (
    BinaryMeasure,
    FuzzyMeasure,
    additive_measure,
    cardinality_measure,
    mask_of,
    members,
    necessity_measure,
    possibility_measure,
    random_measure,
    validate_measure,
)
from aggkit.errors import DimensionMismatch, NotCardinalityBased, RangeViolation, SpecError, WeightError
from aggkit.integrals import (
    choquet,
    geometric_weights,
    lattice_polynomial,
    measure_to_opmax,
    measure_to_opmin,
    measure_to_owa,
    opmax,
    opmax_to_measure,
    opmin,
    opmin_to_measure,
    order_statistic,
    owa,
    owa_to_measure,
    pmax,
    pmin,
    sort_view,
    sugeno,
    sugeno_disjunctive,
    sugeno_weighted_median,
    upward_closed_families,
    wam,
)


def _worked_measure():
    # mu({2}) = 0.3, mu({1,2}) = 0.5, the rest filled monotonically
    vals = {(): 0, (1,): 0.2, (2,): 0.3, (3,): 0.1, (1, 2): 0.5, (1, 3): 0.3, (2, 3): 0.4, (1, 2, 3): 1}
    table = [0.0] * 8
    for s, v in vals.items():
        table[mask_of(s)] = float(v)
    return validate_measure(table)


def _mobius(mu: FuzzyMeasure) -> list[Fraction]:
    # m(T) = sum_{S subset T} (-1)^{|T-S|} mu(S), in exact arithmetic
    out = []
    for t in range(1 << mu.n):
        acc = Fraction(0)
        s = t
        while True:
            sign = -1 if bin(t ^ s).count("1") % 2 else 1
            acc += sign * Fraction(mu.values[s])
            if s == 0:
                break
            s = (s - 1) & t
        out.append(acc)
    return out


def _lovasz(x, mu) -> float:
    """Choquet value through the Mobius representation sum_T m(T) min_{i in T} x_i."""
    m = _mobius(mu)
    return float(sum(m[t] * Fraction(min(x[i - 1] for i in members(t))) for t in range(1, 1 << mu.n)))


def _nonincreasing(rng, n, top=None, bottom=None):
    w = sorted(rng.choice(np.linspace(0, 1, 11), n).tolist(), reverse=True)
    if top is not None:
        w[0] = top
    if bottom is not None:
        w[-1] = bottom
    return w


# -- Choquet ------------------------------------------------------------------------


def test_choquet_examples():
    mu = _worked_measure()
    assert choquet((0.4, 0.9, 0.1), mu) == pytest.approx(0.40, abs=1e-15)
    assert choquet((1, 2, 3), additive_measure((0.5, 0.3, 0.2))) == pytest.approx(1.7, abs=1e-15)
    for c in (0.0, -3.5, 0.25, 1e6):
        assert choquet((c, c, c), mu) == c
    with pytest.raises(DimensionMismatch):
        choquet((0.1, 0.2), mu)


def test_sort_view_is_stable_with_upper_sets():
    v = sort_view((0.5, 0.1, 0.5, 0.1))
    assert v.order == (1, 3, 0, 2)
    assert v.upper[0] == 0b1111 and v.upper[-1] == 0
    assert [bin(m).count("1") for m in v.upper] == [4, 3, 2, 1, 0]


def test_choquet_matches_mobius_oracle():
    rng = np.random.default_rng(20)
    for _ in range(300):
        n = int(rng.integers(1, 5))
        mu = random_measure(rng, n)
        x = rng.normal(0, 5, n).tolist()
        assert choquet(x, mu) == pytest.approx(_lovasz(x, mu), abs=1e-12)


def test_choquet_tie_breaking_is_irrelevant():
    rng = np.random.default_rng(21)
    for x in [(0.3, 0.3, 0.7, 0.3), (1.0, 1.0, 1.0, 0.0), (0.2, 0.5, 0.5, 0.2)]:
        for _ in range(10):
            mu = random_measure(rng, 4)
            vals = set()
            for perm in itertools.permutations(range(4)):
                if all(x[a] <= x[b] for a, b in zip(perm, perm[1:])):
                    vals.add(choquet(x, mu, order=perm))
            assert vals == {choquet(x, mu)}


def test_choquet_rejects_bad_orders():
    mu = _worked_measure()
    with pytest.raises(SpecError):
        choquet((0.1, 0.2, 0.3), mu, order=(0, 1, 1))
    with pytest.raises(SpecError):
        choquet((0.1, 0.2, 0.3), mu, order=(2, 1, 0))


def test_choquet_with_additive_measure_is_wam():
    rng = np.random.default_rng(22)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        w = rng.dirichlet(np.ones(n))
        w = (w / w.sum()).tolist()
        try:
            mu = additive_measure(w)
        except WeightError:
            continue
        x = rng.uniform(-10, 10, n).tolist()
        # singleton sums differ from w in the last ulp
        assert abs(choquet(x, mu) - wam(x, w)) <= 1e-12 * max(1.0, max(map(abs, x)))


def test_choquet_comonotonic_additivity():
    rng = np.random.default_rng(23)
    for _ in range(500):
        n = int(rng.integers(1, 5))
        mu = random_measure(rng, n)
        perm = rng.permutation(n)
        a, b = np.zeros(n), np.zeros(n)
        a[perm] = np.sort(rng.uniform(0, 1, n))
        b[perm] = np.sort(rng.uniform(0, 1, n))
        lhs = choquet((a + b).tolist(), mu)
        assert abs(lhs - choquet(a.tolist(), mu) - choquet(b.tolist(), mu)) <= 1e-12


def test_choquet_interval_scale_meaningful():
    mu = random_measure(np.random.default_rng(24), 3)
    rep = check_meaningfulness(lambda x: choquet(x, mu), "interval", Sampler(n=3, domain=(-5, 5)))
    assert rep.holds


# -- Sugeno -------------------------------------------------------------------------


def test_sugeno_examples():
    mu = _worked_measure()
    x = (0.4, 0.9, 0.1)
    assert sugeno(x, mu) == 0.4
    assert sugeno_weighted_median(x, mu) == 0.4
    assert sugeno_disjunctive(x, mu) == 0.4
    for m in range(8):
        ind = [1.0 if (m >> i) & 1 else 0.0 for i in range(3)]
        assert sugeno(ind, mu) == mu.values[m]
    assert sugeno((0.6, 0.6, 0.6), mu) == 0.6
    assert sugeno_weighted_median((0.35,), validate_measure([0, 1])) == 0.35
    with pytest.raises(RangeViolation):
        sugeno((0.4, 1.2, 0.1), mu)


def test_sugeno_single_winning_set():
    gamma = BinaryMeasure.from_generators(3, [[1, 3]]).to_measure()
    x = (0.4, 0.9, 0.7)
    assert sugeno_disjunctive(x, gamma) == 0.4 == sugeno(x, gamma)


def test_sugeno_forms_agree_on_lattice_grid():
    rng = np.random.default_rng(25)
    grid = (0.0, 0.5, 1.0)
    for _ in range(20):
        mu = random_measure(rng, 3)
        for x in itertools.product(grid, repeat=3):
            s = sugeno(x, mu)
            assert s == sugeno_disjunctive(x, mu) == sugeno_weighted_median(x, mu)


def test_sugeno_forms_agree_on_random_cases():
    rng = np.random.default_rng(26)
    for _ in range(1000):
        n = int(rng.integers(1, 6))
        mu = random_measure(rng, n)
        x = rng.random(n).tolist()
        s = sugeno(x, mu)
        assert s == sugeno_disjunctive(x, mu) == sugeno_weighted_median(x, mu)
        assert s in set(x) | set(mu.values)


def test_sugeno_lattice_laws():
    mu = random_measure(np.random.default_rng(27), 3)
    A = lambda x: sugeno(x, mu)
    s = Sampler(n=3, samples=400)
    assert check_comonotonic(A, "minitive", s).holds
    assert check_comonotonic(A, "maxitive", s).holds
    assert all(r.holds for r in check_weak_min_max_itivity(A, s))
    assert check_non_compensation(A, s).holds


# -- OWA / WAM / order statistics ---------------------------------------------------


def test_owa_examples():
    assert owa((5, 1, 9), (1, 0, 0)) == 1.0
    assert owa((3, 1, 2), (0.5, 0.3, 0.2)) == 1.7
    assert wam((3, 1, 2), (0.5, 0.3, 0.2)) == 2.2
    assert order_statistic((5, 1, 9), 2) == 5.0
    with pytest.raises(IndexError):
        order_statistic((5, 1, 9), 4)
    with pytest.raises(WeightError):
        owa((1, 2), (0.5, 0.6))
    with pytest.raises(DimensionMismatch):
        owa((1, 2, 3), (0.5, 0.5))


def test_owa_measure_conversions():
    mu = owa_to_measure((0.5, 0.3, 0.2))
    assert mu.values == cardinality_measure([0, 0.2, 0.5, 1]).values
    assert owa_to_measure((0.25,) * 4).values == cardinality_measure([0, 0.25, 0.5, 0.75, 1]).values
    assert tuple(measure_to_owa(mu)) == (0.5, 0.3, 0.2)
    assert tuple(measure_to_owa(additive_measure((0.25,) * 4))) == (0.25,) * 4
    with pytest.raises(NotCardinalityBased) as info:
        measure_to_owa(additive_measure((0.6, 0.4)))
    assert {info.value.first, info.value.second} == {mask_of([1]), mask_of([2])}


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 100), min_size=0, max_size=5).filter(lambda v: sum(v) <= 100))
def test_owa_round_trip_on_percent_grid(head):
    w = [p / 100 for p in head] + [(100 - sum(head)) / 100]
    assert tuple(measure_to_owa(owa_to_measure(w))) == tuple(w)


def test_owa_equals_choquet_of_its_measure():
    rng = np.random.default_rng(28)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        w = rng.dirichlet(np.ones(n)).tolist()
        try:
            mu = owa_to_measure(w)
        except WeightError:
            continue
        x = rng.uniform(-3, 3, n).tolist()
        assert abs(owa(x, w) - choquet(x, mu)) <= 1e-12


# -- possibilistic forms ------------------------------------------------------------


def test_pmax_pmin_examples():
    assert pmax((0.2, 1.0, 0.5), (1, 0.4, 0.7)) == 0.5
    x = (0.2, 0.8, 0.5)
    for k in range(3):
        w = [0.0] * 3
        w[k] = 1.0
        assert pmax(x, w) == x[k]
    assert opmax((0.3, 0.8), (1, 0)) == 0.3


def test_pmax_pmin_equal_sugeno_of_possibility_and_necessity():
    rng = np.random.default_rng(29)
    for _ in range(1000):
        n = int(rng.integers(1, 5))
        x = rng.random(n).tolist()
        up = rng.random(n)
        up[rng.integers(n)] = 1.0
        down = rng.random(n)
        down[rng.integers(n)] = 0.0
        assert pmax(x, up.tolist()) == sugeno(x, possibility_measure(up.tolist()))
        assert pmin(x, down.tolist()) == sugeno(x, necessity_measure(down.tolist()))


def _median(vals):
    return sorted(vals)[len(vals) // 2]


def test_opmax_opmin_median_identities():
    rng = np.random.default_rng(30)
    for _ in range(1000):
        n = int(rng.integers(1, 6))
        x = rng.random(n).tolist()
        up = _nonincreasing(rng, n, top=1.0)
        down = _nonincreasing(rng, n, bottom=0.0)
        assert opmax(x, up) == _median(x + up[1:])
        assert opmin(x, down) == _median(x + down[:-1])


def test_opmax_opmin_through_cardinality_measure():
    rng = np.random.default_rng(31)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        x = rng.random(n).tolist()
        up = _nonincreasing(rng, n, top=1.0)
        down = _nonincreasing(rng, n, bottom=0.0)
        mu = opmax_to_measure(up)
        assert opmax(x, up) == sugeno(x, mu)
        # the same measure read back as opmin weights gives the same function
        assert opmin(x, measure_to_opmin(mu)) == opmax(x, up)
        assert tuple(measure_to_opmax(mu)) == tuple(up)
        nu = opmin_to_measure(down)
        assert opmin(x, down) == sugeno(x, nu)
        assert opmax(x, measure_to_opmax(nu)) == opmin(x, down)


# -- lattice polynomials ------------------------------------------------------------


def test_lattice_polynomial_example():
    gamma = BinaryMeasure.from_generators(3, [[1, 2], [3]])
    assert lattice_polynomial((0.4, 0.9, 0.1), gamma) == 0.4


def test_upward_closed_family_counts():
    # Dedekind numbers minus the two constant families
    assert [len(upward_closed_families(n)) for n in (1, 2, 3, 4)] == [1, 4, 18, 166]


def test_lattice_polynomial_is_choquet_and_sugeno():
    rng = np.random.default_rng(32)
    for gamma in upward_closed_families(3):
        mu = gamma.to_measure()
        for x in rng.random((50, 3)).tolist():
            lp = lattice_polynomial(x, gamma)
            assert lp == choquet(x, mu) == sugeno(x, mu)


def test_symmetric_lattice_polynomials_are_order_statistics():
    n = 3
    for k in range(1, n + 1):
        gamma = BinaryMeasure(n, frozenset(m for m in range(1, 1 << n) if bin(m).count("1") >= k))
        for x in itertools.product((0.1, 0.4, 0.9), repeat=n):
            assert lattice_polynomial(x, gamma) == order_statistic(x, n - k + 1)


# -- geometric weights --------------------------------------------------------------


def test_geometric_weights_examples():
    assert tuple(geometric_weights(3, 0.5)) == pytest.approx((1 / 3,) * 3, abs=1e-15)
    assert tuple(geometric_weights(3, 0.0)) == (1.0, 0.0, 0.0)
    assert tuple(geometric_weights(3, 1.0)) == (0.0, 0.0, 1.0)
    assert tuple(geometric_weights(2, 0.25)) == (0.75, 0.25)
    with pytest.raises(SpecError):
        geometric_weights(3, 1.5)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.floats(0, 1))
def test_geometric_weights_sum_to_one(n, theta):
    w = geometric_weights(n, theta)
    assert abs(math.fsum(w) - 1) <= 1e-12
    assert all(v >= 0 for v in w)
