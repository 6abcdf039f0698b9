import math
from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aggkit.assoc import (
    ArchimedeanSpec,
    Component,
    IdempotentAssocSpec,
    OrdinalSumSpec,
    aczelian,
    aczelian_n,
    alpha_beta,
    alpha_beta_n,
    archimedean,
    archimedean_n,
    czogala_drewniak,
    find_identity,
    form_generator,
    is_tconorm,
    is_tnorm,
    is_uninorm,
    median_assoc_n,
    normalized_form,
    normalized_form_n,
    ordinal_sum,
    ordinal_sum_n,
)
from aggkit.axioms import Sampler
from aggkit.core import affine, composed, exp, identity, log, neg_complement, power, rescaled
from aggkit.errors import GeneratorNotNormalized, OutOfInterval, RangeError, SpecError

LUKA = ArchimedeanSpec("conjunctive", (0.0, 1.0), neg_complement())
PRODUCT = ArchimedeanSpec("conjunctive", (0.0, 1.0), composed(affine(-1.0), log()))
DUAL_LUKA = ArchimedeanSpec("disjunctive", (0.0, 1.0), identity())
# 1 - (1-x)(1-y) via f(x) = -ln(1 - x)
_orient, _f = form_generator("dual-product")
DUAL_PRODUCT = ArchimedeanSpec(_orient, (0.0, 1.0), _f)
# Yager-type nilpotent conjunctive with f(x) = (1 - x)^2
YAGER = ArchimedeanSpec("conjunctive", (0.0, 1.0), composed(power(2.0), neg_complement()))

SPECS = {"luka": LUKA, "product": PRODUCT, "dual-luka": DUAL_LUKA, "dual-product": DUAL_PRODUCT, "yager": YAGER}

unit = st.floats(0.0, 1.0)


def _triples(seed, count=1000):
    return np.random.default_rng(seed).random((count, 3))


# -- examples -----------------------------------------------------------------------


def test_aczelian_examples():
    assert aczelian(2, 3, identity()) == 5.0
    assert aczelian(2, 8, log()) == pytest.approx(16.0, rel=1e-15)
    assert aczelian_n([2, 3, 5], log()) == pytest.approx(30.0, rel=1e-14)
    with pytest.raises(RangeError):
        # exp(-x) - 1 has range (-1, inf); two values near -1 sum below it
        aczelian_n([5.0, 5.0], composed(affine(1.0, -1.0), exp(-1.0)))


def test_aczelian_is_associative():
    for a, b, c in _triples(10) * 10 + 0.1:
        lhs = aczelian(aczelian(a, b, log()), c, log())
        rhs = aczelian(a, aczelian(b, c, log()), log())
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


def test_archimedean_examples():
    assert archimedean(0.7, 0.6, LUKA) == pytest.approx(0.3, abs=1e-15)
    assert archimedean(0.3, 0.6, LUKA) == 0.0
    assert archimedean(0.5, 0.4, PRODUCT) == pytest.approx(0.2, rel=1e-15)
    assert archimedean(0.7, 0.6, DUAL_LUKA) == 1.0
    assert archimedean(0.5, 0.4, DUAL_PRODUCT) == pytest.approx(0.7, rel=1e-14)
    with pytest.raises(OutOfInterval):
        archimedean(1.2, 0.5, LUKA)
    assert LUKA.nilpotent and not PRODUCT.nilpotent


def test_archimedean_spec_rejections():
    with pytest.raises(SpecError):
        ArchimedeanSpec("conjunctive", (0.0, 1.0), identity())  # increasing
    with pytest.raises(SpecError):
        ArchimedeanSpec("disjunctive", (0.0, 1.0), affine(1.0, 1.0))  # f(a) = 1
    with pytest.raises(SpecError):
        ArchimedeanSpec("sideways", (0.0, 1.0), identity())


@pytest.mark.parametrize("name", sorted(SPECS))
def test_identity_and_zero_laws_are_exact(name):
    spec = SPECS[name]
    for t in np.linspace(0, 1, 101):
        t = float(t)
        assert archimedean(spec.identity, t, spec) == t
        assert archimedean(t, spec.identity, spec) == t
        assert archimedean(spec.zero, t, spec) == spec.zero
        assert archimedean(t, spec.zero, spec) == spec.zero


@pytest.mark.parametrize("name", sorted(SPECS))
def test_no_interior_idempotents(name):
    spec = SPECS[name]
    conj = spec.orientation == "conjunctive"
    for t in np.random.default_rng(11).uniform(0.01, 0.99, 500):
        v = archimedean(float(t), float(t), spec)
        assert v < t if conj else v > t


@pytest.mark.parametrize("name", sorted(SPECS))
def test_archimedean_associative_and_bounded(name):
    spec = SPECS[name]
    conj = spec.orientation == "conjunctive"
    for x, y, z in _triples(12):
        lhs = archimedean(archimedean(x, y, spec), z, spec)
        rhs = archimedean(x, archimedean(y, z, spec), spec)
        assert abs(lhs - rhs) <= 1e-9
        v = archimedean(x, y, spec)
        assert v <= min(x, y) if conj else v >= max(x, y)


def test_archimedean_fold_matches_normalized_sequence():
    rng = np.random.default_rng(13)
    for _ in range(300):
        x = rng.random(int(rng.integers(1, 6))).tolist()
        assert archimedean_n(x, LUKA) == pytest.approx(normalized_form_n(x, identity(), "luka"), abs=1e-12)
        assert archimedean_n(x, PRODUCT) == pytest.approx(math.prod(x), rel=1e-9, abs=1e-300)


@pytest.mark.parametrize("r", [1e-3, 0.5, 7.0, 1e4])
def test_generator_scaling_invariance(r):
    scaled = ArchimedeanSpec("conjunctive", (0.0, 1.0), rescaled(YAGER.generator, r))
    for x, y, _ in _triples(14, 300):
        assert abs(archimedean(x, y, scaled) - archimedean(x, y, YAGER)) <= 1e-9
    for x, y, _ in _triples(15, 300) * 5 + 0.1:
        assert abs(aczelian(x, y, rescaled(log(), r)) - aczelian(x, y, log())) <= 1e-9 * max(1.0, x * y)


# -- normalized forms ---------------------------------------------------------------


def test_normalized_form_examples():
    assert normalized_form_n([0.9, 0.8, 0.7], identity(), "luka") == pytest.approx(0.4, abs=1e-15)
    assert normalized_form(0.7, 0.6, identity(), "dual-luka") == 1.0
    for x in (0.0, 0.3, 0.99, 1.0):
        assert normalized_form(x, 1.0, identity(), "strict-product") == x
    with pytest.raises(GeneratorNotNormalized):
        normalized_form(0.5, 0.5, affine(2.0), "luka")
    with pytest.raises(SpecError):
        normalized_form(0.5, 0.5, identity(), "bogus")


def test_normalized_form_with_nonlinear_generator_on_other_interval():
    # g(x) = ((x - 2) / 3)^2 maps [2, 5] onto [0, 1]
    g = composed(power(2.0), affine(1 / 3, -2 / 3))
    x, y = 3.5, 4.0
    gx, gy = 0.25, 4 / 9
    got = normalized_form(x, y, g, "strict-product", interval=(2.0, 5.0))
    assert got == pytest.approx(2 + 3 * math.sqrt(gx * gy), rel=1e-14)
    got = normalized_form(x, y, g, "dual-luka", interval=(2.0, 5.0))
    assert got == pytest.approx(2 + 3 * math.sqrt(gx + gy), rel=1e-14)


@pytest.mark.parametrize("form", ["luka", "strict-product", "dual-luka", "dual-product"])
def test_forms_match_their_additive_generators(form):
    orient, f = form_generator(form)
    spec = ArchimedeanSpec(orient, (0.0, 1.0), f)
    for x, y, _ in _triples(16, 300):
        assert abs(normalized_form(x, y, identity(), form) - archimedean(x, y, spec)) <= 1e-9


@settings(max_examples=300, deadline=None)
@given(unit, unit)
def test_duality_of_forms(x, y):
    for conj, disj in (("luka", "dual-luka"), ("strict-product", "dual-product")):
        lhs = normalized_form(x, y, identity(), disj)
        rhs = 1 - normalized_form(1 - x, 1 - y, identity(), conj)
        assert abs(lhs - rhs) <= 1e-12


# -- ordinal sums -------------------------------------------------------------------


def _one_luka_component():
    return OrdinalSumSpec("conjunctive", (0.0, 1.0), (Component(0.0, 0.5, LUKA),))


def test_ordinal_sum_examples():
    spec = _one_luka_component()
    assert ordinal_sum(0.2, 0.8, spec) == 0.2
    assert ordinal_sum(0.4, 0.3, spec) == pytest.approx(0.2, abs=1e-15)
    empty_c = OrdinalSumSpec("conjunctive", (0.0, 1.0))
    empty_d = OrdinalSumSpec("disjunctive", (0.0, 1.0))
    for x, y, _ in _triples(17, 50):
        assert ordinal_sum(x, y, empty_c) == min(x, y)
        assert ordinal_sum(x, y, empty_d) == max(x, y)
    with pytest.raises(OutOfInterval):
        ordinal_sum(-0.1, 0.5, spec)


def test_ordinal_sum_rejects_overlap_and_mixed_orientation():
    with pytest.raises(SpecError):
        OrdinalSumSpec("conjunctive", (0.0, 1.0), (Component(0.0, 0.5, LUKA), Component(0.4, 0.9, PRODUCT)))
    with pytest.raises(SpecError):
        OrdinalSumSpec("conjunctive", (0.0, 1.0), (Component(0.0, 0.5, DUAL_LUKA),))
    # touching endpoints are fine
    OrdinalSumSpec("conjunctive", (0.0, 1.0), (Component(0.0, 0.5, LUKA), Component(0.5, 1.0, PRODUCT)))


def test_ordinal_sum_is_associative_t_norm():
    spec = OrdinalSumSpec(
        "conjunctive",
        (0.0, 1.0),
        (Component(0.1, 0.4, LUKA), Component(0.4, 0.7, PRODUCT), Component(0.8, 1.0, YAGER)),
    )
    op = lambda x, y: ordinal_sum(x, y, spec)
    for x, y, z in _triples(18):
        assert abs(op(op(x, y), z) - op(x, op(y, z))) <= 1e-9
    assert ordinal_sum_n([0.5, 0.6, 0.9], spec) == pytest.approx(op(op(0.5, 0.6), 0.9), abs=0)
    assert is_tnorm(op, Sampler(samples=400)).holds


def test_disjunctive_ordinal_sum_is_t_conorm():
    spec = OrdinalSumSpec("disjunctive", (0.0, 1.0), (Component(0.2, 0.6, DUAL_LUKA),))
    op = lambda x, y: ordinal_sum(x, y, spec)
    assert ordinal_sum(0.3, 0.35, spec) == pytest.approx(0.45, abs=1e-15)
    assert is_tconorm(op, Sampler(samples=400)).holds


# -- idempotent associative family -------------------------------------------------


def test_alpha_beta_examples():
    spec = IdempotentAssocSpec(0.3, 0.7)
    assert alpha_beta_n([0.5, 0.9, 0.2], spec) == 0.3
    assert alpha_beta(0.2, 0.9, IdempotentAssocSpec(0.5, 0.5)) == 0.5
    for x, y, _ in _triples(19, 100):
        assert alpha_beta(x, y, IdempotentAssocSpec(1.0, 1.0)) == max(x, y)
        assert alpha_beta(x, y, IdempotentAssocSpec(0.0, 0.0)) == min(x, y)


@settings(max_examples=300, deadline=None)
@given(unit, unit, st.lists(unit, min_size=1, max_size=7))
def test_alpha_beta_n_is_left_fold(a, b, x):
    spec = IdempotentAssocSpec(a, b)
    fold = reduce(lambda acc, v: alpha_beta(acc, v, spec), x[1:], x[0])
    assert alpha_beta_n(x, spec) == fold


@settings(max_examples=300, deadline=None)
@given(unit, unit, unit, unit, unit)
def test_alpha_beta_exactly_associative_and_idempotent(a, b, x, y, z):
    spec = IdempotentAssocSpec(a, b)
    op = lambda u, v: alpha_beta(u, v, spec)
    assert op(op(x, y), z) == op(x, op(y, z))
    assert op(x, x) == x


@settings(max_examples=300, deadline=None)
@given(unit, unit, unit)
def test_median_assoc_matches_symmetric_alpha_beta(a, x, y):
    assert median_assoc_n([x, y], a) == alpha_beta(x, y, IdempotentAssocSpec(a, a))


def test_median_assoc_examples():
    assert median_assoc_n([0.1, 0.9, 0.4], 0.5) == 0.5
    assert median_assoc_n([0.6] * 4, 0.1) == 0.6
    assert median_assoc_n([0.3, 0.8], 0.0) == 0.3


def test_czogala_drewniak_examples():
    g = lambda t: 1 - t
    assert czogala_drewniak(0.2, 0.9, g) == 0.9
    assert czogala_drewniak(0.2, 0.7, g) == 0.2
    for y in np.linspace(0, 1, 41):
        assert czogala_drewniak(0.5, float(y), g) == float(y)
    assert czogala_drewniak(0.25, 0.75, g) == 0.25
    assert czogala_drewniak(0.25, 0.75, g, tie="take-max") == 0.75
    with pytest.raises(SpecError):
        czogala_drewniak(0.1, 0.2, g, tie="coin")


def test_czogala_drewniak_is_uninorm_with_located_identity():
    # grid values are exact binary fractions so the tie line is hit exactly
    rep = is_uninorm(lambda x, y: czogala_drewniak(x, y, lambda t: 1 - t), Sampler(samples=300))
    assert rep.holds
    e = float(next(n for n in rep.notes if n.startswith("identity=")).split("=")[1])
    assert e == pytest.approx(0.5, abs=1e-6)


# -- predicates ---------------------------------------------------------------------


def test_predicate_examples():
    s = Sampler(samples=400)
    assert is_tnorm(min, s).holds
    assert is_tconorm(max, s).holds
    assert is_tnorm(lambda x, y: max(x + y - 1, 0.0), s).holds
    assert not is_tnorm(max, s).holds
    rep = is_uninorm(lambda x, y: median_assoc_n([x, y], 0.5), s)
    assert not rep.holds
    assert rep.witness["law"] == "identity"


def test_predicate_witness_on_nonassociative_operation():
    op = lambda x, y: x * y * (1 + x + y) / 3
    rep = is_tnorm(op, Sampler(samples=200))
    assert not rep.holds
    assert rep.witness["law"] in ("associative", "identity")


def test_find_identity_for_shifted_uninorm():
    # representable uninorm with identity 0.3 built from the 3-Pi generator shape
    e = 0.3

    def op(x, y):
        if {x, y} == {0.0, 1.0} or min(x, y) == 0.0:
            return 0.0
        h = lambda t: math.log(t / (1 - t)) - math.log(e / (1 - e)) if 0 < t < 1 else (math.inf if t == 1 else -math.inf)
        s = h(x) + h(y)
        if math.isinf(s):
            return 1.0 if s > 0 else 0.0
        z = s + math.log(e / (1 - e))
        return 1 / (1 + math.exp(-z))

    found, res = find_identity(op, [0.0, 0.1, 0.5, 0.9, 1.0])
    assert found == pytest.approx(e, abs=1e-6)
    assert res <= 1e-6


def test_predicate_reports_are_deterministic():
    op = lambda x, y: x * y
    assert is_tnorm(op, Sampler(seed=5)).to_dict() == is_tnorm(op, Sampler(seed=5)).to_dict()
