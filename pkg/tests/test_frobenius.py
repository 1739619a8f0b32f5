import math
import random
from fractions import Fraction

import pytest

from surfideals.divisors import DivisorVector
from surfideals.errors import InvalidModel, NonEffectiveGamma, WildPrime
from surfideals.frobenius import (
    CharPContext,
    boundary_containment_check,
    boundary_monomial,
    numerical_containment_check,
    test_ideal as tau,
    test_ideal_detailed as tau_detailed,
    test_ideal_of_divisor as tau_of_divisor,
    trace_apply,
    trace_maps,
    trace_value,
)
from surfideals.multiplier import PairSpec, multiplier_ideal
from surfideals.toric import LEFT, RIGHT, MonomialIdeal, hj_resolve

SMOOTH = hj_resolve(1, 1)
A1 = hj_resolve(2, 1)
THIRD = hj_resolve(3, 1)


def test_context_validation():
    with pytest.raises(InvalidModel):
        CharPContext(4)
    with pytest.raises(InvalidModel):
        CharPContext(5, 0)


def test_calibration_identity_on_smooth_chart():
    # the minimal twist at e=1 sends x^(p-1) y^(p-1) to 1 and x to 0
    for p in (2, 3, 5):
        ctx = CharPContext(p)
        maps = trace_maps(SMOOTH, ctx, 1, DivisorVector.zero())
        assert len(maps) == 1
        tm = maps[0]
        assert tm.twist == (1 - p, 1 - p)
        assert trace_value(SMOOTH, p, tm, (p - 1, p - 1)) == (0, 0)
        assert trace_value(SMOOTH, p, tm, (1, 0)) is None


def test_trace_on_unit_ideal_is_unit():
    ctx = CharPContext(2)
    tm = trace_maps(SMOOTH, ctx, 1, DivisorVector.zero())[0]
    assert trace_apply(SMOOTH, ctx, tm, MonomialIdeal.unit(SMOOTH)).is_unit()


def test_trace_image_of_a1_maximal_ideal():
    # all admissible depth-1 twists at p=3 push the maximal ideal onto the
    # whole ring: computational reflection of F-regularity
    ctx = CharPContext(3)
    maximal = MonomialIdeal.from_points(A1, [(1, 0), (1, 1), (1, 2)])
    maps = trace_maps(A1, ctx, 1, DivisorVector.zero())
    assert maps, "the twist module must be nonzero"
    image = MonomialIdeal(A1, ())
    combined = maximal
    for tm in maps:
        img = trace_apply(A1, ctx, tm, maximal)
        combined = combined.sum(img)
    assert combined.is_unit()


def test_trace_image_full_not_fundamental_domain_truncation():
    # image of (x^(1,1)) on the A_1 chart under twist (0,-1), p=2: the two
    # minimal values are mutually incomparable, so both must be produced
    ctx = CharPContext(2)
    from surfideals.frobenius import TraceMap

    tm = TraceMap(1, (0, -1))
    ideal = MonomialIdeal.from_points(A1, [(1, 1)])
    image = trace_apply(A1, ctx, tm, ideal)
    assert image.gens == ((1, 0), (1, 1))


def test_trace_apply_preserves_inclusions():
    rng = random.Random(12)
    ctx = CharPContext(3)
    w = A1.boundary_divisor().scale(Fraction(1, 2))
    maps = [tm for e in (1, 2) for tm in trace_maps(A1, ctx, e, w)]
    monoid = [(i, j) for i in range(0, 5) for j in range(0, 2 * 4 + 1) if A1.in_monoid((i, j))]
    for _ in range(15):
        small = MonomialIdeal.from_points(A1, rng.sample(monoid, 2))
        big = small.sum(MonomialIdeal.from_points(A1, rng.sample(monoid, 2)))
        for tm in maps:
            assert trace_apply(A1, ctx, tm, small).issubset(trace_apply(A1, ctx, tm, big))


def test_boundary_monomial_seeds():
    assert boundary_monomial(SMOOTH) == (1, 1)
    assert boundary_monomial(A1) == (1, 1)


def test_smooth_chart_closed_form():
    z = SMOOTH.divisor({RIGHT: 1})
    for p in (2, 3, 5):
        assert tau(SMOOTH, CharPContext(p), z, Fraction(3, 2)).gens == ((1, 0),)
        assert tau(SMOOTH, CharPContext(p), z, Fraction(1, 2)).is_unit()


def test_quotients_with_no_divisor_are_f_regular():
    assert tau(A1, CharPContext(3), DivisorVector.zero(), 0).is_unit()
    assert tau(THIRD, CharPContext(5), DivisorVector.zero(), 0).is_unit()


def test_wild_prime_rejected():
    with pytest.raises(WildPrime):
        tau(A1, CharPContext(2), DivisorVector.zero(), 0)
    with pytest.raises(WildPrime):
        tau(THIRD, CharPContext(3), DivisorVector.zero(), 0)


def test_seed_independence_reported():
    z = hj_resolve(5, 2).boundary_divisor()
    detail = tau_detailed(hj_resolve(5, 2), CharPContext(3), z, Fraction(2, 3))
    assert detail.seeds_agreed
    assert detail.sweeps >= 1
    assert detail.depth_used >= 4


def test_adaptive_depth_reaches_the_fixed_point():
    # stalls at depth 4 (ord_2 mod 33 = 10) unless the schedule deepens
    model = hj_resolve(11, 1)
    detail = tau_detailed(model, CharPContext(2), model.boundary_divisor(), Fraction(2, 3))
    assert detail.ideal.is_unit()
    assert detail.depth_used > 4


def test_monotone_in_lambda():
    model = hj_resolve(5, 3)
    z = model.boundary_divisor()
    ctx = CharPContext(7)
    lams = [Fraction(k, 4) for k in range(0, 9)]
    ideals = [tau(model, ctx, z, lam) for lam in lams]
    for smaller_lam, larger_lam in zip(ideals, ideals[1:]):
        assert larger_lam.issubset(smaller_lam)


def test_boundary_containment_examples():
    ctx = CharPContext(3)
    z = SMOOTH.divisor({RIGHT: 1})
    assert boundary_containment_check(SMOOTH, ctx, z, 1, DivisorVector.zero())
    gamma = SMOOTH.divisor({LEFT: "1/2"})
    assert boundary_containment_check(SMOOTH, ctx, z, 1, gamma)
    # both sides computable by the closed form: tau((1/2) div y + div x) = (x)
    both = tau_of_divisor(SMOOTH, ctx, z + gamma)
    assert both.gens == ((1, 0),)
    with pytest.raises(NonEffectiveGamma):
        boundary_containment_check(SMOOTH, ctx, z, 1, SMOOTH.divisor({LEFT: -1}))


def test_boundary_containment_on_quotient():
    model = hj_resolve(5, 2)
    ctx = CharPContext(7)
    gamma = model.divisor({LEFT: "3/2", RIGHT: "1/3"})
    assert boundary_containment_check(model, ctx, model.boundary_divisor(), Fraction(1, 2), gamma)


def test_numerical_containment():
    for p in (3, 5):
        assert numerical_containment_check(A1, CharPContext(p), DivisorVector.zero(), 0)
    z = SMOOTH.divisor({RIGHT: 2, LEFT: 1})
    for lam in (Fraction(1, 2), Fraction(5, 6)):
        assert numerical_containment_check(SMOOTH, CharPContext(3), z, lam)
        # on the smooth chart both sides agree exactly
        ti = tau(SMOOTH, CharPContext(3), z, lam)
        assert ti == multiplier_ideal(PairSpec(SMOOTH, z, lam))


def test_smooth_chart_snc_grid():
    # closed form (x^floor(lam b) y^floor(lam c)) over a small grid, two primes
    for p in (2, 5):
        ctx = CharPContext(p)
        for b in (0, 1, 3):
            for c in (0, 2):
                z = SMOOTH.divisor({RIGHT: b, LEFT: c})
                for lam in (Fraction(1, 2), Fraction(4, 3)):
                    expected = ((math.floor(lam * b), math.floor(lam * c)),)
                    assert tau(SMOOTH, ctx, z, lam).gens == expected
