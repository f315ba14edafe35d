"""Function-algebra tests: canonical form, evaluation, arithmetic, the
(1/x) d/dx derivation, and the x -> 0+ limit."""

import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l2transform import GExpr, GTerm, canonicalize, delta_x, evaluate, limit_at_zero
from l2transform import algebra

from support import direct_term_sum, rand_gexpr


def gterm(c, k, a) -> GTerm:
    return GTerm(F(c), k, F(a))


class TestCanonicalize:
    def test_merges_like_terms(self):
        e = canonicalize([gterm(1, 0, 0), gterm(2, 0, 0)])
        assert e == canonicalize([gterm(3, 0, 0)])

    def test_cancellation_gives_zero_expression(self):
        e = canonicalize([gterm(1, 1, 0), gterm(-1, 1, 0)])
        assert e.terms == ()
        assert not e

    def test_sorted_unique_no_zero_coefficients(self):
        e = canonicalize([gterm(2, 3, "1/2"), gterm(1, 0, -1), gterm(5, 3, "1/2")])
        keys = [(t.a, t.k) for t in e.terms]
        assert keys == sorted(keys) == list(dict.fromkeys(keys))
        assert all(t.c != 0 for t in e.terms)

    def test_random_inputs_preserve_pointwise_value(self):
        rng = random.Random(20260811)
        for _ in range(25):
            raw = [
                GTerm(F(rng.randint(-8, 8), rng.randint(1, 5)),
                      rng.randint(0, 4),
                      F(rng.randint(-4, 2), rng.randint(1, 4)))
                for _ in range(10)
            ]
            e = canonicalize(raw)
            for i in range(20):
                x = 4.0 * i / 19
                oracle = direct_term_sum(raw, x)
                scale = max(1.0, sum(abs(float(t.c)) * x ** (2 * t.k)
                                     * math.exp(float(t.a) * x * x) for t in raw))
                assert abs(evaluate(e, x) - oracle) <= 1e-12 * scale

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(20):
            e = rand_gexpr(rng)
            assert canonicalize(e.terms) == e

    def test_rejects_float_coefficients(self):
        with pytest.raises(TypeError):
            GTerm(0.5, 0, F(0))

    def test_rejects_negative_half_degree(self):
        with pytest.raises(ValueError):
            GTerm(F(1), -1, F(0))


class TestEvaluate:
    def test_constant(self):
        assert evaluate(canonicalize([gterm(1, 0, 0)]), 7.0) == 1.0

    def test_decaying_gaussian(self):
        e = canonicalize([gterm(1, 1, -1)])  # x^2 e^(-x^2)
        assert evaluate(e, 1.0) == pytest.approx(math.exp(-1), rel=1e-15)

    def test_growing_gaussian(self):
        e = canonicalize([gterm(1, 0, "1/2")])  # e^(x^2/2)
        assert evaluate(e, 2.0) == pytest.approx(math.e ** 2, rel=1e-14)

    def test_zero_expression(self):
        assert evaluate(GExpr(), 3.0) == 0.0

    def test_at_origin(self):
        e = algebra.constant(2) + algebra.gaussian(1, c=1, k=2)
        assert evaluate(e, 0.0) == 2.0

    def test_overflow_is_reported(self):
        e = canonicalize([gterm(1, 0, 1)])
        with pytest.raises(OverflowError):
            evaluate(e, 1e3)

    def test_negative_argument_rejected(self):
        with pytest.raises(ValueError):
            evaluate(canonicalize([gterm(1, 0, 0)]), -0.5)


class TestArithmetic:
    def test_multiply_adds_degrees(self):
        x2 = algebra.monomial(1, 1)
        gh = algebra.gaussian("1/2")
        assert x2 * gh == algebra.gaussian("1/2", c=1, k=1)

    def test_additive_inverse(self):
        rng = random.Random(3)
        e = rand_gexpr(rng)
        assert (e + algebra.scale(e, -1)).terms == ()

    def test_gaussian_rates_add(self):
        a = algebra.gaussian("1/3")
        b = algebra.gaussian("1/6")
        assert a * b == algebra.gaussian("1/2")

    def test_scale(self):
        e = algebra.monomial(3, 2)
        assert algebra.scale(e, F(1, 3)) == algebra.monomial(1, 2)


gterm_strategy = st.builds(
    GTerm,
    c=st.fractions(min_value=-4, max_value=4, max_denominator=6),
    k=st.integers(min_value=0, max_value=3),
    a=st.fractions(min_value=-2, max_value=1, max_denominator=6),
)
gexpr_strategy = st.lists(gterm_strategy, min_size=0, max_size=5).map(
    lambda ts: GExpr(tuple(ts))
)


@given(gexpr_strategy)
def test_canonicalize_idempotence_property(e):
    assert canonicalize(e.terms) == e


@given(gexpr_strategy, gexpr_strategy, st.floats(min_value=0.0, max_value=4.0))
@settings(max_examples=80)
def test_pointwise_soundness_of_arithmetic(e1, e2, x):
    envelope = 1.0 + sum(
        abs(float(t.c)) * x ** (2 * t.k) * math.exp(float(t.a) * x * x)
        for t in e1.terms + e2.terms
    )
    assert abs(evaluate(e1 + e2, x) - (evaluate(e1, x) + evaluate(e2, x))) \
        <= 1e-12 * envelope
    prod_envelope = 1.0 + sum(
        abs(float(s.c) * float(t.c)) * x ** (2 * (s.k + t.k))
        * math.exp(float(s.a + t.a) * x * x)
        for s in e1.terms for t in e2.terms
    )
    assert abs(evaluate(e1 * e2, x) - evaluate(e1, x) * evaluate(e2, x)) \
        <= 1e-12 * prod_envelope


class TestDeltaX:
    def test_monomial(self):
        assert delta_x(algebra.monomial(1, 1)) == algebra.constant(2)

    def test_constant_maps_to_zero(self):
        assert delta_x(algebra.constant(1)).terms == ()

    def test_gaussian_fixed_point(self):
        gh = algebra.gaussian("1/2")
        assert delta_x(gh) == gh

    def test_matches_finite_differences(self):
        # restricted battery keeps function values small enough that the
        # h = 1e-5 central difference is accurate to the 1e-6 tolerance
        rng = random.Random(99)
        h = 1e-5
        for _ in range(20):
            e = rand_gexpr(rng, max_terms=3, max_k=2, rate_lo=-1, rate_hi=0, coeff_hi=2)
            de = delta_x(e)
            for x in (0.5, 1.0, 2.0):
                fd = (evaluate(e, x + h) - evaluate(e, x - h)) / (2 * h * x)
                assert abs(evaluate(de, x) - fd) <= 1e-6

    def test_half_rate_battery(self):
        e = algebra.gaussian("1/2", c=2, k=1)
        h = 1e-5
        for x in (0.5, 1.0, 2.0):
            fd = (evaluate(e, x + h) - evaluate(e, x - h)) / (2 * h * x)
            assert abs(evaluate(delta_x(e), x) - fd) <= 1e-6


class TestLimitAtZero:
    def test_polynomial(self):
        e = algebra.constant(1) + algebra.monomial(1, 1)
        assert limit_at_zero(e) == 1

    def test_vanishing_term(self):
        assert limit_at_zero(algebra.gaussian(1, c=1, k=2)) == 0

    def test_mixed(self):
        e = algebra.gaussian(-1, c=3) + algebra.constant(2)
        assert limit_at_zero(e) == 5

    def test_agrees_with_small_argument_evaluation(self):
        rng = random.Random(5)
        for _ in range(30):
            e = rand_gexpr(rng, rate_lo=-2, rate_hi=2, coeff_hi=4)
            assert all(abs(t.a) <= 10 for t in e.terms)
            assert abs(float(limit_at_zero(e)) - evaluate(e, 1e-8)) <= 1e-7
