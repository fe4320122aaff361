import pickle
import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringsombor.radicals import RadicalSum, radical_normalize, rational_sqrt


def squarefree_by_trial(s):
    # independent square-free check
    d = 2
    while d * d <= s:
        if s % (d * d) == 0:
            return False
        d += 1
    return True


class TestNormalize:
    def test_examples(self):
        assert radical_normalize(18) == (3, 2)
        assert radical_normalize(85) == (1, 85)
        assert radical_normalize(7**2 * 2**4 * 3) == (28, 3)

    def test_edges(self):
        assert radical_normalize(1) == (1, 1)
        assert radical_normalize(25) == (5, 1)
        assert radical_normalize(2) == (1, 2)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            radical_normalize(0)

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=500)
    def test_canonical(self, m):
        c, s = radical_normalize(m)
        assert c * c * s == m
        assert squarefree_by_trial(s)

    def test_large_square_times_two(self):
        # the shape the complement-identity cross term produces
        k = 199 * 66 * 132
        assert radical_normalize(2 * k * k) == (k, 2)


def rsums(max_terms=4):
    radicand = st.integers(min_value=1, max_value=400)
    coeff = st.fractions(min_value=-50, max_value=50, max_denominator=12)
    return st.dictionaries(radicand, coeff, max_size=max_terms).map(RadicalSum)


class TestArithmetic:
    def test_add_like_terms(self):
        two_rt2 = RadicalSum.sqrt(2) * 2
        three_rt2 = RadicalSum.sqrt(2) * 3
        assert two_rt2 + three_rt2 == RadicalSum.sqrt(2) * 5

    def test_normalization_on_add(self):
        assert RadicalSum.sqrt(8) + RadicalSum.sqrt(2) == RadicalSum.sqrt(2) * 3

    def test_distinct_radicands_stay_apart(self):
        a = RadicalSum.sqrt(2) * 218 + RadicalSum.sqrt(85) * 16
        b = RadicalSum.sqrt(2) * 218 + RadicalSum.sqrt(86) * 16
        assert a == a
        assert a != b

    def test_cancellation(self):
        v = RadicalSum.sqrt(3) - RadicalSum.sqrt(3)
        assert v.is_zero
        assert v == 0

    def test_mul_combines_radicands(self):
        assert RadicalSum.sqrt(6) * RadicalSum.sqrt(10) == RadicalSum.sqrt(15) * 2
        assert RadicalSum.sqrt(2) * RadicalSum.sqrt(2) == 2

    def test_scalar_ops(self):
        v = RadicalSum.sqrt(5) * Fraction(3, 2)
        assert v + v == RadicalSum.sqrt(5) * 3
        assert v * 0 == RadicalSum()
        assert 2 * v == RadicalSum.sqrt(5) * 3

    def test_sum_builtin(self):
        parts = [RadicalSum.sqrt(2), RadicalSum.sqrt(8), RadicalSum.from_rational(1)]
        assert sum(parts) == RadicalSum({2: 3, 1: 1})

    @given(rsums(), rsums(), rsums())
    @settings(max_examples=200)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + RadicalSum() == a
        assert a - a == RadicalSum()

    @given(rsums(), st.fractions(min_value=-20, max_value=20, max_denominator=9))
    @settings(max_examples=200)
    def test_scale_distributes(self, a, c):
        assert (a + a) * c == a * c + a * c

    def test_as_rational(self):
        assert RadicalSum.from_rational(Fraction(7, 3)).as_rational() == Fraction(7, 3)
        assert RadicalSum().as_rational() == 0
        with pytest.raises(ValueError):
            (RadicalSum.sqrt(2)).as_rational()

    def test_hashable(self):
        assert hash(RadicalSum.sqrt(8)) == hash(RadicalSum.sqrt(2) * 2)

    def test_pickle_round_trip(self):
        v = RadicalSum({2: Fraction(33, 2), 1: 20})
        assert pickle.loads(pickle.dumps(v)) == v


class TestToFloat:
    def test_five_sqrt_two(self):
        v = RadicalSum.sqrt(2) * 5
        assert abs(v.to_float() - 7.0710678118654755) < 1e-12

    def test_zero(self):
        assert RadicalSum().to_float() == 0.0

    def test_mixed_sum_high_precision(self):
        # oracle: 50-digit decimal evaluation of 218*sqrt(2) + 16*sqrt(85)
        getcontext().prec = 50
        expected = 218 * Decimal(2).sqrt() + 16 * Decimal(85).sqrt()
        v = RadicalSum.sqrt(2) * 218 + RadicalSum.sqrt(85) * 16
        assert abs(v.to_float() - float(expected)) < 1e-9


class TestRationalSqrt:
    def test_perfect_square_fraction(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)

    def test_integer(self):
        assert rational_sqrt(200) == RadicalSum.sqrt(2) * 10

    def test_half(self):
        assert rational_sqrt(Fraction(1, 2)) == RadicalSum({2: Fraction(1, 2)})

    def test_zero_and_negative(self):
        assert rational_sqrt(0) == RadicalSum()
        with pytest.raises(ValueError):
            rational_sqrt(-1)

    @given(st.fractions(min_value=0, max_value=300, max_denominator=40))
    @settings(max_examples=200)
    def test_square_recovers(self, v):
        root = rational_sqrt(v)
        assert root * root == RadicalSum.from_rational(v)


class TestText:
    def test_render_examples(self):
        assert RadicalSum().render() == "0"
        assert (RadicalSum.from_rational(20) + RadicalSum.sqrt(2) * 12).render() == "20 + 12*sqrt(2)"
        assert (RadicalSum.sqrt(5) * 54).render() == "54*sqrt(5)"
        assert RadicalSum({2: Fraction(33, 2)}).render() == "33/2*sqrt(2)"
        assert (RadicalSum.sqrt(2) * -1).render() == "-1*sqrt(2)"

    def test_radicands_ascend(self):
        v = RadicalSum.sqrt(85) * 16 + RadicalSum.sqrt(2) * 218
        assert v.render() == "218*sqrt(2) + 16*sqrt(85)"

    def test_parse_inverse(self):
        for text in ("0", "20 + 12*sqrt(2)", "-3/2 + 1/2*sqrt(3) + 7*sqrt(10)"):
            assert RadicalSum.parse(text).render() == text

    def test_parse_rejects_junk(self):
        for bad in ("", "sqrt", "1*sqrt(8)", "2*sqrt(2) + 3*sqrt(2)", "0*sqrt(2)", "1*sqrt(2"):
            with pytest.raises(ValueError):
                RadicalSum.parse(bad)

    def test_round_trip_fuzz(self):
        rng = random.Random(20240817)
        squarefree = [s for s in range(1, 200) if radical_normalize(s)[0] == 1]
        for _ in range(2000):
            terms = {}
            for s in rng.sample(squarefree, rng.randint(0, 5)):
                num = rng.randint(-10**6, 10**6)
                den = rng.randint(1, 1000)
                if num:
                    terms[s] = Fraction(num, den)
            v = RadicalSum(terms)
            assert RadicalSum.parse(v.render()) == v

    @given(rsums())
    @settings(max_examples=300)
    def test_round_trip_property(self, v):
        assert RadicalSum.parse(v.render()) == v
