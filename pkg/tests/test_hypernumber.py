import random
from fractions import Fraction

import pytest

from conftest import rational, small_series
from nsproj.config import FieldConfig
from nsproj.core.context import using_field_config
from nsproj.core.hypernumber import (
    EPS,
    HyperNumber,
    NumberClass,
    add,
    classify,
    in_galaxy,
    in_halo,
    in_magnitude,
    infinitely_close,
    is_almost_real,
    limited_distance,
    mul,
    nth_root,
    reciprocal,
    shadow,
)
from nsproj.core.scalars import ComplexRational
from nsproj.dsl.interpreter import evaluate_expression
from nsproj.errors import (
    DivisionByZero,
    InexactRoot,
    InvalidRootOrder,
    NotRealPositive,
    NotRealValued,
    UnlimitedNumber,
    ZeroArgument,
)

I = ComplexRational(0, 1)


def series(*terms) -> HyperNumber:
    return HyperNumber(terms)


class TestArithmetic:
    def test_basic_identities(self):
        assert add(EPS, EPS) == HyperNumber.monomial(2, 1)
        assert mul(EPS, EPS ** -1) == 1
        assert (1 + EPS) * (1 - EPS) == 1 - EPS ** 2
        assert EPS - EPS == 0
        assert (EPS / EPS).is_standard

    def test_reciprocal_is_geometric_series(self):
        r = reciprocal(1 + EPS)
        assert r.terms == tuple((Fraction(k), ComplexRational((-1) ** k)) for k in range(8))
        assert ((1 + EPS) * r - 1).valuation >= 8

    def test_reciprocal_of_monomial_is_exact(self):
        assert reciprocal(HyperNumber.monomial(4, Fraction(-3, 2))) == HyperNumber.monomial(Fraction(1, 4), Fraction(3, 2))

    def test_reciprocal_of_zero(self):
        with pytest.raises(DivisionByZero):
            reciprocal(HyperNumber.zero())
        with pytest.raises(DivisionByZero):
            EPS / 0

    def test_division_by_monomial_is_a_shift(self):
        x = 1 + 3 * EPS + EPS ** 5
        assert x / EPS ** 2 == series((-2, 1), (-1, 3), (3, 1))

    def test_truncation_order_is_respected(self):
        with using_field_config(FieldConfig(truncation_order=3)):
            r = reciprocal(1 + EPS)
            assert len(r.terms) == 3
            assert r == 1 - EPS + EPS ** 2
        assert len(reciprocal(1 + EPS).terms) == 8

    def test_reciprocal_keeps_full_order_through_cancellation(self):
        # (1 - eps) / (1 - eps^3): every eps^(3k+2) term cancels
        expected = [(0, 1), (1, -1), (3, 1), (4, -1), (6, 1), (7, -1), (9, 1), (10, -1)]
        r = reciprocal(1 + EPS + EPS ** 2)
        assert len(r.terms) == 8
        assert r.terms == tuple((Fraction(q), ComplexRational(c)) for q, c in expected)
        assert ((1 + EPS + EPS ** 2) * r - 1).valuation >= 8

    def test_powers(self):
        assert (1 + EPS) ** 3 == 1 + 3 * EPS + 3 * EPS ** 2 + EPS ** 3
        assert (2 * EPS) ** -2 == HyperNumber.monomial(Fraction(1, 4), -2)
        assert EPS ** Fraction(1, 2) == HyperNumber.eps(Fraction(1, 2))
        assert (EPS ** 2) ** HyperNumber.standard(Fraction(1, 2)) == EPS

    def test_non_rational_exponents_are_rejected(self):
        with pytest.raises(TypeError):
            EPS ** 2.5
        with pytest.raises(TypeError):
            EPS ** 2.0
        assert EPS ** Fraction(4, 2) == EPS ** 2

    def test_complex_arithmetic(self):
        z = series((0, ComplexRational(2, 1)), (1, ComplexRational(1, -1)))
        assert z.conjugate() == series((0, ComplexRational(2, -1)), (1, ComplexRational(1, 1)))
        assert z.abs2().is_real
        assert z.abs2().shadow() == 5


class TestRoots:
    def test_monomial_roots(self):
        assert nth_root(EPS ** 2, 2) == EPS
        assert nth_root(4 * EPS ** 2, 2) == 2 * EPS
        assert nth_root(HyperNumber.standard(Fraction(9, 4)), 2) == Fraction(3, 2)
        assert nth_root(EPS, 3) == HyperNumber.eps(Fraction(1, 3))
        assert nth_root(EPS, 3).classify() is NumberClass.infinitesimal

    def test_binomial_series(self):
        r = nth_root(1 + EPS, 2)
        assert r.terms[:3] == (
            (Fraction(0), ComplexRational(1)),
            (Fraction(1), ComplexRational(Fraction(1, 2))),
            (Fraction(2), ComplexRational(Fraction(-1, 8))),
        )
        assert (r * r - (1 + EPS)).valuation >= 8

    def test_root_of_exact_square_is_exact(self):
        assert nth_root((1 + EPS) ** 2, 2) == 1 + EPS
        assert nth_root((3 - EPS) ** 3, 3) == 3 - EPS

    def test_root_of_zero_and_first_root(self):
        assert nth_root(HyperNumber.zero(), 2) == 0
        assert nth_root(1 + EPS, 1) == 1 + EPS

    def test_root_errors(self):
        with pytest.raises(NotRealPositive):
            nth_root(HyperNumber.standard(-1), 2)
        with pytest.raises(NotRealPositive):
            nth_root(HyperNumber.standard(I), 2)
        with pytest.raises(NotRealPositive):
            nth_root(-EPS + EPS ** 2, 2)
        with pytest.raises(InexactRoot):
            nth_root(HyperNumber.standard(2), 2)
        with pytest.raises(InvalidRootOrder):
            nth_root(EPS, 0)
        with pytest.raises(InvalidRootOrder):
            nth_root(EPS, -2)
        assert issubclass(InvalidRootOrder, ValueError)


class TestClassification:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (HyperNumber.zero(), NumberClass.zero),
            (EPS, NumberClass.infinitesimal),
            (EPS ** Fraction(1, 3), NumberClass.infinitesimal),
            (3 + EPS, NumberClass.appreciable),
            (EPS ** -1, NumberClass.unlimited),
            (EPS ** -1 + 5, NumberClass.unlimited),
        ],
    )
    def test_classify(self, value, expected):
        assert classify(value) is expected

    def test_class_predicates(self):
        assert NumberClass.zero.is_infinitesimal and NumberClass.zero.is_limited
        assert NumberClass.appreciable.is_limited and not NumberClass.appreciable.is_infinitesimal
        assert not NumberClass.unlimited.is_limited

    def test_shadow(self):
        z = series((0, ComplexRational(2, 1)), (1, ComplexRational(1, -1)))
        assert shadow(z) == ComplexRational(2, 1)
        assert shadow(EPS) == 0
        assert shadow(HyperNumber.zero()) == 0
        with pytest.raises(UnlimitedNumber):
            shadow(EPS ** -1)

    def test_relations(self):
        assert infinitely_close(1, 1 + EPS)
        assert not infinitely_close(1, 2)
        assert limited_distance(1, 2 + EPS)
        assert not limited_distance(0, EPS ** -1)
        assert in_halo is infinitely_close and in_galaxy is limited_distance

    def test_magnitude(self):
        assert in_magnitude(EPS ** -1, 5 * EPS ** -1)
        assert in_magnitude(EPS, 7 * EPS + EPS ** 2)
        assert not in_magnitude(EPS, EPS ** 2)
        with pytest.raises(ZeroArgument):
            in_magnitude(HyperNumber.zero(), EPS)

    def test_almost_real(self):
        assert is_almost_real(1 + I * EPS)
        assert not is_almost_real(HyperNumber.standard(I))
        assert not is_almost_real(EPS ** -1)

    def test_leading_term(self):
        assert (3 * EPS ** -1 + 2 - EPS).leading_term() == 3 * EPS ** -1
        assert HyperNumber.zero().leading_term() == 0


class TestOrdering:
    def test_infinitesimals_sit_below_every_positive_rational(self):
        assert EPS > 0
        assert EPS < Fraction(1, 1000)
        assert 1 - EPS < 1
        assert EPS ** -1 > 10 ** 9
        assert -EPS ** -1 < -(10 ** 9)

    def test_abs(self):
        assert abs(-EPS) == EPS
        assert abs(EPS - 1) == 1 - EPS

    def test_complex_values_are_unordered(self):
        with pytest.raises(NotRealValued):
            HyperNumber.standard(I) < 1
        with pytest.raises(NotRealValued):
            abs(HyperNumber.standard(I))


class TestText:
    @pytest.mark.parametrize(
        "value, text",
        [
            (1 - Fraction(3, 2) * EPS + EPS ** 2, "1 - 3/2*eps + eps^2"),
            (EPS ** -1, "eps^(-1)"),
            (EPS ** Fraction(1, 2), "eps^(1/2)"),
            (HyperNumber.zero(), "0"),
            (-EPS, "-eps"),
            (series((0, ComplexRational(2, 1)), (1, ComplexRational(1, -1))), "(2+i) + (1-i)*eps"),
            (HyperNumber.monomial(ComplexRational(0, Fraction(-3, 2)), 1), "-3/2*i*eps"),
        ],
    )
    def test_canonical_text(self, value, text):
        assert str(value) == text

    @pytest.mark.parametrize(
        "value",
        [
            1 - Fraction(3, 2) * EPS + EPS ** 2,
            EPS ** -1,
            EPS ** Fraction(-1, 2) - 4,
            series((0, ComplexRational(2, 1)), (1, ComplexRational(1, -1))),
            HyperNumber.monomial(ComplexRational(0, Fraction(-3, 2)), 1),
        ],
    )
    def test_text_reads_back(self, value):
        assert evaluate_expression(str(value)) == value

    def test_repr(self):
        assert repr(EPS) == "HyperNumber('eps')"

    def test_hash_follows_equality(self):
        assert hash(HyperNumber.standard(3)) == hash(3)
        assert hash(HyperNumber.zero()) == hash(0)
        assert len({EPS, HyperNumber.eps(1), 1 + EPS - 1}) == 1


def _random_limited(rng: random.Random) -> HyperNumber:
    value = small_series(rng, exponents=(rng.choice([0, 0, 1]), Fraction(1, 2), 1, 2, 3), max_terms=4,
                         real=rng.random() < 0.5)
    return value


def _random_of_class(rng: random.Random, kind: NumberClass) -> HyperNumber:
    lead = {
        NumberClass.infinitesimal: rng.choice([Fraction(1, 2), 1, 2]),
        NumberClass.appreciable: 0,
        NumberClass.unlimited: rng.choice([-2, -1, Fraction(-1, 2)]),
    }[kind]
    return small_series(rng, exponents=(lead, lead + 1, lead + 2), max_terms=3, real=rng.random() < 0.5)


class TestProperties:
    def test_shadow_is_a_homomorphism_on_limited_numbers(self, rng):
        for _ in range(1000):
            a, b = _random_limited(rng), _random_limited(rng)
            sa, sb = shadow(a), shadow(b)
            assert shadow(a + b) == sa + sb
            assert shadow(a - b) == sa - sb
            assert shadow(a * b) == sa * sb
            assert shadow(a.conjugate()) == sa.conjugate()
            n = rng.randint(1, 4)
            assert shadow(b ** n) == sb ** n
            if sb:
                assert shadow(a / b) == sa / sb
            if a.is_real and b.is_real and a <= b:
                assert sa.re <= sb.re

    def test_classification_algebra(self, rng):
        inf, app, unl = NumberClass.infinitesimal, NumberClass.appreciable, NumberClass.unlimited
        for _ in range(300):
            i1, i2 = _random_of_class(rng, inf), _random_of_class(rng, inf)
            a1, a2 = _random_of_class(rng, app), _random_of_class(rng, app)
            u1, u2 = _random_of_class(rng, unl), _random_of_class(rng, unl)
            assert classify(i1 + i2).is_infinitesimal
            assert classify(i1 * i2) is inf
            assert classify(i1 * a1) is inf
            assert classify(a1 * a2) is app
            assert classify(a1 + i1) is app
            assert classify(a1 + a2).is_limited
            assert classify(u1 + a1) is unl
            assert classify(u1 + i1) is unl
            assert classify(u1 * a1) is unl
            assert classify(u1 * u2) is unl
            assert classify(reciprocal(i1)) is unl
            assert classify(reciprocal(u1)) is inf
            assert classify(reciprocal(a1)) is app

    def test_truncation_is_exact_below_the_order(self, rng):
        exponents = [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3)]

        def raw(count):
            return [(q, ComplexRational(rational(rng, nonzero=True), rational(rng))) for q in rng.sample(exponents, count)]

        def oracle(*parts):
            acc = {}
            for q, c in parts:
                acc[q] = acc.get(q, ComplexRational(0)) + c
            return tuple(sorted((q, c) for q, c in acc.items() if c))

        for _ in range(500):
            ta, tb = raw(rng.randint(1, 2)), raw(rng.randint(1, 3))
            a, b = HyperNumber(ta), HyperNumber(tb)
            assert (a + b).terms == oracle(*ta, *tb)
            assert (a - b).terms == oracle(*ta, *[(q, -c) for q, c in tb])
            assert (a * b).terms == oracle(*[(qa + qb, ca * cb) for qa, ca in ta for qb, cb in tb])
