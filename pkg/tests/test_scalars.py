from fractions import Fraction

import pytest

from nsproj.core.scalars import IMAGINARY_UNIT, ComplexRational


def test_arithmetic_is_exact():
    a = ComplexRational(Fraction(1, 2), 3)
    b = ComplexRational(2, -1)
    assert a + b == ComplexRational(Fraction(5, 2), 2)
    assert a - b == ComplexRational(Fraction(-3, 2), 4)
    assert a * b == ComplexRational(4, Fraction(11, 2))
    assert (a / b) * b == a
    assert IMAGINARY_UNIT * IMAGINARY_UNIT == -1


def test_mixed_with_rationals():
    assert ComplexRational(3) == 3
    assert 1 - ComplexRational(0, 1) == ComplexRational(1, -1)
    assert Fraction(1, 3) * ComplexRational(3, 3) == ComplexRational(1, 1)
    assert ComplexRational(2, 1) ** 2 == ComplexRational(3, 4)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ComplexRational(1) / ComplexRational(0)


@pytest.mark.parametrize(
    "value, text",
    [
        (ComplexRational(0), "0"),
        (ComplexRational(Fraction(-3, 2)), "-3/2"),
        (ComplexRational(0, 1), "i"),
        (ComplexRational(0, -1), "-i"),
        (ComplexRational(0, Fraction(3, 2)), "3/2*i"),
        (ComplexRational(2, 1), "(2+i)"),
        (ComplexRational(1, -1), "(1-i)"),
    ],
)
def test_canonical_text(value, text):
    assert str(value) == text


def test_orientation_and_norm():
    assert ComplexRational(1, -5).is_positive_oriented()
    assert ComplexRational(0, 2).is_positive_oriented()
    assert not ComplexRational(0, -2).is_positive_oriented()
    assert not ComplexRational(-1, 5).is_positive_oriented()
    assert ComplexRational(3, 4).norm2() == 25
    assert ComplexRational(3, 4).conjugate() == ComplexRational(3, -4)


def test_hash_matches_rationals():
    assert hash(ComplexRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({ComplexRational(1), ComplexRational(1, 0), ComplexRational(0, 1)}) == 2


def test_rejects_floats():
    with pytest.raises(TypeError):
        ComplexRational.coerce(0.5)
