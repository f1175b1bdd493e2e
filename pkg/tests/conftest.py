import random
from fractions import Fraction

import pytest

from nsproj.config import FieldConfig
from nsproj.core.context import using_field_config
from nsproj.core.hypernumber import EPS, HyperNumber
from nsproj.core.projective import HyperVector
from nsproj.core.scalars import ComplexRational


def hv(*entries) -> HyperVector:
    return HyperVector.of(*entries)


def rational(rng: random.Random, lo: int = -9, hi: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(lo, hi), rng.randint(1, 4))
        if value or not nonzero:
            return value


def small_series(rng: random.Random, exponents=(0, 1, 2), max_terms: int = 2, real: bool = True) -> HyperNumber:
    """A few terms with the given candidate exponents, the first one always present."""
    chosen = [exponents[0]] + rng.sample(list(exponents[1:]), rng.randint(0, max_terms - 1))
    terms = []
    for q in chosen:
        re = rational(rng, nonzero=True)
        im = Fraction(0) if real else rational(rng)
        terms.append((Fraction(q), ComplexRational(re, im)))
    return HyperNumber(terms)


def proportional(a, b) -> bool:
    """Two standard tuples of length 3 span the same projective point."""
    a = [ComplexRational.coerce(x) if not isinstance(x, HyperNumber) else x.shadow() for x in a]
    b = [ComplexRational.coerce(x) if not isinstance(x, HyperNumber) else x.shadow() for x in b]
    return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(3)) and any(a) and any(b)


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def real_mode():
    with using_field_config(FieldConfig(real=True)) as config:
        yield config


@pytest.fixture
def eps():
    return EPS


def random_vector(rng: random.Random, real: bool = False) -> HyperVector:
    while True:
        entries = []
        for _ in range(3):
            if rng.random() < 0.2:
                entries.append(HyperNumber.zero())
                continue
            k = rng.randint(-2, 2)
            entries.append(small_series(rng, exponents=(k, k + 1, k + 2), max_terms=2, real=real))
        v = HyperVector(tuple(entries))
        if not v.is_zero:
            return v


def standard_vector(rng: random.Random, real: bool = True) -> HyperVector:
    def entry():
        return ComplexRational(rational(rng), 0 if real else rational(rng))

    return HyperVector((entry(), entry(), entry()))


def random_scale(rng: random.Random, real: bool = False) -> HyperNumber:
    k = rng.randint(-2, 2)
    return small_series(rng, exponents=(k, k + 1), max_terms=2, real=real)


