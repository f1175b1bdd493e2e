"""Truncated Levi-Civita series: the computable non-Archimedean field.

A HyperNumber is a finite sum of terms c·eps^q with rational exponents q and
exact complex-rational coefficients c, kept sorted by exponent. eps is a fixed
positive infinitesimal, so the leading (lowest) exponent decides whether a
value is infinitesimal, appreciable or unlimited, and the eps^0 coefficient is
its shadow.

Every operation keeps at most ``truncation_order`` terms counted from the
leading one (relative truncation). Monomial factors only shift exponents, so
truncation commutes with rescaling by c·eps^q.
"""
import logging
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import integer_nthroot

from nsproj.core.context import get_field_config
from nsproj.core.scalars import ComplexRational, ScalarLike
from nsproj.errors import (
    DivisionByZero,
    InexactRoot,
    InvalidRootOrder,
    NotRealPositive,
    NotRealValued,
    UnlimitedNumber,
    ZeroArgument,
)

logger = logging.getLogger(__name__)

Term = Tuple[Fraction, ComplexRational]


class NumberClass(str, Enum):
    zero = "zero"
    infinitesimal = "infinitesimal"
    appreciable = "appreciable"
    unlimited = "unlimited"

    @property
    def is_infinitesimal(self) -> bool:
        """Membership in the ideal of infinitesimals, which contains 0."""
        return self in (NumberClass.zero, NumberClass.infinitesimal)

    @property
    def is_limited(self) -> bool:
        return self is not NumberClass.unlimited


def _truncation_order() -> int:
    return get_field_config().truncation_order


def _collect(acc: Dict[Fraction, ComplexRational]) -> List[Term]:
    return sorted((q, c) for q, c in acc.items() if c)


def _convolve(a: Sequence[Term], b: Sequence[Term], cutoff: Optional[Fraction] = None) -> List[Term]:
    acc: Dict[Fraction, ComplexRational] = {}
    for qa, ca in a:
        for qb, cb in b:
            q = qa + qb
            if cutoff is not None and q > cutoff:
                continue
            prev = acc.get(q)
            acc[q] = ca * cb if prev is None else prev + ca * cb
    return _collect(acc)


_CUTOFF_DOUBLINGS = 2


def _series_up_to(u: Sequence[Term], coefficient: Callable[[int], Fraction], cutoff: Fraction) -> List[Term]:
    """Every term of Σ coefficient(n)·uⁿ with exponent at or below ``cutoff``, exactly."""
    acc: Dict[Fraction, ComplexRational] = {Fraction(0): ComplexRational(coefficient(0))}
    power: List[Term] = [(Fraction(0), ComplexRational(1))]
    n = 0
    while True:
        n += 1
        power = _convolve(power, u, cutoff)
        if not power:
            return _collect(acc)
        a = coefficient(n)
        if a == 0:
            continue
        for q, c in power:
            prev = acc.get(q)
            acc[q] = c * a if prev is None else prev + c * a


def _series_in(u: Sequence[Term], coefficient: Callable[[int], Fraction], order: int) -> List[Term]:
    """Σ coefficient(n)·uⁿ for a series u with positive exponents, to ``order`` nonzero terms.

    Without cancellation the ``order`` lowest exponents lie at or below
    (order − 1)·min(u). When terms cancel the cutoff is doubled, at most
    ``_CUTOFF_DOUBLINGS`` times, and a sum still shorter after that is
    returned as it stands.
    """
    if not u:
        return _series_up_to(u, coefficient, Fraction(0))
    cutoff = max(order - 1, 1) * u[0][0]
    for _ in range(_CUTOFF_DOUBLINGS):
        terms = _series_up_to(u, coefficient, cutoff)
        if len(terms) >= order:
            return terms
        logger.debug("series cancelled below %s, doubling the cutoff", cutoff)
        cutoff *= 2
    return _series_up_to(u, coefficient, cutoff)


class HyperNumber:
    """An element of the truncated Levi-Civita field."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[Union[int, Fraction], ScalarLike]] = ()):
        acc: Dict[Fraction, ComplexRational] = {}
        for q, c in terms:
            q = Fraction(q)
            c = ComplexRational.coerce(c)
            acc[q] = acc[q] + c if q in acc else c
        object.__setattr__(self, "terms", tuple(_collect(acc)[: _truncation_order()]))

    def __setattr__(self, name, value):
        raise AttributeError("HyperNumber is immutable")

    @classmethod
    def _from_sorted(cls, terms: Sequence[Term], truncate: bool = True) -> "HyperNumber":
        obj = object.__new__(cls)
        if truncate:
            terms = terms[: _truncation_order()]
        object.__setattr__(obj, "terms", tuple(terms))
        return obj

    # constructors

    @classmethod
    def zero(cls) -> "HyperNumber":
        return cls._from_sorted(())

    @classmethod
    def standard(cls, value: ScalarLike) -> "HyperNumber":
        c = ComplexRational.coerce(value)
        return cls._from_sorted(((Fraction(0), c),) if c else ())

    @classmethod
    def eps(cls, exponent: Union[int, Fraction] = 1) -> "HyperNumber":
        return cls._from_sorted(((Fraction(exponent), ComplexRational(1)),))

    @classmethod
    def monomial(cls, coefficient: ScalarLike, exponent: Union[int, Fraction]) -> "HyperNumber":
        c = ComplexRational.coerce(coefficient)
        return cls._from_sorted(((Fraction(exponent), c),) if c else ())

    @classmethod
    def coerce(cls, value: Union["HyperNumber", ScalarLike]) -> "HyperNumber":
        if isinstance(value, HyperNumber):
            return value
        return cls.standard(value)

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def valuation(self) -> Optional[Fraction]:
        """Leading exponent; None for zero."""
        return self.terms[0][0] if self.terms else None

    @property
    def leading_coefficient(self) -> Optional[ComplexRational]:
        return self.terms[0][1] if self.terms else None

    def leading_term(self) -> "HyperNumber":
        return HyperNumber._from_sorted(self.terms[:1])

    @property
    def is_real(self) -> bool:
        return all(c.is_real for _, c in self.terms)

    @property
    def is_standard(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def classify(self) -> NumberClass:
        if not self.terms:
            return NumberClass.zero
        q = self.terms[0][0]
        if q > 0:
            return NumberClass.infinitesimal
        if q == 0:
            return NumberClass.appreciable
        return NumberClass.unlimited

    def shadow(self) -> ComplexRational:
        if self.classify() is NumberClass.unlimited:
            raise UnlimitedNumber(f"{self} is unlimited and has no shadow")
        for q, c in self.terms:
            if q == 0:
                return c
            if q > 0:
                break
        return ComplexRational(0)

    # arithmetic

    def _shift(self, exponent: Fraction, coefficient: ComplexRational) -> "HyperNumber":
        """Exact product with coefficient·eps^exponent."""
        if not coefficient:
            return HyperNumber.zero()
        return HyperNumber._from_sorted(
            [(q + exponent, c * coefficient) for q, c in self.terms], truncate=False
        )

    def __neg__(self) -> "HyperNumber":
        return HyperNumber._from_sorted([(q, -c) for q, c in self.terms], truncate=False)

    def __pos__(self) -> "HyperNumber":
        return self

    def __add__(self, other):
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc: Dict[Fraction, ComplexRational] = dict(self.terms)
        for q, c in other.terms:
            prev = acc.get(q)
            acc[q] = c if prev is None else prev + c
        return HyperNumber._from_sorted(_collect(acc))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not other.terms:
            return HyperNumber.zero()
        if len(other.terms) == 1:
            return self._shift(*other.terms[0])
        if len(self.terms) == 1:
            return other._shift(*self.terms[0])
        return HyperNumber._from_sorted(_convolve(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) == 1:
            q, c = other.terms[0]
            return self._shift(-q, ComplexRational(1) / c)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if isinstance(exponent, HyperNumber):
            if not exponent.is_standard or not exponent.shadow().is_real:
                return NotImplemented
            exponent = exponent.shadow().re
        if not isinstance(exponent, Rational):
            raise TypeError(f"exponents must be rational, got {exponent!r}")
        exponent = Fraction(exponent)
        if exponent.denominator != 1:
            return self.nth_root(exponent.denominator) ** exponent.numerator
        exponent = exponent.numerator
        if exponent < 0:
            return self.reciprocal() ** -exponent
        result = HyperNumber.standard(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def conjugate(self) -> "HyperNumber":
        return HyperNumber._from_sorted([(q, c.conjugate()) for q, c in self.terms], truncate=False)

    def abs2(self) -> "HyperNumber":
        """z·conj(z), a real value for every z."""
        return self * self.conjugate()

    def reciprocal(self) -> "HyperNumber":
        if not self.terms:
            raise DivisionByZero("reciprocal of 0")
        order = _truncation_order()
        q0, c0 = self.terms[0]
        inv_c0 = ComplexRational(1) / c0
        u = [(q - q0, c * inv_c0) for q, c in self.terms[1:]]
        series = _series_in(u, lambda n: Fraction((-1) ** n), order)
        return HyperNumber._from_sorted([(q - q0, c * inv_c0) for q, c in series])

    def nth_root(self, n: int) -> "HyperNumber":
        """The real n-th root of a real value with positive leading coefficient."""
        if not isinstance(n, int) or n < 1:
            raise InvalidRootOrder(f"root order must be a positive integer, got {n!r}")
        if not self.terms:
            return self
        if n == 1:
            return self
        q0, c0 = self.terms[0]
        if not self.is_real or c0.re <= 0:
            raise NotRealPositive(f"root({self}, {n}) needs a real value with positive leading coefficient")
        num, num_exact = integer_nthroot(c0.re.numerator, n)
        den, den_exact = integer_nthroot(c0.re.denominator, n)
        if not (num_exact and den_exact):
            raise InexactRoot(f"{c0} has no rational root of order {n}")
        r0 = ComplexRational(Fraction(int(num), int(den)))
        inv_c0 = ComplexRational(1) / c0
        u = [(q - q0, c * inv_c0) for q, c in self.terms[1:]]
        alpha = Fraction(1, n)

        def binomial(k: int) -> Fraction:
            value = Fraction(1)
            for j in range(k):
                value *= (alpha - j) / (j + 1)
            return value

        order = _truncation_order()
        logger.debug("root %d of %s kept to %d orders", n, self, order)
        series = _series_in(u, binomial, order)
        shift = q0 / n
        return HyperNumber._from_sorted([(q + shift, c * r0) for q, c in series])

    def __abs__(self) -> "HyperNumber":
        self._require_real("abs")
        if self.terms and self.terms[0][1].re < 0:
            return -self
        return self

    # ordering (real values only)

    def _require_real(self, what: str) -> None:
        if not self.is_real:
            raise NotRealValued(f"{what} is only defined for real values, got {self}")

    def _compare(self, other) -> int:
        other = HyperNumber.coerce(other)
        self._require_real("comparison")
        other._require_real("comparison")
        diff = self - other
        if not diff.terms:
            return 0
        return 1 if diff.terms[0][1].re > 0 else -1

    def __lt__(self, other) -> bool:
        return self._compare(other) < 0

    def __le__(self, other) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other) -> bool:
        return self._compare(other) >= 0

    # equality and text

    def __eq__(self, other) -> bool:
        try:
            other = HyperNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if not self.terms:
            return hash(0)
        if self.is_standard:
            return hash(self.terms[0][1])
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"HyperNumber('{self}')"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for index, (q, c) in enumerate(self.terms):
            text = _term_text(q, c)
            if index == 0:
                out = text
            elif text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out


def _exponent_text(q: Fraction) -> str:
    if q == 1:
        return "eps"
    if q.denominator == 1 and q > 0:
        return f"eps^{q.numerator}"
    return f"eps^({q})"


def _term_text(q: Fraction, c: ComplexRational) -> str:
    if q == 0:
        return str(c)
    power = _exponent_text(q)
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{c}*{power}"


EPS = HyperNumber.eps()
ZERO = HyperNumber.zero()
ONE = HyperNumber.standard(1)


# functional surface


def add(a: HyperNumber, b: HyperNumber) -> HyperNumber:
    return a + b


def sub(a: HyperNumber, b: HyperNumber) -> HyperNumber:
    return a - b


def neg(a: HyperNumber) -> HyperNumber:
    return -a


def mul(a: HyperNumber, b: HyperNumber) -> HyperNumber:
    return a * b


def conjugate(a: HyperNumber) -> HyperNumber:
    return a.conjugate()


def reciprocal(a: HyperNumber) -> HyperNumber:
    return a.reciprocal()


def nth_root(a: HyperNumber, n: int) -> HyperNumber:
    return a.nth_root(n)


def classify(a: HyperNumber) -> NumberClass:
    return a.classify()


def shadow(a: HyperNumber) -> ComplexRational:
    return a.shadow()


def infinitely_close(a: HyperNumber, b: HyperNumber) -> bool:
    return (HyperNumber.coerce(a) - b).classify().is_infinitesimal


def limited_distance(a: HyperNumber, b: HyperNumber) -> bool:
    return (HyperNumber.coerce(a) - b).classify().is_limited


# the halo of b is {a : a ≃ b}, its galaxy {a : a − b limited}
in_halo = infinitely_close
in_galaxy = limited_distance


def in_magnitude(s: HyperNumber, r: HyperNumber) -> bool:
    """Whether r/s is appreciable."""
    s, r = HyperNumber.coerce(s), HyperNumber.coerce(r)
    if s.is_zero or r.is_zero:
        raise ZeroArgument("magnitude is only defined for nonzero numbers")
    return s.valuation == r.valuation


def is_almost_real(z: HyperNumber) -> bool:
    """Limited and infinitely close to a real number."""
    z = HyperNumber.coerce(z)
    return z.classify().is_limited and z.shadow().is_real
