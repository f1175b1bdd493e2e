"""Exact complex rationals: the coefficient ring of every series term."""
from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction]


class ComplexRational:
    """re + im·i with both parts exact fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @classmethod
    def coerce(cls, value: "ScalarLike") -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def is_positive_oriented(self) -> bool:
        """Real part positive, or purely imaginary with positive imaginary part."""
        return self.re > 0 or (self.re == 0 and self.im > 0)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __pos__(self) -> "ComplexRational":
        return self

    def __add__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = other.norm2()
        if n == 0:
            raise ZeroDivisionError("division by the zero coefficient")
        num = self * other.conjugate()
        return ComplexRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "ComplexRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ComplexRational(1) / (self ** -exponent)
        result = ComplexRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ComplexRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imaginary_text(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{_imaginary_text(abs(self.im))})"


def _imaginary_text(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


ScalarLike = Union[int, Fraction, ComplexRational]

IMAGINARY_UNIT = ComplexRational(0, 1)
