"""Runtime values of construction scripts and the coercions builtins apply."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from nsproj.core.conics import ConicForm
from nsproj.core.crossratio import PlanarPair
from nsproj.core.hypernumber import HyperNumber
from nsproj.core.limits import NotRemovable
from nsproj.core.projective import HyperVector, projective_shadow
from nsproj.core.transforms import HyperMatrix
from nsproj.errors import NotRemovableError, TypeMismatch


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate, with the quantity that decided it."""

    holds: bool
    witness: Optional["Value"] = None
    note: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        return "true" if self.holds else "false"


Value = Union[HyperNumber, HyperVector, HyperMatrix, ConicForm, Enum, Verdict, NotRemovable]


def kind_of(value) -> str:
    if isinstance(value, HyperNumber):
        return "number"
    if isinstance(value, HyperVector):
        return "vector"
    if isinstance(value, HyperMatrix):
        return "matrix"
    if isinstance(value, ConicForm):
        return "conic"
    if isinstance(value, Verdict):
        return "verdict"
    if isinstance(value, NotRemovable):
        return "not_removable"
    if isinstance(value, Enum):
        return "class"
    return type(value).__name__


def as_number(value, what: str = "argument") -> HyperNumber:
    if isinstance(value, HyperNumber):
        return value
    if isinstance(value, NotRemovable):
        raise NotRemovableError(f"{what} is {value}")
    raise TypeMismatch(f"{what} must be a number, got a {kind_of(value)}")


def as_vector(value, what: str = "argument", length: Optional[int] = 3) -> HyperVector:
    if isinstance(value, HyperVector) and (length is None or len(value) == length):
        return value
    shape = "a vector" if length is None else f"a vector with {length} entries"
    raise TypeMismatch(f"{what} must be {shape}, got {describe(value)}")


def as_matrix(value, what: str = "argument") -> HyperMatrix:
    if isinstance(value, HyperMatrix):
        return value
    if isinstance(value, ConicForm):
        return value.matrix
    raise TypeMismatch(f"{what} must be a matrix, got a {kind_of(value)}")


def as_conic(value, what: str = "argument") -> ConicForm:
    if isinstance(value, ConicForm):
        return value
    if isinstance(value, HyperMatrix):
        return ConicForm(value)
    raise TypeMismatch(f"{what} must be a conic, got a {kind_of(value)}")


def as_pair(value, what: str = "argument") -> PlanarPair:
    vector = as_vector(value, what, length=2)
    return PlanarPair(vector.entries[0], vector.entries[1])


def as_integer(value, what: str = "argument") -> int:
    number = as_number(value, what)
    if number.is_standard:
        shadow = number.shadow()
        if shadow.is_real and shadow.re.denominator == 1:
            return int(shadow.re)
    raise TypeMismatch(f"{what} must be an integer, got {number}")


def as_rational(value, what: str = "argument") -> Fraction:
    number = as_number(value, what)
    if number.is_standard and number.shadow().is_real:
        return number.shadow().re
    raise TypeMismatch(f"{what} must be a standard rational, got {number}")


def describe(value) -> str:
    if isinstance(value, HyperVector):
        return f"a vector with {len(value)} entries"
    return f"a {kind_of(value)}"


def standard_shadow(v: HyperVector) -> HyperVector:
    """The projective shadow of ``v`` as a vector of standard numbers."""
    return HyperVector(tuple(HyperNumber.standard(c) for c in projective_shadow(v)), v.role)
