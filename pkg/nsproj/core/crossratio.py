"""Cross-ratios of four elements of K*² and of four points seen from a centre."""
from dataclasses import dataclass
from typing import Tuple, Union

from nsproj.core.hypernumber import HyperNumber
from nsproj.core.projective import HyperVector, det3, normalizer
from nsproj.core.scalars import ComplexRational, ScalarLike
from nsproj.errors import DegenerateCrossRatio, ZeroVector

Entry = Union[HyperNumber, ScalarLike]


@dataclass(frozen=True)
class PlanarPair:
    first: HyperNumber
    second: HyperNumber

    def __post_init__(self):
        object.__setattr__(self, "first", HyperNumber.coerce(self.first))
        object.__setattr__(self, "second", HyperNumber.coerce(self.second))

    @classmethod
    def of(cls, first: Entry, second: Entry) -> "PlanarPair":
        return cls(HyperNumber.coerce(first), HyperNumber.coerce(second))

    @property
    def is_zero(self) -> bool:
        return self.first.is_zero and self.second.is_zero

    def scale(self, factor: Entry) -> "PlanarPair":
        return PlanarPair(self.first * factor, self.second * factor)

    def appreciable(self) -> "PlanarPair":
        if self.is_zero:
            raise ZeroVector("the zero pair has no appreciable representative")
        lam = normalizer((self.first, self.second))
        return PlanarPair(self.first / lam, self.second / lam)

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


def bracket2(a: PlanarPair, b: PlanarPair) -> HyperNumber:
    return a.first * b.second - a.second * b.first


def _ratio(ac: HyperNumber, bd: HyperNumber, ad: HyperNumber, bc: HyperNumber) -> HyperNumber:
    if ad.is_zero or bc.is_zero:
        raise DegenerateCrossRatio("a denominator bracket vanishes")
    return (ac * bd) / (ad * bc)


def cross_ratio(a: PlanarPair, b: PlanarPair, c: PlanarPair, d: PlanarPair) -> HyperNumber:
    """(A,B;C,D) = [A,C][B,D] / ([A,D][B,C]) on the raw inputs."""
    return _ratio(bracket2(a, c), bracket2(b, d), bracket2(a, d), bracket2(b, c))


def _brackets(a, b, c, d) -> Tuple[HyperNumber, ...]:
    a, b, c, d = (p.appreciable() for p in (a, b, c, d))
    return bracket2(a, c), bracket2(b, d), bracket2(a, d), bracket2(b, c)


def brackets_appreciable(a: PlanarPair, b: PlanarPair, c: PlanarPair, d: PlanarPair) -> bool:
    """All four brackets of the appreciable representatives are appreciable."""
    return not any(x.classify().is_infinitesimal for x in _brackets(a, b, c, d))


def cross_ratio_shadow(a: PlanarPair, b: PlanarPair, c: PlanarPair, d: PlanarPair) -> ComplexRational:
    """Shadow of (A,B;C,D), defined while all four brackets stay appreciable.

    An unlimited value raises UnlimitedNumber. A limited value with an
    infinitesimal bracket raises DegenerateCrossRatio.
    """
    value = cross_ratio(a, b, c, d)
    if value.classify().is_limited and not brackets_appreciable(a, b, c, d):
        raise DegenerateCrossRatio("a bracket of the appreciable representatives is infinitesimal")
    return value.shadow()


def cross_ratio_about(
    o: HyperVector, a: HyperVector, b: HyperVector, c: HyperVector, d: HyperVector
) -> HyperNumber:
    """[OAC][OBD] / ([OAD][OBC]), the cross-ratio of four points seen from O."""
    return _ratio(det3(o, a, c), det3(o, b, d), det3(o, a, d), det3(o, b, c))
