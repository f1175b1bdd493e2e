"""Homogeneous vectors over the Levi-Civita field and the "almost" relations.

A vector is only defined up to a nonzero scalar, so every predicate first
rescales its inputs to an appreciable representative (all entries limited, at
least one appreciable) and then asks whether a single algebraic quantity is
infinitesimal.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from nsproj.core.context import get_field_config
from nsproj.core.hypernumber import HyperNumber, NumberClass
from nsproj.core.scalars import ComplexRational, ScalarLike
from nsproj.errors import DegeneratePair, DimensionMismatch, UnsupportedArity, ZeroVector

logger = logging.getLogger(__name__)

Entry = Union[HyperNumber, ScalarLike]


class Role(str, Enum):
    point = "point"
    line = "line"
    plain = "plain"


class VectorClass(str, Enum):
    limited = "limited"
    infinitesimal = "infinitesimal"
    appreciable = "appreciable"
    unlimited = "unlimited"


@dataclass(frozen=True)
class HyperVector:
    """Homogeneous coordinates; the role tag is cosmetic and ignored by equality."""

    entries: Tuple[HyperNumber, ...]
    role: Role = field(default=Role.plain, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(HyperNumber.coerce(e) for e in self.entries))

    @classmethod
    def of(cls, *entries: Entry, role: Role = Role.plain) -> "HyperVector":
        return cls(tuple(entries), role)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> HyperNumber:
        return self.entries[index]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def with_role(self, role: Role) -> "HyperVector":
        return HyperVector(self.entries, role)

    def scale(self, factor: Entry) -> "HyperVector":
        return HyperVector(tuple(e * factor for e in self.entries), self.role)

    def conjugate(self) -> "HyperVector":
        return HyperVector(tuple(e.conjugate() for e in self.entries), self.role)

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.entries) + "]"


def point(*entries: Entry) -> HyperVector:
    return HyperVector(tuple(entries), Role.point)


def line(*entries: Entry) -> HyperVector:
    return HyperVector(tuple(entries), Role.line)


def line_at_infinity() -> HyperVector:
    return line(0, 0, 1)


# normalisation


def _require_nonzero(v: HyperVector) -> None:
    if not len(v) or v.is_zero:
        raise ZeroVector(f"{v} is the zero vector")


def _require_dimension(v: HyperVector, n: int) -> None:
    if len(v) != n:
        raise DimensionMismatch(f"expected a vector with {n} entries, got {len(v)}")


def normalizer(values: Iterable[HyperNumber]) -> HyperNumber:
    """sign·eps^v where v is the smallest leading exponent among the values.

    The sign makes the leading coefficient of the first entry of valuation v
    positive (real part > 0, or real part 0 and imaginary part > 0). Dividing
    by the result only shifts exponents, so it is exact.
    """
    pivot: Optional[HyperNumber] = None
    for value in values:
        if value.is_zero:
            continue
        if pivot is None or value.valuation < pivot.valuation:
            pivot = value
    if pivot is None:
        raise ZeroVector("cannot normalise an all-zero collection")
    sign = 1 if pivot.leading_coefficient.is_positive_oriented() else -1
    return HyperNumber.monomial(sign, pivot.valuation)


def appreciable_representative(v: HyperVector) -> HyperVector:
    _require_nonzero(v)
    lam = normalizer(v.entries)
    logger.debug("normalising %s by %s", v, lam)
    return HyperVector(tuple(e / lam for e in v.entries), v.role)


def classify_vector(v: HyperVector) -> VectorClass:
    classes = [e.classify() for e in v.entries]
    if any(c is NumberClass.unlimited for c in classes):
        return VectorClass.unlimited
    if all(c.is_infinitesimal for c in classes):
        return VectorClass.infinitesimal
    return VectorClass.appreciable


def is_limited_vector(v: HyperVector) -> bool:
    return all(e.classify().is_limited for e in v.entries)


def projective_shadow(v: HyperVector) -> Tuple[ComplexRational, ...]:
    return tuple(e.shadow() for e in appreciable_representative(v).entries)


def squared_norm(v: HyperVector) -> HyperNumber:
    total = HyperNumber.zero()
    for e in v.entries:
        total = total + e.abs2()
    return total


def euclidean_norm(v: HyperVector) -> HyperNumber:
    return squared_norm(v).nth_root(2)


# products


def pairing(x: HyperVector, y: HyperVector) -> HyperNumber:
    """Hermitian in complex mode (conjugate-linear in x), bilinear in real mode."""
    if len(x) != len(y):
        raise DimensionMismatch(f"cannot pair vectors of length {len(x)} and {len(y)}")
    real = get_field_config().real
    total = HyperNumber.zero()
    for a, b in zip(x.entries, y.entries):
        total = total + (a if real else a.conjugate()) * b
    return total


def cross(x: HyperVector, y: HyperVector) -> HyperVector:
    """Plain cross product of two 3-vectors, no normalisation."""
    _require_dimension(x, 3)
    _require_dimension(y, 3)
    x1, x2, x3 = x.entries
    y1, y2, y3 = y.entries
    return HyperVector((x2 * y3 - x3 * y2, x3 * y1 - x1 * y3, x1 * y2 - x2 * y1))


def det3(a: HyperVector, b: HyperVector, c: HyperVector) -> HyperNumber:
    _require_dimension(a, 3)
    total = HyperNumber.zero()
    for u, w in zip(a.entries, cross(b, c).entries):
        total = total + u * w
    return total


def appreciable_scalar_product(x: HyperVector, y: HyperVector) -> HyperNumber:
    if len(x) != len(y):
        raise DimensionMismatch(f"cannot pair vectors of length {len(x)} and {len(y)}")
    return pairing(appreciable_representative(x), appreciable_representative(y))


def appreciable_cross_product(x: HyperVector, y: HyperVector) -> HyperVector:
    _require_dimension(x, 3)
    _require_dimension(y, 3)
    return cross(appreciable_representative(x), appreciable_representative(y))


def join(p: HyperVector, q: HyperVector) -> HyperVector:
    """Line through two points; the zero vector when they coincide exactly."""
    return appreciable_cross_product(p, q).with_role(Role.line)


def meet(l: HyperVector, m: HyperVector) -> HyperVector:
    """Intersection point of two lines; the zero vector when they coincide exactly."""
    return appreciable_cross_product(l, m).with_role(Role.point)


def shadow_cross_product(x: HyperVector, y: HyperVector) -> Tuple[ComplexRational, ...]:
    return tuple(e.shadow() for e in appreciable_cross_product(x, y).entries)


# predicates


def almost_incident(p: HyperVector, l: HyperVector) -> bool:
    return appreciable_scalar_product(p, l).classify().is_infinitesimal


almost_orthogonal = almost_incident


def almost_equivalent(x: HyperVector, y: HyperVector) -> bool:
    return classify_vector(appreciable_cross_product(x, y)) is VectorClass.infinitesimal


projective_halo_member = almost_equivalent


def scaling_factor(x: HyperVector, y: HyperVector) -> Optional[HyperNumber]:
    """An appreciable λ with x_A ≃ λ·y_A, or None when x and y are not almost equivalent."""
    if not almost_equivalent(x, y):
        return None
    xa = appreciable_representative(x)
    ya = appreciable_representative(y)
    k = min(
        (i for i, e in enumerate(ya.entries) if not e.is_zero),
        key=lambda i: (ya.entries[i].valuation, i),
    )
    return xa.entries[k] / ya.entries[k]


def is_almost_far_point(p: HyperVector) -> bool:
    _require_dimension(p, 3)
    return appreciable_representative(p).entries[2].classify().is_infinitesimal


def almost_parallel(l: HyperVector, m: HyperVector) -> bool:
    crossing = meet(l, m)
    if crossing.is_zero:
        raise DegeneratePair(f"lines {l} and {m} coincide")
    return is_almost_far_point(crossing)


def appreciable_determinant(x: HyperVector, y: HyperVector, z: HyperVector) -> HyperNumber:
    for v in (x, y, z):
        _require_dimension(v, 3)
    return det3(
        appreciable_representative(x),
        appreciable_representative(y),
        appreciable_representative(z),
    )


def normalized_determinant(x: HyperVector, y: HyperVector, z: HyperVector) -> HyperNumber:
    """det_*[x, y, z] divided by the normaliser of y_A × z_A."""
    yz = appreciable_cross_product(y, z)
    if yz.is_zero:
        raise DegeneratePair(f"{y} and {z} are exactly dependent")
    return appreciable_determinant(x, y, z) / normalizer(yz.entries)


def almost_collinear(x: HyperVector, y: HyperVector, z: HyperVector) -> bool:
    return normalized_determinant(x, y, z).classify().is_infinitesimal


def almost_linearly_dependent(vectors: Sequence[HyperVector]) -> bool:
    if len(vectors) == 2:
        return almost_equivalent(*vectors)
    if len(vectors) == 3:
        return almost_collinear(*vectors)
    raise UnsupportedArity(f"almost linear dependence is decided for 2 or 3 vectors, got {len(vectors)}")


def valuation_of(v: HyperVector) -> Fraction:
    """Exponent of the normaliser of a nonzero vector."""
    _require_nonzero(v)
    return normalizer(v.entries).valuation
