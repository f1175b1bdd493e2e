"""3×3 projective transformations over the Levi-Civita field."""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

from nsproj.core.context import get_field_config
from nsproj.core.hypernumber import HyperNumber
from nsproj.core.projective import (
    HyperVector,
    VectorClass,
    appreciable_representative,
    classify_vector,
    cross,
    det3,
    normalizer,
)
from nsproj.core.scalars import ScalarLike
from nsproj.errors import ComplexModeUnsupported, DimensionMismatch, SingularMatrix, ZeroMatrix

logger = logging.getLogger(__name__)

Entry = Union[HyperNumber, ScalarLike]
Rows = Tuple[Tuple[HyperNumber, ...], ...]


class MatrixClass(str, Enum):
    singular = "singular"
    almost_singular = "almost_singular"
    non_singular = "non_singular"


@dataclass(frozen=True)
class HyperMatrix:
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(HyperNumber.coerce(e) for e in row) for row in self.rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise DimensionMismatch("a transformation is a 3×3 matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> "HyperMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls) -> "HyperMatrix":
        return diag(1, 1, 1)

    def __getitem__(self, index: Tuple[int, int]) -> HyperNumber:
        i, j = index
        return self.rows[i][j]

    @property
    def entries(self) -> List[HyperNumber]:
        """Row-major."""
        return [e for row in self.rows for e in row]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    @property
    def is_real(self) -> bool:
        return all(e.is_real for e in self.entries)

    def row(self, i: int) -> HyperVector:
        return HyperVector(self.rows[i])

    def column(self, j: int) -> HyperVector:
        return HyperVector(tuple(row[j] for row in self.rows))

    def map(self, fn: Callable[[HyperNumber], HyperNumber]) -> "HyperMatrix":
        return HyperMatrix(tuple(tuple(fn(e) for e in row) for row in self.rows))

    def transpose(self) -> "HyperMatrix":
        return HyperMatrix(tuple(tuple(self.rows[i][j] for i in range(3)) for j in range(3)))

    def conjugate_transpose(self) -> "HyperMatrix":
        return self.transpose().map(HyperNumber.conjugate)

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(3) for j in range(i))

    def __matmul__(self, other):
        if isinstance(other, HyperVector):
            return HyperVector(tuple(_dot(row, other.entries) for row in self.rows), other.role)
        if isinstance(other, HyperMatrix):
            cols = [other.column(j).entries for j in range(3)]
            return HyperMatrix(tuple(tuple(_dot(row, col) for col in cols) for row in self.rows))
        return NotImplemented

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "]"


def _dot(a: Sequence[HyperNumber], b: Sequence[HyperNumber]) -> HyperNumber:
    total = HyperNumber.zero()
    for u, w in zip(a, b):
        total = total + u * w
    return total


def diag(a: Entry, b: Entry, c: Entry) -> HyperMatrix:
    return HyperMatrix.of([[a, 0, 0], [0, b, 0], [0, 0, c]])


def identity() -> HyperMatrix:
    return HyperMatrix.identity()


def transpose(m: HyperMatrix) -> HyperMatrix:
    return m.transpose()


def conjugate_transpose(m: HyperMatrix) -> HyperMatrix:
    return m.conjugate_transpose()


def determinant(m: HyperMatrix) -> HyperNumber:
    return det3(m.row(0), m.row(1), m.row(2))


def _require_nonzero(m: HyperMatrix) -> None:
    if m.is_zero:
        raise ZeroMatrix("the zero matrix is not a projective transformation")


def matrix_valuation(m: HyperMatrix) -> Fraction:
    _require_nonzero(m)
    return normalizer(m.entries).valuation


def appreciable_matrix(m: HyperMatrix) -> HyperMatrix:
    _require_nonzero(m)
    lam = normalizer(m.entries)
    return m.map(lambda e: e / lam)


def classify_matrix(m: HyperMatrix) -> MatrixClass:
    d = determinant(appreciable_matrix(m))
    if d.is_zero:
        return MatrixClass.singular
    if d.classify().is_infinitesimal:
        return MatrixClass.almost_singular
    return MatrixClass.non_singular


def adjugate(m: HyperMatrix) -> HyperMatrix:
    """Transposed cofactor matrix: M·adj(M) = det(M)·Id."""
    _require_nonzero(m)
    r0, r1, r2 = m.row(0), m.row(1), m.row(2)
    columns = (cross(r1, r2), cross(r2, r0), cross(r0, r1))
    return HyperMatrix(tuple(tuple(col.entries[i] for col in columns) for i in range(3)))


def inverse(m: HyperMatrix) -> HyperMatrix:
    """Inverse of the appreciable representative."""
    a = appreciable_matrix(m)
    d = determinant(a)
    if d.is_zero:
        raise SingularMatrix(f"{m} is singular")
    inv_d = d.reciprocal()
    return adjugate(a).map(lambda e: e * inv_d)


def apply_to_point(m: HyperMatrix, p: HyperVector) -> HyperVector:
    return appreciable_matrix(m) @ appreciable_representative(p)


def apply_to_line(m: HyperMatrix, l: HyperVector) -> HyperVector:
    """l ↦ (M_A)^{-H}·l_A, the transport that keeps incidence with transformed points."""
    kind = classify_matrix(m)
    if kind is MatrixClass.singular:
        raise SingularMatrix(f"cannot transport lines through singular {m}")
    if kind is MatrixClass.almost_singular:
        logger.warning("transporting a line through almost singular matrix %s", m)
    inv = inverse(m)
    transport = inv.transpose() if get_field_config().real else inv.conjugate_transpose()
    return transport @ appreciable_representative(l)


def eps_kernel_member(m: HyperMatrix, v: HyperVector) -> bool:
    image = appreciable_matrix(m) @ appreciable_representative(v)
    return classify_vector(image) is VectorClass.infinitesimal


@dataclass(frozen=True)
class AffineReport:
    """Decision of the almost-affine test and the block decomposition it read.

    The representative is rescaled so its (3,3) entry is 1 and read as
    ((c, s, a), (-s', c', b), (eps, delta, 1)); c' ≃ c and s' ≃ s are absorbed.
    """

    verdict: bool
    c: Optional[HyperNumber] = None
    s: Optional[HyperNumber] = None
    a: Optional[HyperNumber] = None
    b: Optional[HyperNumber] = None
    eps: Optional[HyperNumber] = None
    delta: Optional[HyperNumber] = None
    deviations: Tuple[str, ...] = ()


def almost_affine_report(m: HyperMatrix) -> AffineReport:
    _require_nonzero(m)
    if not m.is_real:
        raise ComplexModeUnsupported("the almost-affine test needs a real matrix")
    a = appreciable_matrix(m)
    corner = a[2, 2]
    if corner.classify().is_infinitesimal:
        return AffineReport(False, deviations=(f"(3,3) entry {corner} is not appreciable",))

    inv_corner = corner.reciprocal()
    r = a.map(lambda e: e * inv_corner)
    deviations = []
    if not r[2, 0].classify().is_infinitesimal:
        deviations.append(f"(3,1) entry {r[2, 0]} is not infinitesimal")
    if not r[2, 1].classify().is_infinitesimal:
        deviations.append(f"(3,2) entry {r[2, 1]} is not infinitesimal")
    if not (r[1, 1] - r[0, 0]).classify().is_infinitesimal:
        deviations.append(f"diagonal {r[0, 0]} and {r[1, 1]} differ appreciably")
    if not (r[1, 0] + r[0, 1]).classify().is_infinitesimal:
        deviations.append(f"off-diagonal {r[0, 1]} and {r[1, 0]} are not opposite")
    c, s = r[0, 0], r[0, 1]
    if (c * c + s * s).classify().is_infinitesimal:
        deviations.append(f"c^2 + s^2 = {c * c + s * s} is infinitesimal")

    return AffineReport(
        verdict=not deviations,
        c=c,
        s=s,
        a=r[0, 2],
        b=r[1, 2],
        eps=r[2, 0],
        delta=r[2, 1],
        deviations=tuple(deviations),
    )


def is_almost_affine(m: HyperMatrix) -> bool:
    return almost_affine_report(m).verdict
