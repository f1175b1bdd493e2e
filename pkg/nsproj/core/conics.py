"""Non-standard conics, the circular points I and J, and cocircularity."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Sequence, Tuple

from nsproj.core.context import get_field_config
from nsproj.core.hypernumber import HyperNumber
from nsproj.core.projective import HyperVector, Role, appreciable_representative, det3
from nsproj.core.scalars import IMAGINARY_UNIT
from nsproj.core.transforms import HyperMatrix, appreciable_matrix
from nsproj.errors import (
    DegenerateFivePoints,
    DimensionMismatch,
    NotSymmetric,
    RealModeUnsupported,
    ZeroMatrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConicForm:
    """Symmetric quadratic form pᵀ·M·p of a conic."""

    matrix: HyperMatrix

    def __post_init__(self):
        if self.matrix.is_zero:
            raise ZeroMatrix("the zero form is not a conic")
        if not self.matrix.is_symmetric():
            raise NotSymmetric(f"{self.matrix} is not symmetric")

    @classmethod
    def from_coefficients(cls, a, b, c, d, e, f) -> "ConicForm":
        """a·x² + b·y² + c·z² + d·xy + e·xz + f·yz."""
        a, b, c, d, e, f = (HyperNumber.coerce(v) for v in (a, b, c, d, e, f))
        half = HyperNumber.standard(1) / 2
        return cls(
            HyperMatrix.of(
                [
                    [a, d * half, e * half],
                    [d * half, b, f * half],
                    [e * half, f * half, c],
                ]
            )
        )

    def __str__(self) -> str:
        return str(self.matrix)


def _quadratic(m: HyperMatrix, p: HyperVector) -> HyperNumber:
    if len(p) != 3:
        raise DimensionMismatch(f"conics live in the plane, got a vector with {len(p)} entries")
    image = m @ p
    total = HyperNumber.zero()
    for u, w in zip(p.entries, image.entries):
        total = total + u * w
    return total


def conic_value(cf: ConicForm, p: HyperVector) -> HyperNumber:
    """p_Aᵀ·Cf_A·p_A, without conjugation."""
    return _quadratic(appreciable_matrix(cf.matrix), appreciable_representative(p))


def conic_contains(cf: ConicForm, p: HyperVector) -> bool:
    return conic_value(cf, p).classify().is_infinitesimal


def _monomials(p: HyperVector) -> Tuple[HyperNumber, ...]:
    x, y, z = p.entries
    return (x * x, y * y, z * z, x * y, x * z, y * z)


def _maximal_minors(rows: Sequence[Sequence[HyperNumber]], width: int) -> Dict[Tuple[int, ...], HyperNumber]:
    """Determinants of every square submatrix built from all rows and a column subset.

    Laplace expansion along the last row, growing one row at a time.
    """
    minors: Dict[Tuple[int, ...], HyperNumber] = {(): HyperNumber.standard(1)}
    for r, row in enumerate(rows):
        grown: Dict[Tuple[int, ...], HyperNumber] = {}
        for cols in combinations(range(width), r + 1):
            total = HyperNumber.zero()
            for pos, j in enumerate(cols):
                rest = cols[:pos] + cols[pos + 1 :]
                term = row[j] * minors[rest]
                total = total + term if (r + pos) % 2 == 0 else total - term
            grown[cols] = total
        minors = grown
    return minors


def conic_through_five(
    p1: HyperVector, p2: HyperVector, p3: HyperVector, p4: HyperVector, p5: HyperVector
) -> ConicForm:
    """The conic through five points, as the signed maximal minors of the 5×6 system."""
    rows = [_monomials(appreciable_representative(p)) for p in (p1, p2, p3, p4, p5)]
    minors = _maximal_minors(rows, 6)
    coefficients = []
    for k in range(6):
        minor = minors[tuple(j for j in range(6) if j != k)]
        coefficients.append(minor if k % 2 == 0 else -minor)
    if all(c.is_zero for c in coefficients):
        raise DegenerateFivePoints("the five points do not determine a unique conic")
    logger.debug("five-point conic coefficients: %s", ", ".join(str(c) for c in coefficients))
    return ConicForm.from_coefficients(*coefficients)


def points_I_J() -> Tuple[HyperVector, HyperVector]:
    if get_field_config().real:
        raise RealModeUnsupported("the circular points I and J need complex mode")
    i = HyperNumber.standard(IMAGINARY_UNIT)
    return (
        HyperVector((-i, 1, 0), Role.point),
        HyperVector((i, 1, 0), Role.point),
    )


def cocircularity_bracket(a: HyperVector, b: HyperVector, c: HyperVector, d: HyperVector) -> HyperNumber:
    """[CAI][DBI][DAJ][CBJ] − [CAJ][DBJ][DAI][CBI] on appreciable representatives."""
    i, j = points_I_J()
    a, b, c, d = (appreciable_representative(v) for v in (a, b, c, d))
    return (
        det3(c, a, i) * det3(d, b, i) * det3(d, a, j) * det3(c, b, j)
        - det3(c, a, j) * det3(d, b, j) * det3(d, a, i) * det3(c, b, i)
    )


def is_almost_cocircular(a: HyperVector, b: HyperVector, c: HyperVector, d: HyperVector) -> bool:
    return cocircularity_bracket(a, b, c, d).classify().is_infinitesimal
