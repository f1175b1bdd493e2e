"""Removable singularities resolved by an infinitesimal squeeze.

A function that is continuous around a standard point c, except possibly at c
itself, extends continuously there exactly when f(c + eps) and f(c - eps) are
both limited with the same shadow. That common shadow is the extended value.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

from nsproj.core.hypernumber import EPS, HyperNumber
from nsproj.core.scalars import ComplexRational, ScalarLike
from nsproj.errors import DivisionByZero, EvaluationError, NotStandard

logger = logging.getLogger(__name__)

FieldFunction = Callable[[HyperNumber], HyperNumber]


class Side(str, Enum):
    left = "left"
    right = "right"


@dataclass(frozen=True)
class NotRemovable:
    """Outcome of a squeeze that found no continuous extension."""

    reason: str
    left: Optional[HyperNumber] = None
    right: Optional[HyperNumber] = None

    def __str__(self) -> str:
        return f"not removable ({self.reason})"


def _standard_point(c: Union[HyperNumber, ScalarLike]) -> HyperNumber:
    c = HyperNumber.coerce(c)
    if not c.is_standard:
        raise NotStandard(f"squeeze point must be a standard number, got {c}")
    return c


def _evaluate(f: FieldFunction, x: HyperNumber) -> HyperNumber:
    try:
        return HyperNumber.coerce(f(x))
    except DivisionByZero as e:
        raise EvaluationError(f"function is undefined at {x}: {e}") from e


def one_sided_limit(
    f: FieldFunction, c: Union[HyperNumber, ScalarLike], side: Side = Side.right
) -> Union[ComplexRational, NotRemovable]:
    """Shadow of f(c ± eps), or NotRemovable when that value is unlimited."""
    c = _standard_point(c)
    x = c + EPS if Side(side) is Side.right else c - EPS
    value = _evaluate(f, x)
    if not value.classify().is_limited:
        if Side(side) is Side.right:
            return NotRemovable("unlimited", right=value)
        return NotRemovable("unlimited", left=value)
    return value.shadow()


def squeeze_extend(
    f: FieldFunction, c: Union[HyperNumber, ScalarLike]
) -> Union[ComplexRational, NotRemovable]:
    c = _standard_point(c)
    left = _evaluate(f, c - EPS)
    right = _evaluate(f, c + EPS)
    logger.debug("squeeze at %s: left=%s right=%s", c, left, right)

    if not (left.classify().is_limited and right.classify().is_limited):
        return NotRemovable("unlimited", left=left, right=right)
    if left.shadow() != right.shadow():
        return NotRemovable("shadows differ", left=left, right=right)
    return right.shadow()
