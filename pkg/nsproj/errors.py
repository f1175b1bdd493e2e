# Typed errors raised by the algebra and the construction language
from typing import FrozenSet, Optional


class NsprojError(Exception):
    """Base class for every error this package raises on purpose."""

    @property
    def kind(self) -> str:
        return type(self).__name__


# field_core


class DivisionByZero(NsprojError, ZeroDivisionError):
    """Reciprocal of the exact zero."""


class NotRealPositive(NsprojError, ValueError):
    """Root requested of a value that is not real with a positive leading coefficient."""


class InexactRoot(NsprojError, ValueError):
    """The leading coefficient has no rational root of the requested order."""


class InvalidRootOrder(NsprojError, ValueError):
    """The order of a root is not a positive integer."""


class UnlimitedNumber(NsprojError, ValueError):
    """A shadow was requested of an unlimited value."""


class ZeroArgument(NsprojError, ValueError):
    """A magnitude comparison received the exact zero."""


class NotRealValued(NsprojError, TypeError):
    """An order-dependent operation received a value with imaginary parts."""


class NotStandard(NsprojError, ValueError):
    """A standard number was required but the value has non-constant terms."""


class EvaluationError(NsprojError):
    """A black-box function could not be evaluated at the perturbed points."""


class NotRemovableError(NsprojError):
    """A construction needed a removable singularity that is not removable."""


# projective_core


class ZeroVector(NsprojError, ValueError):
    """The exact zero vector does not represent a projective element."""


class DimensionMismatch(NsprojError, ValueError):
    pass


class DegeneratePair(NsprojError, ValueError):
    """Two inputs are exactly dependent, so their join or meet vanishes."""


class UnsupportedArity(NsprojError, ValueError):
    pass


# transform_engine


class ZeroMatrix(NsprojError, ValueError):
    pass


class SingularMatrix(NsprojError, ValueError):
    pass


class ComplexModeUnsupported(NsprojError, TypeError):
    pass


# crossratio_conics


class RealModeUnsupported(NsprojError, TypeError):
    pass


class DegenerateCrossRatio(NsprojError, ValueError):
    pass


class DegenerateFivePoints(NsprojError, ValueError):
    pass


class NotSymmetric(NsprojError, ValueError):
    """A conic form was built from a matrix that is not exactly symmetric."""


# construction_dsl


class DslSyntaxError(NsprojError):
    """Parse failure with a source position and the set of tokens that would have fit."""

    def __init__(
        self,
        message: str,
        line: int,
        column: int,
        expected: Optional[FrozenSet[str]] = None,
    ):
        self.message = message
        self.line = line
        self.column = column
        self.expected = frozenset(expected or ())
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


class UnknownIdentifier(DslSyntaxError):
    pass


class Redefinition(DslSyntaxError):
    pass


class TypeMismatch(NsprojError, TypeError):
    """A builtin received a value of the wrong kind."""
