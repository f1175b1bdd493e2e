from nsproj.core.hypernumber import EPS, HyperNumber, NumberClass
from nsproj.core.projective import HyperVector, Role, VectorClass
from nsproj.core.scalars import ComplexRational
from nsproj.core.transforms import HyperMatrix, MatrixClass

__all__ = [
    "EPS",
    "ComplexRational",
    "HyperMatrix",
    "HyperNumber",
    "HyperVector",
    "MatrixClass",
    "NumberClass",
    "Role",
    "VectorClass",
]
