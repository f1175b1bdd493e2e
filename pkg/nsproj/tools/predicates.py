"""The "almost" predicates, each returning its verdict and the witness quantity."""
from langchain_core.tools import tool

from nsproj.core import conics, projective, transforms
from nsproj.core.transforms import MatrixClass
from nsproj.errors import DegeneratePair
from nsproj.tools.values import Verdict, as_conic, as_matrix, as_vector


def _infinitesimal(witness, note=None) -> Verdict:
    return Verdict(witness.classify().is_infinitesimal, witness, note)


@tool
def almost_incident(p, l):
    """Scalar product of the appreciable representatives is infinitesimal."""
    return _infinitesimal(projective.appreciable_scalar_product(as_vector(p), as_vector(l)))


@tool
def almost_parallel(l, m):
    """The two lines meet in an almost far point."""
    crossing = projective.meet(as_vector(l), as_vector(m))
    if crossing.is_zero:
        raise DegeneratePair(f"lines {l} and {m} coincide")
    return _infinitesimal(projective.appreciable_representative(crossing).entries[2])


@tool
def almost_collinear(x, y, z):
    """Normalised determinant is infinitesimal."""
    return _infinitesimal(projective.normalized_determinant(as_vector(x), as_vector(y), as_vector(z)))


@tool
def almost_equivalent(x, y):
    """Cross product of the appreciable representatives is an infinitesimal vector."""
    x, y = as_vector(x), as_vector(y)
    return Verdict(projective.almost_equivalent(x, y), projective.appreciable_cross_product(x, y))


@tool
def almost_far(p):
    """Last entry of the appreciable representative is infinitesimal."""
    return _infinitesimal(projective.appreciable_representative(as_vector(p)).entries[2])


@tool
def almost_cocircular(a, b, c, d):
    """The cocircularity bracket of the appreciable representatives is infinitesimal."""
    return _infinitesimal(
        conics.cocircularity_bracket(as_vector(a), as_vector(b), as_vector(c), as_vector(d))
    )


def _matrix_class(m, expected: MatrixClass) -> Verdict:
    m = as_matrix(m)
    witness = transforms.determinant(transforms.appreciable_matrix(m))
    return Verdict(transforms.classify_matrix(m) is expected, witness)


@tool
def almost_singular(m):
    """det(M_A) is infinitesimal but not zero."""
    return _matrix_class(m, MatrixClass.almost_singular)


@tool
def non_singular(m):
    """det(M_A) is appreciable."""
    return _matrix_class(m, MatrixClass.non_singular)


@tool
def almost_affine(m):
    """Some appreciable representative has the almost-affine block form."""
    report = transforms.almost_affine_report(as_matrix(m))
    return Verdict(report.verdict, report.c, "; ".join(report.deviations) or None)


@tool
def conic_contains(cf, p):
    """p_Aᵀ·Cf_A·p_A is infinitesimal."""
    return _infinitesimal(conics.conic_value(as_conic(cf), as_vector(p)))


@tool
def in_eps_kernel(m, v):
    """M_A·v_A is an infinitesimal vector."""
    m, v = as_matrix(m), as_vector(v)
    return Verdict(transforms.eps_kernel_member(m, v), transforms.apply_to_point(m, v))
