from langchain_core.tools import tool

from nsproj.core import conics, projective
from nsproj.core.crossratio import cross_ratio, cross_ratio_about
from nsproj.core.transforms import HyperMatrix, appreciable_matrix, determinant
from nsproj.tools.values import as_matrix, as_pair, as_vector, standard_shadow


@tool
def normalize(x):
    """Appreciable representative of a vector or matrix."""
    if isinstance(x, HyperMatrix):
        return appreciable_matrix(x)
    return projective.appreciable_representative(as_vector(x, length=None))


@tool
def psh(x):
    """Projective shadow."""
    return standard_shadow(as_vector(x, length=None))


@tool
def cross(x, y):
    """Cross product of the appreciable representatives."""
    return projective.appreciable_cross_product(as_vector(x), as_vector(y))


@tool
def join(p, q):
    """Line through two points."""
    return projective.join(as_vector(p), as_vector(q))


@tool
def meet(l, m):
    """Intersection of two lines."""
    return projective.meet(as_vector(l), as_vector(m))


@tool
def scalar(x, y):
    """Scalar product of the appreciable representatives."""
    return projective.appreciable_scalar_product(as_vector(x, length=None), as_vector(y, length=None))


@tool
def det(*args):
    """det(M) of a matrix, or det_*[x, y, z] of three vectors."""
    if len(args) == 1:
        return determinant(as_matrix(args[0]))
    x, y, z = (as_vector(a) for a in args)
    return projective.appreciable_determinant(x, y, z)


@tool
def det_norm(x, y, z):
    """Determinant normalised by the magnitude of y × z."""
    return projective.normalized_determinant(as_vector(x), as_vector(y), as_vector(z))


@tool
def crossratio(*args):
    """(A,B;C,D) of four pairs, or of four points seen from a centre."""
    if len(args) == 4:
        return cross_ratio(*(as_pair(a) for a in args))
    return cross_ratio_about(*(as_vector(a) for a in args))


@tool("I")
def circular_i():
    """The circular point (-i, 1, 0)."""
    return conics.points_I_J()[0]


@tool("J")
def circular_j():
    """The circular point (i, 1, 0)."""
    return conics.points_I_J()[1]


@tool
def through(p1, p2, p3, p4, p5):
    """Conic through five points."""
    return conics.conic_through_five(*(as_vector(p) for p in (p1, p2, p3, p4, p5)))
