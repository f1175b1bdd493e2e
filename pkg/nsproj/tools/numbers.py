from langchain_core.tools import tool

from nsproj.core.hypernumber import HyperNumber
from nsproj.core.projective import HyperVector, classify_vector
from nsproj.core.transforms import HyperMatrix, classify_matrix
from nsproj.errors import TypeMismatch
from nsproj.tools.values import as_integer, as_number, kind_of, standard_shadow


@tool
def root(x, n):
    """Real n-th root of a real value with positive leading coefficient."""
    return as_number(x).nth_root(as_integer(n, "root order"))


@tool
def shadow(x):
    """Standard part of a limited number, or the projective shadow of a vector."""
    if isinstance(x, HyperVector):
        return standard_shadow(x)
    return HyperNumber.standard(as_number(x).shadow())


@tool
def classify(x):
    """zero | infinitesimal | appreciable | unlimited, or the vector and matrix classes."""
    if isinstance(x, HyperNumber):
        return x.classify()
    if isinstance(x, HyperVector):
        return classify_vector(x)
    if isinstance(x, HyperMatrix):
        return classify_matrix(x)
    raise TypeMismatch(f"cannot classify a {kind_of(x)}")


@tool("abs")
def abs_(x):
    """Absolute value of a real number."""
    return abs(as_number(x))


@tool
def conj(x):
    """Complex conjugate."""
    if isinstance(x, HyperVector):
        return x.conjugate()
    return as_number(x).conjugate()


@tool("re")
def real_part(x):
    """Real parts of all coefficients."""
    x = as_number(x)
    return HyperNumber((q, c.re) for q, c in x.terms)


@tool("im")
def imaginary_part(x):
    """Imaginary parts of all coefficients."""
    x = as_number(x)
    return HyperNumber((q, c.im) for q, c in x.terms)


@tool
def leading(x):
    """Leading term c·eps^q."""
    return as_number(x).leading_term()
