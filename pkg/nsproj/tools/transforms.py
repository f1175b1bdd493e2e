from langchain_core.tools import tool

from nsproj.core import transforms
from nsproj.tools.values import as_matrix, as_vector


@tool
def adj(m):
    """Adjugate (transposed cofactor matrix)."""
    return transforms.adjugate(as_matrix(m))


@tool
def inverse(m):
    """Inverse of the appreciable representative."""
    return transforms.inverse(as_matrix(m))


@tool
def apply(m, p):
    """Image of a point: M_A·p_A."""
    return transforms.apply_to_point(as_matrix(m), as_vector(p))


@tool
def apply_line(m, l):
    """Image of a line: (M_A)^-H·l_A."""
    return transforms.apply_to_line(as_matrix(m), as_vector(l))


@tool
def transpose(m):
    """Transpose."""
    return transforms.transpose(as_matrix(m))
