"""Builtin functions and predicates of construction scripts."""
from nsproj.tools.geometry import (
    circular_i,
    circular_j,
    cross,
    crossratio,
    det,
    det_norm,
    join,
    meet,
    normalize,
    psh,
    scalar,
    through,
)
from nsproj.tools.numbers import abs_, classify, conj, imaginary_part, leading, real_part, root, shadow
from nsproj.tools.predicates import (
    almost_affine,
    almost_cocircular,
    almost_collinear,
    almost_equivalent,
    almost_far,
    almost_incident,
    almost_parallel,
    almost_singular,
    conic_contains,
    in_eps_kernel,
    non_singular,
)
from nsproj.tools.registry import BUILTINS, Builtin, get_builtin, predicate_names, register
from nsproj.tools.transforms import adj, apply, apply_line, inverse, transpose
from nsproj.tools.values import Verdict

FUNCTIONS = [
    root,
    shadow,
    classify,
    abs_,
    conj,
    real_part,
    imaginary_part,
    leading,
    normalize,
    psh,
    cross,
    join,
    meet,
    scalar,
    det,
    det_norm,
    crossratio,
    circular_i,
    circular_j,
    through,
    adj,
    inverse,
    apply,
    apply_line,
    transpose,
]

PREDICATES = [
    almost_incident,
    almost_parallel,
    almost_collinear,
    almost_equivalent,
    almost_far,
    almost_cocircular,
    almost_singular,
    non_singular,
    almost_affine,
    conic_contains,
    in_eps_kernel,
]

VARIADIC = {"det": (1, 3), "crossratio": (4, 5)}

register(FUNCTIONS, arity=VARIADIC)
register(PREDICATES, predicate=True)

__all__ = [
    "BUILTINS",
    "Builtin",
    "FUNCTIONS",
    "PREDICATES",
    "Verdict",
    "get_builtin",
    "predicate_names",
]
