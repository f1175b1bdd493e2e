"""Syntax tree of construction scripts.

Nodes are frozen dataclasses; source spans are excluded from equality so a
reprinted and reparsed program compares equal to the original.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple, Union


@dataclass(frozen=True)
class Span:
    line: int
    column: int


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Number:
    value: Fraction
    text: str = field(default="", compare=False)
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Eps:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Imag:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Name:
    name: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class ListExpr:
    items: Tuple["Expr", ...]
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Squeeze:
    """squeeze(var, body, at): the continuous extension of body(var) at a standard point."""

    var: str
    body: "Expr"
    at: "Expr"
    span: Optional[Span] = _span()


Expr = Union[Number, Eps, Imag, Name, Unary, Binary, Call, ListExpr, Squeeze]


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Bind:
    """point / line / matrix / conic binding."""

    kind: str
    name: str
    expr: Expr
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Assert:
    call: Call
    negated: bool = False
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Print:
    expr: Expr
    span: Optional[Span] = _span()


Statement = Union[Let, Bind, Assert, Print]


@dataclass(frozen=True)
class Program:
    statements: Tuple[Statement, ...] = ()


def defined_name(stmt: Statement) -> Optional[str]:
    if isinstance(stmt, (Let, Bind)):
        return stmt.name
    return None


def free_names(node) -> FrozenSet[str]:
    """Identifiers a statement or expression reads."""
    if isinstance(node, Name):
        return frozenset({node.name})
    if isinstance(node, (Let, Bind, Print)):
        return free_names(node.expr)
    if isinstance(node, Assert):
        return free_names(node.call)
    if isinstance(node, Unary):
        return free_names(node.operand)
    if isinstance(node, Binary):
        return free_names(node.left) | free_names(node.right)
    if isinstance(node, Call):
        return frozenset().union(*(free_names(a) for a in node.args))
    if isinstance(node, ListExpr):
        return frozenset().union(*(free_names(a) for a in node.items))
    if isinstance(node, Squeeze):
        return (free_names(node.body) - {node.var}) | free_names(node.at)
    return frozenset()
