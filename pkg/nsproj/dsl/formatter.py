"""Canonical source text for programs, with the fewest parentheses that reparse to the same tree."""
from nsproj.dsl.syntax import (
    Assert,
    Bind,
    Binary,
    Call,
    Eps,
    Expr,
    Imag,
    Let,
    ListExpr,
    Name,
    Number,
    Print,
    Program,
    Squeeze,
    Statement,
    Unary,
)

_ADD, _MUL, _UNARY, _POW, _ATOM = 1, 2, 3, 4, 5


def _precedence(expr: Expr) -> int:
    if isinstance(expr, Binary):
        return {"+": _ADD, "-": _ADD, "*": _MUL, "/": _MUL, "^": _POW}[expr.op]
    if isinstance(expr, Unary):
        return _UNARY
    return _ATOM


def _wrap(expr: Expr, minimum: int) -> str:
    text = format_expression(expr)
    return f"({text})" if _precedence(expr) < minimum else text


def format_expression(expr: Expr) -> str:
    if isinstance(expr, Number):
        return expr.text or str(expr.value)
    if isinstance(expr, Eps):
        return "eps"
    if isinstance(expr, Imag):
        return "i"
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Unary):
        return "-" + _wrap(expr.operand, _UNARY)
    if isinstance(expr, Binary):
        if expr.op == "^":
            return f"{_wrap(expr.left, _ATOM)}^{_wrap(expr.right, _UNARY)}"
        level = _precedence(expr)
        return f"{_wrap(expr.left, level)} {expr.op} {_wrap(expr.right, level + 1)}"
    if isinstance(expr, Call):
        return f"{expr.name}({', '.join(format_expression(a) for a in expr.args)})"
    if isinstance(expr, ListExpr):
        return "[" + ", ".join(format_expression(a) for a in expr.items) + "]"
    if isinstance(expr, Squeeze):
        return f"squeeze({expr.var}, {format_expression(expr.body)}, {format_expression(expr.at)})"
    raise TypeError(f"not an expression: {expr!r}")


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, Let):
        return f"let {stmt.name} = {format_expression(stmt.expr)};"
    if isinstance(stmt, Bind):
        return f"{stmt.kind} {stmt.name} = {format_expression(stmt.expr)};"
    if isinstance(stmt, Assert):
        negation = "not " if stmt.negated else ""
        return f"assert {negation}{format_expression(stmt.call)};"
    if isinstance(stmt, Print):
        return f"print {format_expression(stmt.expr)};"
    raise TypeError(f"not a statement: {stmt!r}")


def format_program(program: Program) -> str:
    return "".join(format_statement(s) + "\n" for s in program.statements)
