"""Recursive-descent parser for construction scripts.

    stmt   := 'let' ID '=' expr ';'
            | ('point' | 'line' | 'matrix' | 'conic') ID '=' expr ';'
            | 'assert' ['not'] ID '(' args ')' ';'
            | 'print' expr ';'
    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ['^' factor]
    atom   := NUMBER | 'eps' | 'i' | ID | ID '(' args ')' | '[' args ']' | '(' expr ')'

Identifiers are single-assignment and must be bound before use; both rules
are checked here, before anything is evaluated.
"""
import logging
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Set

from nsproj.dsl.lexer import RESERVED, Token, token_list
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
    Span,
    Squeeze,
    Statement,
    Unary,
)
from nsproj.errors import DslSyntaxError, Redefinition, UnknownIdentifier
from nsproj.tools import get_builtin, predicate_names

logger = logging.getLogger(__name__)

BINDING_KINDS = ("point", "line", "matrix", "conic")
_STATEMENT_START = frozenset({"let", "assert", "print", *BINDING_KINDS})


class Parser:
    def __init__(self, source: str, allow_decimal: bool = False):
        self.tokens: List[Token] = token_list(source)
        self.pos = 0
        self.allow_decimal = allow_decimal
        self.bound: Set[str] = set()
        self.local: List[str] = []

    # token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def _at(self, text: str) -> bool:
        return self.current.kind in ("OP", "KEYWORD") and self.current.text == text

    def _fail(self, expected: Iterable[str], token: Optional[Token] = None) -> DslSyntaxError:
        token = token or self.current
        return DslSyntaxError(f"unexpected {token.describe()}", token.line, token.column, frozenset(expected))

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise self._fail({f"'{text}'"})
        return self._advance()

    def _expect_id(self) -> Token:
        if self.current.kind != "ID":
            raise self._fail({"identifier"})
        return self._advance()

    @staticmethod
    def _span(token: Token) -> Span:
        return Span(token.line, token.column)

    # statements

    def parse_program(self) -> Program:
        statements = []
        while self.current.kind != "EOF":
            statements.append(self.parse_statement())
        return Program(tuple(statements))

    def parse_statement(self) -> Statement:
        token = self.current
        if token.kind != "KEYWORD" or token.text not in _STATEMENT_START:
            raise self._fail({f"'{k}'" for k in _STATEMENT_START})
        self._advance()
        span = self._span(token)

        if token.text == "print":
            expr = self.parse_expression()
            self._expect(";")
            return Print(expr, span)

        if token.text == "assert":
            negated = False
            if self._at("not"):
                self._advance()
                negated = True
            name_token = self.current
            call = self._parse_atom()
            if not isinstance(call, Call) or not get_builtin(call.name).predicate:
                raise self._fail({f"'{n}'" for n in predicate_names()}, name_token)
            self._expect(";")
            return Assert(call, negated, span)

        name_token = self._expect_id()
        name = name_token.text
        if name in RESERVED:
            raise Redefinition(f"'{name}' is reserved", name_token.line, name_token.column)
        if name in self.bound:
            raise Redefinition(f"'{name}' is already defined", name_token.line, name_token.column)
        self._expect("=")
        expr = self.parse_expression()
        self._expect(";")
        if token.text in BINDING_KINDS:
            self._check_shape(token.text, expr, span)
        self.bound.add(name)
        if token.text == "let":
            return Let(name, expr, span)
        return Bind(token.text, name, expr, span)

    def _check_shape(self, kind: str, expr: Expr, span: Span) -> None:
        if not isinstance(expr, ListExpr):
            return
        if kind in ("point", "line"):
            if len(expr.items) != 3:
                raise DslSyntaxError(
                    f"a {kind} needs 3 coordinates, got {len(expr.items)}", span.line, span.column
                )
            return
        rows = expr.items
        if len(rows) != 3 or not all(isinstance(r, ListExpr) and len(r.items) == 3 for r in rows):
            raise DslSyntaxError(f"a {kind} needs a 3×3 matrix literal", span.line, span.column)

    # expressions

    def parse_expression(self) -> Expr:
        left = self._parse_term()
        while self._at("+") or self._at("-"):
            op = self._advance()
            left = Binary(op.text, left, self._parse_term(), self._span(op))
        return left

    def _parse_term(self) -> Expr:
        left = self._parse_factor()
        while self._at("*") or self._at("/"):
            op = self._advance()
            left = Binary(op.text, left, self._parse_factor(), self._span(op))
        return left

    def _parse_factor(self) -> Expr:
        if self._at("-"):
            op = self._advance()
            return Unary("-", self._parse_factor(), self._span(op))
        return self._parse_power()

    def _parse_power(self) -> Expr:
        base = self._parse_atom()
        if self._at("^"):
            op = self._advance()
            return Binary("^", base, self._parse_factor(), self._span(op))
        return base

    def _parse_atom(self) -> Expr:
        token = self.current
        span = self._span(token)

        if token.kind == "NUMBER":
            self._advance()
            if "." in token.text and not self.allow_decimal:
                raise DslSyntaxError(
                    "decimal literals need --allow-decimal", token.line, token.column, frozenset({"integer"})
                )
            return Number(Fraction(token.text), token.text, span)

        if self._at("("):
            self._advance()
            expr = self.parse_expression()
            self._expect(")")
            return expr

        if self._at("["):
            self._advance()
            items = self._parse_args("]")
            return ListExpr(tuple(items), span)

        if token.kind == "ID":
            self._advance()
            if token.text == "eps":
                return Eps(span)
            if token.text == "i":
                return Imag(span)
            if self._at("("):
                return self._parse_call(token)
            if token.text not in self.bound and token.text not in self.local:
                raise UnknownIdentifier(f"unknown identifier '{token.text}'", token.line, token.column)
            return Name(token.text, span)

        raise self._fail({"number", "identifier", "'('", "'['", "'-'"})

    def _parse_args(self, closer: str) -> List[Expr]:
        items: List[Expr] = []
        if self._at(closer):
            self._advance()
            return items
        while True:
            items.append(self.parse_expression())
            if self._at(","):
                self._advance()
                continue
            if self._at(closer):
                self._advance()
                return items
            raise self._fail({"','", f"'{closer}'"})

    def _parse_call(self, name: Token) -> Expr:
        span = self._span(name)
        self._expect("(")
        if name.text == "squeeze":
            return self._parse_squeeze(span)
        builtin = get_builtin(name.text)
        if builtin is None:
            raise UnknownIdentifier(f"unknown function '{name.text}'", name.line, name.column)
        args = self._parse_args(")")
        if len(args) not in builtin.arity:
            counts = " or ".join(str(n) for n in builtin.arity)
            raise DslSyntaxError(
                f"{name.text} takes {counts} arguments, got {len(args)}", name.line, name.column
            )
        return Call(name.text, tuple(args), span)

    def _parse_squeeze(self, span: Span) -> Expr:
        var_token = self._expect_id()
        var = var_token.text
        if var in RESERVED or var in self.bound or var in self.local:
            raise Redefinition(f"'{var}' is already defined", var_token.line, var_token.column)
        self._expect(",")
        self.local.append(var)
        try:
            body = self.parse_expression()
        finally:
            self.local.pop()
        self._expect(",")
        at = self.parse_expression()
        self._expect(")")
        return Squeeze(var, body, at, span)


def parse(source: str, allow_decimal: bool = False) -> Program:
    program = Parser(source, allow_decimal).parse_program()
    logger.debug("parsed %d statements", len(program.statements))
    return program


def parse_expression(source: str, allow_decimal: bool = False, names: FrozenSet[str] = frozenset()) -> Expr:
    parser = Parser(source, allow_decimal)
    parser.bound.update(names)
    expr = parser.parse_expression()
    if parser.current.kind != "EOF":
        raise parser._fail({"end of input"})
    return expr
