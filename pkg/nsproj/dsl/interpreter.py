import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Set

from nsproj.config import FieldConfig
from nsproj.core.context import get_field_config, using_field_config
from nsproj.core.hypernumber import EPS, HyperNumber
from nsproj.core.limits import NotRemovable, squeeze_extend
from nsproj.core.projective import HyperVector, Role
from nsproj.core.scalars import IMAGINARY_UNIT, ComplexRational
from nsproj.core.transforms import HyperMatrix
from nsproj.dsl.formatter import format_expression, format_statement
from nsproj.dsl.parser import parse, parse_expression
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
    defined_name,
    free_names,
)
from nsproj.errors import NotRemovableError, NsprojError, RealModeUnsupported, TypeMismatch
from nsproj.tools import get_builtin
from nsproj.tools.values import as_conic, as_matrix, as_number, as_rational, kind_of

logger = logging.getLogger(__name__)


class Status(str, Enum):
    ok = "ok"
    passed = "pass"
    failed = "fail"
    error = "error"
    skipped = "skipped"


@dataclass
class Outcome:
    """What one statement produced."""

    index: int
    statement: Statement
    status: Status
    value: object = None
    error: Optional[NsprojError] = None
    blocked_by: List[str] = field(default_factory=list)

    @property
    def source(self) -> str:
        return format_statement(self.statement)


@dataclass
class Execution:
    config: FieldConfig
    outcomes: List[Outcome] = field(default_factory=list)

    @property
    def has_errors(self) -> bool:
        return any(o.status in (Status.error, Status.skipped) for o in self.outcomes)

    @property
    def has_failures(self) -> bool:
        return any(o.status is Status.failed for o in self.outcomes)

    def exit_code(self, check: bool = False) -> int:
        if self.has_errors:
            return 2
        if check and self.has_failures:
            return 1
        return 0


class Interpreter:
    """Evaluates a parsed program statement by statement.

    A statement whose evaluation raises is recorded with its error; every later
    statement that reads a name it should have bound is skipped.
    """

    def __init__(self, config: Optional[FieldConfig] = None):
        self.config = config or get_field_config()
        self.env: Dict[str, object] = {}
        self.failed: Set[str] = set()

    def run(self, program: Program) -> Execution:
        execution = Execution(self.config)
        with using_field_config(self.config):
            for index, stmt in enumerate(program.statements):
                execution.outcomes.append(self._run_statement(index, stmt))
        return execution

    def _run_statement(self, index: int, stmt: Statement) -> Outcome:
        name = defined_name(stmt)
        blocked = sorted(free_names(stmt) & self.failed)
        if blocked:
            logger.warning("skipping statement %d, it depends on %s", index + 1, ", ".join(blocked))
            if name:
                self.failed.add(name)
            return Outcome(index, stmt, Status.skipped, blocked_by=blocked)

        logger.debug("statement %d: %s", index + 1, format_statement(stmt))
        try:
            if isinstance(stmt, Let):
                value = as_number(self.eval(stmt.expr), f"let {stmt.name}")
                self.env[stmt.name] = value
                return Outcome(index, stmt, Status.ok, value)
            if isinstance(stmt, Bind):
                value = self._bind(stmt)
                self.env[stmt.name] = value
                return Outcome(index, stmt, Status.ok, value)
            if isinstance(stmt, Assert):
                verdict = self.eval(stmt.call)
                holds = verdict.holds != stmt.negated
                return Outcome(index, stmt, Status.passed if holds else Status.failed, verdict)
            if isinstance(stmt, Print):
                return Outcome(index, stmt, Status.ok, self.eval(stmt.expr))
        except NsprojError as e:
            logger.debug("statement %d failed: %s", index + 1, e)
            if name:
                self.failed.add(name)
            return Outcome(index, stmt, Status.error, error=e)
        raise TypeError(f"unknown statement {stmt!r}")

    def _bind(self, stmt: Bind):
        value = self.eval(stmt.expr)
        if stmt.kind in ("point", "line"):
            if not isinstance(value, HyperVector) or len(value) != 3:
                raise TypeMismatch(f"{stmt.kind} {stmt.name} must be a vector with 3 entries")
            return value.with_role(Role(stmt.kind))
        if stmt.kind == "matrix":
            return as_matrix(value, f"matrix {stmt.name}")
        return as_conic(value, f"conic {stmt.name}")

    # expressions

    def eval(self, expr: Expr, local: Optional[Dict[str, object]] = None):
        if isinstance(expr, Number):
            return HyperNumber.standard(expr.value)
        if isinstance(expr, Eps):
            return EPS
        if isinstance(expr, Imag):
            if get_field_config().real:
                raise RealModeUnsupported("the imaginary unit is not available in real mode")
            return HyperNumber.standard(IMAGINARY_UNIT)
        if isinstance(expr, Name):
            if local and expr.name in local:
                return local[expr.name]
            return self.env[expr.name]
        if isinstance(expr, Unary):
            return _negate(self.eval(expr.operand, local))
        if isinstance(expr, Binary):
            return _binary(expr.op, self.eval(expr.left, local), self.eval(expr.right, local))
        if isinstance(expr, ListExpr):
            return _list_value([self.eval(item, local) for item in expr.items])
        if isinstance(expr, Call):
            args = [self.eval(a, local) for a in expr.args]
            return get_builtin(expr.name)(*args)
        if isinstance(expr, Squeeze):
            return self._squeeze(expr, local)
        raise TypeError(f"unknown expression {expr!r}")

    def _squeeze(self, expr: Squeeze, local):
        at = as_number(self.eval(expr.at, local), "squeeze point")

        def body(x: HyperNumber) -> HyperNumber:
            scope = dict(local or {})
            scope[expr.var] = x
            return as_number(self.eval(expr.body, scope), "squeezed expression")

        result = squeeze_extend(body, at)
        if isinstance(result, ComplexRational):
            return HyperNumber.standard(result)
        return result


def _negate(value):
    if isinstance(value, HyperNumber):
        return -value
    if isinstance(value, HyperVector):
        return value.scale(-1)
    if isinstance(value, HyperMatrix):
        return value.map(lambda e: -e)
    raise TypeMismatch(f"cannot negate a {kind_of(value)}")


def _binary(op: str, left, right):
    if isinstance(left, HyperNumber) and isinstance(right, HyperNumber):
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if op == "/":
            return left / right
        return left ** as_rational(right, "exponent")

    if op == "*":
        if isinstance(left, HyperNumber) and isinstance(right, (HyperVector, HyperMatrix)):
            left, right = right, left
        if isinstance(right, HyperNumber):
            if isinstance(left, HyperVector):
                return left.scale(right)
            if isinstance(left, HyperMatrix):
                return left.map(lambda e: e * right)
        if isinstance(left, HyperMatrix) and isinstance(right, (HyperVector, HyperMatrix)):
            return left @ right
    if op == "/" and isinstance(right, HyperNumber):
        inv = right.reciprocal()
        if isinstance(left, HyperVector):
            return left.scale(inv)
        if isinstance(left, HyperMatrix):
            return left.map(lambda e: e * inv)
    if op in ("+", "-") and isinstance(left, HyperVector) and isinstance(right, HyperVector):
        if len(left) == len(right):
            sign = 1 if op == "+" else -1
            return HyperVector(tuple(a + b * sign for a, b in zip(left.entries, right.entries)))
    if op in ("+", "-") and isinstance(left, HyperMatrix) and isinstance(right, HyperMatrix):
        sign = 1 if op == "+" else -1
        return HyperMatrix(
            tuple(tuple(a + b * sign for a, b in zip(ra, rb)) for ra, rb in zip(left.rows, right.rows))
        )
    for operand in (left, right):
        if isinstance(operand, NotRemovable):
            raise NotRemovableError(f"operand of '{op}' is {operand}")
    raise TypeMismatch(f"cannot apply '{op}' to a {kind_of(left)} and a {kind_of(right)}")


def _list_value(items: List[object]):
    if items and all(isinstance(i, HyperVector) for i in items):
        if len(items) == 3 and all(len(i) == 3 for i in items):
            return HyperMatrix(tuple(i.entries for i in items))
        raise TypeMismatch("a nested list must be a 3×3 matrix")
    if not all(isinstance(i, HyperNumber) for i in items):
        raise TypeMismatch("list entries must be numbers or rows of numbers")
    return HyperVector(tuple(items))


def execute(program: Program, config: Optional[FieldConfig] = None) -> Execution:
    return Interpreter(config).run(program)


def evaluate_expression(source: str, config: Optional[FieldConfig] = None):
    """Value of one closed expression, e.g. the canonical text of a HyperNumber."""
    expr = parse_expression(source)
    interpreter = Interpreter(config)
    with using_field_config(interpreter.config):
        return interpreter.eval(expr)


def execute_source(source: str, config: Optional[FieldConfig] = None, allow_decimal: bool = False) -> Execution:
    return execute(parse(source, allow_decimal), config)


def describe_value(value) -> str:
    if isinstance(value, Enum):
        return value.value
    return str(value)


def call_text(stmt: Assert) -> str:
    text = format_expression(stmt.call)
    return f"not {text}" if stmt.negated else text


__all__ = [
    "Execution",
    "Interpreter",
    "Outcome",
    "Status",
    "call_text",
    "describe_value",
    "evaluate_expression",
    "execute",
    "execute_source",
]
