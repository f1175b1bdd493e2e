"""Evaluation reports and their text and JSON renderings."""
from enum import Enum
from typing import List

from nsproj.config import OutputFormat
from nsproj.core.conics import ConicForm
from nsproj.core.hypernumber import HyperNumber
from nsproj.core.limits import NotRemovable
from nsproj.core.projective import HyperVector, Role
from nsproj.core.transforms import HyperMatrix
from nsproj.dsl.formatter import format_expression
from nsproj.dsl.interpreter import Execution, Outcome, Status, call_text, describe_value
from nsproj.dsl.syntax import Assert, Bind, Let, Print
from nsproj.models.schemas import ErrorModel, EvaluationReport, StatementReport, TermModel, ValueModel
from nsproj.tools import Verdict


def number_terms(x: HyperNumber) -> List[TermModel]:
    return [TermModel(exp=str(q), re=str(c.re), im=str(c.im)) for q, c in x.terms]


def value_model(value) -> ValueModel:
    text = describe_value(value)
    if isinstance(value, HyperNumber):
        return ValueModel(kind="number", text=text, terms=number_terms(value), leading=str(value.leading_term()))
    if isinstance(value, HyperVector):
        role = None if value.role is Role.plain else value.role.value
        return ValueModel(kind="vector", text=text, entries=[number_terms(e) for e in value.entries], role=role)
    if isinstance(value, (HyperMatrix, ConicForm)):
        matrix = value.matrix if isinstance(value, ConicForm) else value
        kind = "conic" if isinstance(value, ConicForm) else "matrix"
        return ValueModel(kind=kind, text=text, rows=[[number_terms(e) for e in row] for row in matrix.rows])
    if isinstance(value, Verdict):
        return ValueModel(kind="verdict", text=text)
    if isinstance(value, NotRemovable):
        return ValueModel(kind="not_removable", text=text)
    if isinstance(value, Enum):
        return ValueModel(kind="class", text=text)
    return ValueModel(kind=type(value).__name__, text=text)


def _statement_kind(outcome: Outcome) -> str:
    stmt = outcome.statement
    if isinstance(stmt, Let):
        return "let"
    if isinstance(stmt, Bind):
        return stmt.kind
    if isinstance(stmt, Assert):
        return "assert"
    return "print"


def statement_report(outcome: Outcome) -> StatementReport:
    stmt = outcome.statement
    entry = StatementReport(
        index=outcome.index,
        line=stmt.span.line if stmt.span else None,
        column=stmt.span.column if stmt.span else None,
        kind=_statement_kind(outcome),
        source=outcome.source,
        status=outcome.status.value,
    )
    if isinstance(stmt, (Let, Bind)):
        entry.name = stmt.name
    elif isinstance(stmt, Assert):
        entry.subject = call_text(stmt)
    elif isinstance(stmt, Print):
        entry.subject = format_expression(stmt.expr)

    if outcome.status is Status.error:
        entry.error = ErrorModel(type=outcome.error.kind, message=str(outcome.error))
    elif outcome.status is Status.skipped:
        entry.depends_on = list(outcome.blocked_by)
    elif isinstance(outcome.value, Verdict):
        verdict = outcome.value
        entry.verdict = verdict.holds
        if verdict.witness is not None:
            entry.witness = value_model(verdict.witness)
        if verdict.note:
            entry.diagnostic = verdict.note
        elif isinstance(verdict.witness, HyperNumber):
            entry.diagnostic = str(verdict.witness.leading_term())
        if isinstance(stmt, Print):
            entry.value = value_model(verdict)
    else:
        entry.value = value_model(outcome.value)
    return entry


def build_report(execution: Execution) -> EvaluationReport:
    return EvaluationReport(statements=[statement_report(o) for o in execution.outcomes])


def _text_line(s: StatementReport) -> str:
    where = f"line {s.line}" if s.line is not None else f"statement {s.index + 1}"
    if s.status == Status.error.value:
        return f"ERROR at {where}: {s.source} -> {s.error.type}: {s.error.message}"
    if s.status == Status.skipped.value:
        return f"SKIPPED at {where}: {s.source} (depends on {', '.join(s.depends_on or [])})"
    witness = f" (witness {s.witness.text})" if s.witness is not None else ""
    if s.kind == "assert":
        note = f" [{s.diagnostic}]" if s.diagnostic and s.witness is None else ""
        return f"ASSERT {s.subject} ... {s.status.upper()}{witness}{note}"
    if s.kind == "print":
        return f"{s.subject} = {s.value.text}{witness}"
    prefix = "" if s.kind == "let" else f"{s.kind} "
    return f"{prefix}{s.name} = {s.value.text}"


def emit_text(report: EvaluationReport) -> str:
    lines = [_text_line(s) for s in report.statements]
    asserted = report.count("pass") + report.count("fail")
    if asserted or report.count("error") or report.count("skipped"):
        lines.append(
            f"-- {report.count('pass')} passed, {report.count('fail')} failed, "
            f"{report.count('error')} errors, {report.count('skipped')} skipped"
        )
    return "".join(line + "\n" for line in lines)


def emit_json(report: EvaluationReport) -> str:
    return report.model_dump_json(by_alias=True, exclude_none=True)


def emit(report: EvaluationReport, fmt: OutputFormat = OutputFormat.text) -> str:
    if OutputFormat(fmt) is OutputFormat.json:
        return emit_json(report)
    return emit_text(report)
