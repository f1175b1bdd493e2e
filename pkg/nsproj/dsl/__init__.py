"""Construction scripts: parse, evaluate, report."""
from typing import Optional

from nsproj.config import FieldConfig
from nsproj.dsl.formatter import format_program
from nsproj.dsl.interpreter import execute
from nsproj.dsl.parser import parse
from nsproj.dsl.report import build_report, emit
from nsproj.dsl.syntax import Program
from nsproj.models.schemas import EvaluationReport


def evaluate(program: Program, config: Optional[FieldConfig] = None) -> EvaluationReport:
    return build_report(execute(program, config))


__all__ = ["emit", "evaluate", "format_program", "parse"]
