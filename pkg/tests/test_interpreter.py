import json

import pytest

from nsproj.config import FieldConfig, OutputFormat
from nsproj.dsl import emit, evaluate, parse
from nsproj.dsl.interpreter import Status, evaluate_expression, execute_source
from nsproj.dsl.report import build_report, emit_json, emit_text
from nsproj.models.schemas import EvaluationReport

FAR_POINT = """
let H = 1/eps;
point P = [2*H, 3*H, 1];
assert almost_incident(P, [0, 0, 1]);
print classify(P);
"""

FALSE_POSITIVE = """
point X = [1, 0, 1];
point Y = [eps, 0, 1];
point Z = [0, eps, 1];
print det(X, Y, Z);
assert almost_collinear(X, Y, Z);
"""

EVERY_PREDICATE = """
let H = 1/eps;
point P = [2*H, 3*H, 1];
line L = [0, 0, 1];
matrix S = [[1, 0, 0], [0, 1, 0], [0, 0, eps]];
matrix R = [[3/5, 4/5, 0], [-4/5, 3/5, 0], [0, 0, 1]];
conic C = [[1, 0, 0], [0, 1, 0], [0, 0, -1]];
assert almost_incident(P, L);
assert almost_parallel([1, 0, 0], [1 + eps, eps^2, 1]);
assert almost_collinear([0, 0, 1], [1, 0, 1], [2, eps, 1]);
assert almost_equivalent([1, 0, 1], [1 + eps, eps, 1]);
assert not almost_equivalent([1, 0, 1], [0, 1, 1]);
assert almost_far(P);
assert almost_cocircular([1, 0, 1], [0, 1, 1], [-1, 0, 1], [eps, -1, 1]);
assert almost_singular(S);
assert non_singular([[2, 0, 1], [1, 3, 2], [1, 1, 2]]);
assert almost_affine(R);
assert conic_contains(C, [1 + eps, eps, 1]);
assert in_eps_kernel(S, [0, 0, 1]);
"""


def report_for(source: str, config: FieldConfig = None) -> dict:
    return json.loads(emit_json(evaluate(parse(source), config)))


class TestExecution:
    def test_far_point_passes_with_its_witness(self):
        statements = report_for(FAR_POINT)["statements"]
        assert [s["status"] for s in statements] == ["ok", "ok", "pass", "ok"]
        check = statements[2]
        assert check["verdict"] is True
        assert check["witness"]["text"] == "eps"
        assert check["diagnostic"] == "eps"
        assert statements[3]["value"] == {"kind": "class", "text": "unlimited"}

    def test_false_positive_determinant_fails(self):
        statements = report_for(FALSE_POSITIVE)["statements"]
        assert statements[3]["value"]["text"] == "-eps + eps^2"
        check = statements[4]
        assert check["status"] == "fail"
        assert check["verdict"] is False
        assert check["witness"]["text"] == "1 - eps"

    def test_every_predicate(self):
        execution = execute_source(EVERY_PREDICATE)
        asserted = [o for o in execution.outcomes if o.status is not Status.ok]
        assert len(asserted) == 12
        assert all(o.status is Status.passed for o in asserted)
        assert execution.exit_code(check=True) == 0

    def test_unlimited_shadow_is_an_error(self):
        (outcome,) = execute_source("print shadow(1/eps);").outcomes
        assert outcome.status is Status.error
        assert outcome.error.kind == "UnlimitedNumber"

    def test_errors_skip_dependent_statements(self):
        execution = execute_source("let a = 1/0; let b = a + 1; let c = 2; print c;")
        assert [o.status for o in execution.outcomes] == [Status.error, Status.skipped, Status.ok, Status.ok]
        assert execution.outcomes[1].blocked_by == ["a"]
        assert execution.outcomes[3].value == 2
        assert execution.exit_code() == 2

    def test_skipping_is_transitive(self):
        execution = execute_source("let a = 1/0; let b = a + 1; let c = b * 2; print 3;")
        assert [o.status for o in execution.outcomes] == [Status.error, Status.skipped, Status.skipped, Status.ok]
        assert execution.outcomes[2].blocked_by == ["b"]

    def test_earlier_results_survive_a_later_error(self):
        execution = execute_source("let a = 2; print a; print 1/0; print a * 3;")
        assert [o.status for o in execution.outcomes] == [Status.ok, Status.ok, Status.error, Status.ok]
        assert execution.outcomes[3].value == 6

    def test_check_turns_failures_into_exit_code_one(self):
        execution = execute_source(FALSE_POSITIVE)
        assert execution.exit_code() == 0
        assert execution.exit_code(check=True) == 1

    def test_imaginary_unit_in_real_mode(self):
        (outcome,) = execute_source("print i;", FieldConfig(real=True)).outcomes
        assert outcome.error.kind == "RealModeUnsupported"

    def test_truncation_order_is_applied(self):
        execution = execute_source("print 1/(1 - eps);", FieldConfig(truncation_order=3))
        assert str(execution.outcomes[0].value) == "1 + eps + eps^2"

    def test_non_removable_squeeze(self):
        execution = execute_source("print squeeze(x, 1/x, 0); let a = squeeze(x, 1/x, 0);")
        shown, bound = execution.outcomes
        assert shown.status is Status.ok and str(shown.value).startswith("not removable")
        assert bound.error.kind == "NotRemovableError"

    def test_invalid_root_order_is_a_statement_error(self):
        execution = execute_source("let a = 1; print root(4, 0); print a;")
        assert [o.status for o in execution.outcomes] == [Status.ok, Status.error, Status.ok]
        assert execution.outcomes[1].error.kind == "InvalidRootOrder"
        assert execution.outcomes[2].value == 1

    def test_shadow_of_a_far_point_is_projective(self):
        execution = execute_source("let H = 1/eps; print shadow([2*H, 3*H, 1]); print shadow([eps, eps^2, 0]);")
        far, small = (o.value for o in execution.outcomes[1:])
        assert far.entries == (2, 3, 0)
        assert small.entries == (1, 0, 0)
        assert far == evaluate_expression("psh([2/eps, 3/eps, 1])")

    def test_type_mismatch(self):
        (outcome,) = execute_source("print [1, 2, 3] + 1;").outcomes
        assert outcome.error.kind == "TypeMismatch"

    def test_squeeze(self):
        assert evaluate_expression("squeeze(x, (x^2 - 1)/(x - 1), 1)") == 2
        (outcome,) = execute_source("print squeeze(x, (x^2 - 1)/(x - 1), 1);").outcomes
        assert str(outcome.value) == "2"

    def test_join_binds_a_line(self):
        execution = execute_source("point A = [0, 0, 1]; point B = [1, 0, 1]; line L = join(A, B); print L;")
        assert execution.outcomes[2].value.role.value == "line"
        assert execution.outcomes[3].status is Status.ok


class TestReport:
    def test_empty_report(self):
        assert emit(EvaluationReport(), OutputFormat.json) == '{"schema":1,"statements":[]}'
        assert emit_json(evaluate(parse(""))) == '{"schema":1,"statements":[]}'
        assert emit_text(EvaluationReport()) == ""

    def test_json_terms(self):
        (entry,) = report_for("print 1/eps;")["statements"]
        assert entry["value"]["terms"] == [{"exp": "-1", "re": "1", "im": "0"}]
        assert entry["value"]["leading"] == "eps^(-1)"

    def test_json_is_deterministic(self):
        first = emit_json(evaluate(parse(EVERY_PREDICATE)))
        second = emit_json(evaluate(parse(EVERY_PREDICATE)))
        assert first == second

    def test_statement_locations(self):
        statements = report_for(FAR_POINT)["statements"]
        assert (statements[0]["line"], statements[0]["column"]) == (2, 1)
        assert statements[1]["kind"] == "point" and statements[1]["name"] == "P"

    def test_text_lines(self):
        text = emit_text(build_report(execute_source(FAR_POINT)))
        lines = text.splitlines()
        assert lines[0] == "H = eps^(-1)"
        assert lines[1].startswith("point P = [")
        assert lines[2] == "ASSERT almost_incident(P, [0, 0, 1]) ... PASS (witness eps)"
        assert lines[3] == "classify(P) = unlimited"
        assert lines[-1] == "-- 1 passed, 0 failed, 0 errors, 0 skipped"

    def test_text_for_failures_and_errors(self):
        text = emit_text(build_report(execute_source("let a = 1/0; let b = a + 1; let c = 2; print c;")))
        lines = text.splitlines()
        assert lines[0].startswith("ERROR at line 1: let a = ")
        assert "-> DivisionByZero: " in lines[0]
        assert lines[1].startswith("SKIPPED at line 1:") and lines[1].endswith("(depends on a)")
        assert lines[3] == "c = 2"
        assert lines[-1] == "-- 0 passed, 0 failed, 1 errors, 1 skipped"

    def test_negated_assertion_text(self):
        text = emit_text(build_report(execute_source("assert not almost_equivalent([1, 0, 1], [0, 1, 1]);")))
        assert text.splitlines()[0].startswith("ASSERT not almost_equivalent(") and "... PASS" in text

    def test_failing_assertion_text(self):
        text = emit_text(build_report(execute_source(FALSE_POSITIVE)))
        assert "ASSERT almost_collinear(X, Y, Z) ... FAIL (witness 1 - eps)" in text.splitlines()

    @pytest.mark.parametrize("fmt", ["text", "json"])
    def test_emit_accepts_format_names(self, fmt):
        assert isinstance(emit(evaluate(parse("print 1;")), fmt), str)
