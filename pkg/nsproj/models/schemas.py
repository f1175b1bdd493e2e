from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from nsproj.config import Mode

SCHEMA_VERSION = 1


class TermModel(BaseModel):
    """One term c·eps^exp of a series, every part an exact rational string."""

    exp: str = Field(..., description="Exponent as 'p/q' or an integer")
    re: str = Field(..., description="Real part of the coefficient")
    im: str = Field(..., description="Imaginary part of the coefficient")


class ValueModel(BaseModel):
    kind: str = Field(..., description="number, vector, matrix, conic, class, verdict or not_removable")
    text: str = Field(..., description="Canonical text form")
    terms: Optional[List[TermModel]] = Field(None, description="Series terms of a number")
    entries: Optional[List[List[TermModel]]] = Field(None, description="Entries of a vector")
    rows: Optional[List[List[List[TermModel]]]] = Field(None, description="Rows of a matrix or conic")
    role: Optional[str] = Field(None, description="point or line")
    leading: Optional[str] = Field(None, description="Leading term of a number")


class ErrorModel(BaseModel):
    type: str
    message: str


class StatementReport(BaseModel):
    index: int
    line: Optional[int] = None
    column: Optional[int] = None
    kind: str = Field(..., description="let, point, line, matrix, conic, assert or print")
    source: str = Field(..., description="Canonical source of the statement")
    subject: Optional[str] = Field(None, description="Printed expression or asserted call")
    name: Optional[str] = None
    status: str = Field(..., description="ok, pass, fail, error or skipped")
    value: Optional[ValueModel] = None
    verdict: Optional[bool] = None
    witness: Optional[ValueModel] = None
    diagnostic: Optional[str] = Field(None, description="Leading term of the witness, or deviations")
    error: Optional[ErrorModel] = None
    depends_on: Optional[List[str]] = Field(None, description="Failed names a skipped statement reads")


class EvaluationReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    statements: List[StatementReport] = Field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for s in self.statements if s.status == status)


# HTTP surface


class HealthResponse(BaseModel):
    status: str
    message: str


class ParseRequest(BaseModel):
    source: str = Field(..., description="Construction script")
    allow_decimal: bool = Field(False, description="Accept finite decimal literals as exact rationals")


class ParseResponse(BaseModel):
    source: str = Field(..., description="Canonical form of the script")
    statements: int


class EvaluateRequest(BaseModel):
    source: str = Field(..., description="Construction script")
    truncation_order: Optional[int] = Field(None, ge=1, description="Significant orders kept per number")
    mode: Optional[Mode] = Field(None, description="complex or real")
    allow_decimal: bool = False
