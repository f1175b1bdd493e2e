import logging

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from nsproj import __version__
from nsproj.config import FieldConfig, Mode, get_settings
from nsproj.dsl import evaluate, format_program, parse
from nsproj.errors import DslSyntaxError, NsprojError
from nsproj.models.schemas import (
    EvaluateRequest,
    EvaluationReport,
    HealthResponse,
    ParseRequest,
    ParseResponse,
)
from nsproj.tools import BUILTINS

logger = logging.getLogger(__name__)

# Create FastAPI app
app = FastAPI(
    title="nsproj API",
    description="Exact projective geometry over a non-Archimedean field: parse and evaluate construction scripts",
    version=__version__,
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _syntax_error(e: DslSyntaxError) -> HTTPException:
    return HTTPException(
        status_code=400,
        detail={
            "type": e.kind,
            "message": e.message,
            "line": e.line,
            "column": e.column,
            "expected": sorted(e.expected),
        },
    )


@app.get("/", response_model=HealthResponse)
async def root():
    """Root endpoint - health check."""
    return HealthResponse(status="ok", message="nsproj API is running")


@app.get("/health", response_model=HealthResponse)
async def health_check():
    """Health check endpoint."""
    settings = get_settings()
    return HealthResponse(
        status="healthy",
        message=(
            f"API is running. {len(BUILTINS)} builtins, truncation order {settings.truncation_order}, "
            f"{settings.mode.value} mode."
        ),
    )


@app.post("/parse", response_model=ParseResponse)
async def parse_script(request: ParseRequest):
    """
    Parse a construction script and return its canonical form.

    Args:
        request: ParseRequest with the script source

    Returns:
        ParseResponse with the reformatted source and the statement count
    """
    try:
        program = parse(request.source, allow_decimal=request.allow_decimal)
        return ParseResponse(source=format_program(program), statements=len(program.statements))
    except DslSyntaxError as e:
        raise _syntax_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Parsing failed: {str(e)}")


@app.post(
    "/evaluate",
    response_model=EvaluationReport,
    response_model_by_alias=True,
    response_model_exclude_none=True,
)
async def evaluate_script(request: EvaluateRequest):
    """
    Evaluate a construction script.

    Statement-level errors are part of the report; only a script that does not
    parse is rejected.

    Args:
        request: EvaluateRequest with the source and optional field settings

    Returns:
        The EvaluationReport, in the same JSON form the CLI prints
    """
    settings = get_settings()
    defaults = settings.field_config()
    config = FieldConfig(
        truncation_order=request.truncation_order or defaults.truncation_order,
        real=request.mode == Mode.real if request.mode else defaults.real,
    )
    try:
        program = parse(request.source, allow_decimal=request.allow_decimal or settings.allow_decimal)
        return evaluate(program, config)
    except DslSyntaxError as e:
        raise _syntax_error(e)
    except NsprojError as e:
        raise HTTPException(status_code=422, detail=f"{e.kind}: {str(e)}")
    except Exception as e:
        logger.exception("evaluation crashed")
        raise HTTPException(status_code=500, detail=f"Evaluation failed: {str(e)}")


if __name__ == "__main__":
    import uvicorn

    settings = get_settings()
    uvicorn.run(app, host=settings.host, port=settings.port)
