"""Command line: ``nsproj run <file|-> [flags]`` and ``nsproj serve``."""
import argparse
import logging
import sys
from typing import List, Optional

from nsproj import __version__
from nsproj.config import FieldConfig, Mode, OutputFormat, get_settings
from nsproj.dsl.interpreter import execute
from nsproj.dsl.parser import parse
from nsproj.dsl.report import build_report, emit
from nsproj.errors import DslSyntaxError

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_ASSERTION, EXIT_ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog="nsproj", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=settings.log_level, help="logging level (stderr)")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="evaluate a construction script")
    run.add_argument("file", help="script path, or - for stdin")
    run.add_argument("--order", type=int, default=settings.truncation_order, help="truncation order K")
    run.add_argument("--mode", choices=[m.value for m in Mode], default=settings.mode.value)
    run.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], default=settings.output_format.value
    )
    run.add_argument("--check", action="store_true", help="exit with 1 when an assertion fails")
    run.add_argument("--allow-decimal", action="store_true", default=settings.allow_decimal)

    serve = commands.add_parser("serve", help="serve the HTTP API")
    serve.add_argument("--host", default=settings.host)
    serve.add_argument("--port", type=int, default=settings.port)
    return parser


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def run_command(args: argparse.Namespace) -> int:
    if args.order < 1:
        print("error: --order must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        source = _read_source(args.file)
    except OSError as e:
        print(f"error: cannot read {args.file}: {e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        program = parse(source, allow_decimal=args.allow_decimal)
    except DslSyntaxError as e:
        print(f"{args.file}:{e.line}:{e.column}: {e.kind}: {e}", file=sys.stderr)
        return EXIT_ERROR

    config = FieldConfig(truncation_order=args.order, real=args.mode == Mode.real.value)
    execution = execute(program, config)
    sys.stdout.write(emit(build_report(execution), OutputFormat(args.output_format)))
    if args.output_format == OutputFormat.json.value:
        sys.stdout.write("\n")
    return execution.exit_code(check=args.check)


def serve_command(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("nsproj.main:app", host=args.host, port=args.port)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "serve":
        return serve_command(args)
    return run_command(args)


if __name__ == "__main__":
    sys.exit(main())
