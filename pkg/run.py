# run.py
import argparse
import json
import sys

import uvicorn
from dotenv import load_dotenv
from pydantic import ValidationError

# Load environment variables
load_dotenv()

from core.hecke_core.cli.commands import Command, RunFlags, run
from core.hecke_core.cli.schemas import OutputFormat, RunConfig
from infrastructure.config.engine_config import API_HOST, API_PORT, DEFAULT_JOBS, configure_logging


def run_server(host=API_HOST, port=API_PORT, reload=True):
    """Run the HTTP surface"""
    print(f"Starting hecke core service on http://{host}:{port}", file=sys.stderr)
    uvicorn.run("core.hecke_core.main:app", host=host, port=port, reload=reload)


def load_config(path):
    """Read and validate a RunConfig JSON file; None when no path was given"""
    if path is None:
        return None
    with open(path, "r", encoding="utf-8") as handle:
        return RunConfig(**json.load(handle))


def build_parser():
    parser = argparse.ArgumentParser(description="Anti-spherical Hecke category toolkit")
    subparsers = parser.add_subparsers(dest="command", required=True)

    serve = subparsers.add_parser("serve", help="Run the HTTP API")
    serve.add_argument("--host", default=API_HOST, help="Host to run the server on")
    serve.add_argument("--port", type=int, default=API_PORT, help="Port to run the server on")
    serve.add_argument("--no-reload", action="store_true", help="Disable auto-reload")

    for command in Command:
        sub = subparsers.add_parser(command.value)
        sub.add_argument("--config", help="Path to a RunConfig JSON file")
        sub.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
        sub.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Worker processes for per-word work")
        sub.add_argument("--max-length", type=int, default=None, help="Override max_length from the config")
        if command in (Command.TABLEAUX, Command.EULER, Command.GRAM, Command.BGG):
            sub.add_argument("--weight", default=None, help="Weight word, e.g. 'στστ'")
        if command == Command.GRAM:
            sub.add_argument("--shape", default=None, help="Shape element")
        if command == Command.KL:
            sub.add_argument("--invert", action="store_true", help="First row of the inverse matrix")
        if command == Command.TABLEAUX:
            sub.add_argument("--reduced", action="store_true", help="Only canonical words of quotient elements")
        if command == Command.BGG:
            sub.add_argument("--check-exactness", action="store_true", help="Exit 2 unless every complex is exact")
        if command == Command.GRAM_FAMILY:
            sub.add_argument("--n", type=int, default=None)
            sub.add_argument("--p", type=int, default=None)
    return parser


def main(argv=None):
    """Main entry point"""
    args = build_parser().parse_args(argv)
    configure_logging(stream=sys.stderr)

    if args.command == "serve":
        run_server(host=args.host, port=args.port, reload=not args.no_reload)
        return 0

    try:
        config = load_config(args.config)
    except (OSError, ValueError, ValidationError) as exc:
        print(json.dumps({"error": {"kind": "invalid_config", "message": str(exc)}}, ensure_ascii=False, indent=2))
        return 1

    flags = RunFlags(
        format=OutputFormat(args.format) if args.format else None,
        jobs=args.jobs,
        max_length=args.max_length,
        weight=getattr(args, "weight", None),
        shape=getattr(args, "shape", None),
        invert=getattr(args, "invert", False),
        check_exactness=getattr(args, "check_exactness", False),
        reduced=getattr(args, "reduced", False),
        n=getattr(args, "n", None),
        p=getattr(args, "p", None),
    )
    result = run(args.command, config, flags)
    sys.stdout.write(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
