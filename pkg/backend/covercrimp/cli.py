"""Command-line front door: JSON in, canonical JSON out"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError, field_validator

from covercrimp import __version__
from covercrimp.commands import build_registry
from covercrimp.config import settings
from covercrimp.constants import CliConstants
from covercrimp.curves.marked_curve import StabilityParams
from covercrimp.errors import CoverCrimpError, DomainError, SchemaError, error_response_for
from covercrimp.serialization import canonical_json, to_table

_logger = logging.getLogger(__name__)

SUBCOMMANDS = ("disc", "crimps", "stable", "hurwitz", "rh", "iso", "validate")


class JobConfig(BaseModel):
    """One invocation; unset options fall back to the input document, then to settings"""

    subcommand: str
    input: str = "-"
    field: str | None = None
    precision: int | None = Field(default=None, ge=CliConstants.MIN_PRECISION)
    epsilon: str | None = None
    budget: int | None = Field(default=None, ge=1)
    workers: int | None = Field(default=None, ge=1)
    strategy: str | None = None
    output_format: Literal["json", "table"] = "json"

    @field_validator("subcommand")
    @classmethod
    def _known_subcommand(cls, value: str) -> str:
        if value not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {value!r}")
        return value

    @field_validator("epsilon")
    @classmethod
    def _exact_epsilon(cls, value: str | None) -> str | None:
        if value is None:
            return None
        try:
            return str(StabilityParams.parse(value))
        except CoverCrimpError as err:
            raise ValueError(err.message) from err


def _read_input(source: str) -> Any:
    """A path, inline JSON, or ``-`` for stdin"""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        path = Path(source)
        if not path.is_file():
            raise SchemaError(f"Input file not found: {source}")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"Input is not valid JSON: {err.msg}", {"line": err.lineno}) from err


def _render(report: dict[str, Any], output_format: str) -> str:
    if output_format == "table":
        return to_table(report)
    return canonical_json(report)


def run(cfg: JobConfig) -> tuple[int, str]:
    """Run one job; returns the exit status and the serialized report"""
    registry = build_registry()
    try:
        document = _read_input(cfg.input)
        collection = registry.get_collection_for_command(cfg.subcommand)
        if collection is None:
            raise SchemaError(f"Unknown subcommand: {cfg.subcommand}")
        report = collection.call_command(cfg.subcommand, document, cfg)
    except CoverCrimpError as err:
        _logger.error(f"{cfg.subcommand} failed: [{err.error_type}] {err.message}")
        return err.exit_code, _render(error_response_for(err), cfg.output_format)
    except ZeroDivisionError as err:
        _logger.error(f"{cfg.subcommand} failed: {err}")
        failure = DomainError(f"Division by zero: {err}")
        return failure.exit_code, _render(error_response_for(failure), cfg.output_format)
    return CliConstants.EXIT_OK, _render(report, cfg.output_format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covercrimp",
        description="Exact computations with covers of a disk, crimps, weighted stability "
        "and monodromy",
        epilog=build_registry().overview(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"covercrimp {__version__}")
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument(
        "--input", default="-", help="JSON file, inline JSON object, or - for stdin (default)"
    )
    parser.add_argument("--field", help="'rational', 'F7' or a prime q")
    parser.add_argument("--precision", type=int, help="truncation order N of k[t]/t^N")
    parser.add_argument("--epsilon", help="stability weight as an exact fraction, e.g. 1/3")
    parser.add_argument("--budget", type=int, help="largest search space to walk")
    parser.add_argument("--workers", type=int, help="processes for sharded searches")
    parser.add_argument(
        "--strategy",
        choices=("subalgebra-first", "branch-first"),
        help="order of the crimp conditions during enumeration",
    )
    parser.add_argument("--format", dest="output_format", choices=("json", "table"), default="json")
    parser.add_argument(
        "--describe",
        action="store_true",
        help="print the subcommand's description and input schema instead of running it",
    )
    return parser


def _configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    if args.describe:
        command = build_registry().get_command(args.subcommand)
        sys.stdout.write(_render(command.describe(), args.output_format))
        return CliConstants.EXIT_OK
    del args.describe
    try:
        cfg = JobConfig(**vars(args))
    except ValidationError as err:
        failure = SchemaError(
            "Invalid options",
            {
                "errors": [
                    {"loc": ".".join(map(str, e["loc"])), "msg": e["msg"]} for e in err.errors()
                ]
            },
        )
        _logger.error(f"{args.subcommand}: invalid options")
        sys.stdout.write(_render(error_response_for(failure), args.output_format))
        return failure.exit_code
    status, text = run(cfg)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
