"""Entry point for the formal group law engine."""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

import config
from cli.commands import COMMANDS
from cli.presets import load_cli_params
from core.plugins import available_fgl_types, load_plugins
from core.schema import ValidationError

__all__ = ["build_parser", "run"]

logger = logging.getLogger("run_fgl")

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="run_fgl", description="Exact formal group law computations")
    parser.add_argument("command", choices=sorted(COMMANDS), help="subcommand to run")
    parser.add_argument("--input", help="JSON or YAML series document")
    parser.add_argument("--builtin", help="named law instead of --input")
    parser.add_argument("--orientation", help="orientation series document (orient-roundtrip)")
    parser.add_argument("--prime", type=int)
    parser.add_argument("--degree", type=int, help="truncation degree")
    parser.add_argument("--count", type=int, help="number of Hazewinkel generators")
    parser.add_argument("--n", type=int, help="n-series index, number of roots or projective dimension")
    parser.add_argument("--m", type=int, help="second number of roots (multiplicativity)")
    parser.add_argument("--a", help="coefficient a of the scaled law x + y + a*x*y")
    parser.add_argument("--format", choices=["json", "text"])
    parser.add_argument("--output", help="write to this file instead of stdout")
    parser.add_argument("--settings", help="JSON file whose 'parameters' override the defaults")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def _configure_logging(verbosity: int) -> None:
    if not verbosity:
        return
    level = logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=config.LOG_FORMAT, stream=sys.stderr)


def _merge_settings(args: argparse.Namespace) -> argparse.Namespace:
    params = load_cli_params(args.settings)
    args.degree_given = args.degree
    for key in ("degree", "count", "n", "m", "a", "format", "builtin"):
        if getattr(args, key) is None:
            setattr(args, key, params[key])
    args.plugins = params["plugins"]
    return args


def run(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    0 on success, 1 when a certificate's verdict is false, 2 on usage,
    parse or precondition errors (with ``error: <message>`` on stderr).
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR

    _configure_logging(args.verbose)
    try:
        args = _merge_settings(args)
        load_plugins(args.plugins)
        if args.builtin and args.builtin not in available_fgl_types():
            raise KeyError(f"unknown formal group law {args.builtin!r}; known: {', '.join(available_fgl_types())}")
        result = COMMANDS[args.command](args)
    except (ValueError, ValidationError, OSError, RuntimeError) as exc:
        print(f"error: {_message(exc)}", file=sys.stderr)
        return EXIT_ERROR
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_ERROR

    text = result.render(args.format)
    if args.output:
        with open(args.output, "w", encoding="utf8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if not result.verdict:
        for cert in result.certificates:
            if not cert.verdict:
                logger.warning("%s certificate failed with %d violation(s)", cert.kind, len(cert.violations))
        return EXIT_VERDICT_FALSE
    return EXIT_OK


def _message(exc: BaseException) -> str:
    message = getattr(exc, "message", None) or str(exc)
    return message.splitlines()[0] if message else type(exc).__name__


if __name__ == "__main__":  # pragma: no cover - manual launch
    sys.exit(run())
