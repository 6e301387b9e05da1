#!/usr/bin/env python3
"""
regfiber CLI Argument Parser

Handles:
- Command line argument definitions
- Help text organization
"""

import argparse

from .. import __version__
from ..core.config import COMMANDS
from ..core.output import FORMATS
from ..errors import InputError


class _ArgumentParser(argparse.ArgumentParser):
    """Raises InputError on usage errors"""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def create_argument_parser() -> argparse.ArgumentParser:
    """
    Create the argument parser for regfiber

    Flags default to None so that only explicit values override the config file.
    """
    parser = _ArgumentParser(
        prog="regfiber",
        description="Regularity criterion checks for affine Springer fibers of GL(n)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=_get_examples_text()
    )

    _add_basic_commands(parser)
    _add_input_options(parser)
    _add_output_options(parser)
    _add_advanced_options(parser)

    return parser


def _add_basic_commands(parser: argparse.ArgumentParser) -> None:
    basic_group = parser.add_argument_group("basic commands")

    basic_group.add_argument(
        "command",
        nargs="?",
        choices=COMMANDS,
        help="Command to run; may also be given by the config file"
    )


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    """Config file and input documents"""
    input_group = parser.add_argument_group("inputs", "Versioned JSON documents")

    source = input_group.add_mutually_exclusive_group()
    source.add_argument(
        "--config",
        metavar="PATH",
        help="JSON config file (schema_version 1)"
    )
    source.add_argument(
        "--fixture",
        metavar="NAME",
        help="Config shipped with regfiber (sl2_grid, gl3_split, gl3_split_unit, gl4_elliptic)"
    )

    input_group.add_argument("--point", metavar="PATH", help="GrassPoint document")
    input_group.add_argument("--fiber", metavar="PATH", help="FiberDatum document")
    input_group.add_argument("--window", metavar="PATH", help="EnumWindow document")

    input_group.add_argument(
        "--seed",
        type=int,
        help="Seed for random samples (overrides the window seed)"
    )


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    output_group = parser.add_argument_group("output")

    output_group.add_argument(
        "--format",
        choices=FORMATS,
        help="Record stream format (default: json lines)"
    )

    output_group.add_argument(
        "--out",
        metavar="PATH",
        help="Write the record stream to PATH instead of stdout"
    )

    output_group.add_argument(
        "--timing",
        action="store_true",
        help="Report wall time in summaries (output is then not reproducible)"
    )


def _add_advanced_options(parser: argparse.ArgumentParser) -> None:
    """Add advanced options"""
    advanced_group = parser.add_argument_group("advanced options", "Performance and debugging")

    advanced_group.add_argument(
        "--parallel",
        type=int,
        metavar="N",
        help="Worker processes for verify-theorem (default: 1)"
    )

    advanced_group.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Verbose output for debugging"
    )

    advanced_group.add_argument(
        "--version",
        action="version",
        version=f"regfiber v{__version__}"
    )


def _get_examples_text() -> str:
    """Get examples text for help"""
    return """
Examples:
  regfiber sl2-golden                            → SL(2) closed-form comparison table
  regfiber verify-theorem --fixture gl3_split    → Certify the split GL(3) fibers
  regfiber verify-theorem --fixture gl4_elliptic --parallel 4
  regfiber check-point --point x.json --fiber u.json
  regfiber retract --config run.json --format csv --out retractions.csv

Exit status:
  0  success
  1  input error (malformed documents report line and column)
  2  internal invariant violation
"""
