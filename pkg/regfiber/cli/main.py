#!/usr/bin/env python3
"""
regfiber CLI Main Entry Point

Handles:
- Argument parsing
- Command routing
- Error handling
- Exit codes
"""

import logging
import sys
from typing import List, Optional

from .parser import create_argument_parser
from .handlers import FiberHandler, LatticeHandler, TheoremHandler
from ..core.config import RunConfig, load_config
from ..core.pipeline import Pipeline
from ..errors import RegfiberError, TheoremViolation
from ..utils import Display, ErrorHandler


def main(args: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point

    Args:
        args: Command line arguments (defaults to sys.argv)

    Returns:
        Exit code: 0 success, 1 input error, 2 invariant violation
    """
    error_handler = ErrorHandler(logging.getLogger(__name__))
    try:
        parser = create_argument_parser()
        parsed_args = parser.parse_args(args)

        _setup_logging(parsed_args.verbose)

        config = load_config(parsed_args)
        success = _route_command(Pipeline(config), config)

        return 0 if success else 1

    except KeyboardInterrupt:
        Display.warning("Operation cancelled by user")
        return 1
    except TheoremViolation as e:
        Display.error(f"Invariant violation: {e}")
        if e.certificate is not None:
            Display.key_value_table({"offending point": e.certificate.get("point")})
        return error_handler.exit_code_for(e)
    except RegfiberError as e:
        Display.error(str(e))
        return error_handler.exit_code_for(e)
    except Exception as e:
        Display.error(f"Unexpected error: {e}")
        logging.getLogger(__name__).exception("Unexpected error in main")
        return error_handler.exit_code_for(e)


def _setup_logging(verbose: bool = False) -> None:
    """Set up logging configuration"""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)]
    )


def _route_command(pipeline: Pipeline, config: RunConfig) -> bool:
    """
    Route the configured command to its handler

    Returns:
        True if command executed successfully
    """
    handlers = [
        LatticeHandler(pipeline),
        FiberHandler(pipeline),
        TheoremHandler(pipeline),
    ]

    for handler in handlers:
        if handler.can_handle(config):
            return handler.handle(config)

    Display.error(f"No handler for command '{config.command}'")
    return False


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
