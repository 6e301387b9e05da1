#!/usr/bin/env python3
"""
Error handling helpers shared by the CLI layer
"""

import logging
import traceback
from typing import Any, Callable, Optional

from ..errors import InputError, InvariantViolation

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


class ErrorHandler:
    """
    Centralized error handling patterns
    """

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger(__name__)

    def safe_execute(
        self,
        func: Callable,
        default_return=None,
        error_message: str = "Operation failed",
        *args,
        **kwargs
    ) -> Any:
        """
        Execute function safely with default return on error

        Args:
            func: Function to execute
            default_return: Value to return on error
            error_message: Custom error message
            *args: Arguments for function
            **kwargs: Keyword arguments for function

        Returns:
            Function result or default_return on error
        """
        try:
            return func(*args, **kwargs)
        except InvariantViolation:
            raise
        except Exception as e:
            self.logger.warning(f"{error_message}: {e}")
            return default_return

    def exit_code_for(self, exc: BaseException) -> int:
        """
        Map an exception to a CLI exit status

        InputError -> 1, InvariantViolation -> 2, anything else -> 1
        """
        if isinstance(exc, InvariantViolation):
            return EXIT_INVARIANT_VIOLATION
        if isinstance(exc, InputError):
            return EXIT_INPUT_ERROR
        self.logger.debug(f"Unexpected error: {traceback.format_exc()}")
        return EXIT_INPUT_ERROR
