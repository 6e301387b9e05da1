#!/usr/bin/env python3
"""
File and path utilities
"""

import json
import logging
from pathlib import Path
from typing import Any, TextIO, Union

from ..errors import InputError, SchemaError

logger = logging.getLogger(__name__)


class FileUtils:
    """
    Centralized file operations
    """

    @staticmethod
    def ensure_directory(path: Union[str, Path]) -> Path:
        """
        Ensure directory exists, create if necessary

        Args:
            path: Directory path

        Returns:
            Path object
        """
        path_obj = Path(path)
        path_obj.mkdir(parents=True, exist_ok=True)
        return path_obj

    @staticmethod
    def read_json(file_path: Union[str, Path]) -> Any:
        """
        Read a JSON input document

        Raises:
            InputError: if the file cannot be read
            SchemaError: if it is not valid JSON
        """
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise SchemaError(f"{file_path}: invalid JSON at line {e.lineno}, column {e.colno}") from e
        except OSError as e:
            raise InputError(f"Cannot read {file_path}: {e.strerror or e}") from e

    @staticmethod
    def open_text(file_path: Union[str, Path]) -> TextIO:
        """Open a file for writing, creating parent directories"""
        path_obj = Path(file_path)
        FileUtils.ensure_directory(path_obj.parent)
        return open(path_obj, 'w', encoding='utf-8')
