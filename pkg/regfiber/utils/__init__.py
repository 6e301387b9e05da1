"""
regfiber utilities package
Shared helpers for the CLI layer
"""

from .error_handler import ErrorHandler
from .display import Display
from .file_utils import FileUtils

__all__ = [
    'ErrorHandler',
    'Display',
    'FileUtils'
]
