"""
regfiber CLI Package
Command line front end over the verification pipeline
"""

from .main import main
from .parser import create_argument_parser

__all__ = ['main', 'create_argument_parser']
