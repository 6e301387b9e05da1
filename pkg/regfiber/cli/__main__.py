#!/usr/bin/env python3
"""
regfiber CLI Package Entry Point
Enables execution with: python -m regfiber.cli
"""

import sys

from .main import main

if __name__ == "__main__":
    sys.exit(main())
