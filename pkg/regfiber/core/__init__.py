"""
Run configuration, JSON schemas and the command pipeline
"""

from .config import RunConfig, load_config
from .pipeline import Pipeline

__all__ = ["RunConfig", "load_config", "Pipeline"]
