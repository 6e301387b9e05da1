#!/usr/bin/env python3
"""
Base Handler Class
Provides common interface for all CLI handlers
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Tuple

from ...core.config import RunConfig
from ...core.output import RecordWriter
from ...core.pipeline import Pipeline
from ...utils import ErrorHandler


class BaseHandler(ABC):
    """
    Base class for all CLI handlers

    Provides:
    - Common interface
    - Record stream output
    - Logging
    """

    commands: tuple = ()

    def __init__(self, pipeline: Pipeline):
        self.pipeline = pipeline
        self.logger = logging.getLogger(self.__class__.__name__)
        self.error_handler = ErrorHandler(self.logger)

    def can_handle(self, config: RunConfig) -> bool:
        """
        Check if this handler can process the given configuration

        Args:
            config: Assembled run configuration

        Returns:
            True if this handler owns the configured command
        """
        return config.command in self.commands

    @abstractmethod
    def handle(self, config: RunConfig) -> bool:
        """
        Handle the command

        Args:
            config: Assembled run configuration

        Returns:
            True if command executed successfully
        """
        pass

    def emit(self, config: RunConfig, records: Iterable[Dict[str, Any]],
             keep: Tuple[str, ...] = ()) -> List[Dict[str, Any]]:
        """
        Write the record stream as it is produced; whatever was produced is
        flushed even on error

        Args:
            config: Assembled run configuration
            records: Record stream from the pipeline
            keep: Record kinds to hand back for the terminal summary

        Returns:
            The written records whose kind is in keep
        """
        writer = RecordWriter(config.format, config.out)
        kept = []
        try:
            for record in records:
                writer.add(record)
                if record.get("kind") in keep:
                    kept.append(record)
        finally:
            writer.flush()
        self.logger.info(f"Emitted {writer.count} records")
        return kept
