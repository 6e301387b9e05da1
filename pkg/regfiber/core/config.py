#!/usr/bin/env python3
"""
Run configuration

RunConfig is assembled from the parsed CLI arguments and an optional JSON
config file. Precedence: explicit CLI flag > config file > default.
"""

import json
import logging
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..errors import InputError, SchemaError
from ..utils.file_utils import FileUtils
from .output import FORMATS
from .schema import check_version

logger = logging.getLogger(__name__)

COMMANDS = ("retract", "check-point", "enumerate-fiber", "verify-theorem", "sl2-golden")

# Keys that may name a separate JSON document instead of holding it inline
_DOCUMENT_KEYS = ("point", "fiber", "window")

_FILE_KEYS = {
    "schema_version", "command", "point", "fiber", "parabolics", "borel", "window",
    "seed", "format", "parallel", "c_values", "t_values", "probe", "timing", "out",
}

Document = Dict[str, Any]


@dataclass
class RunConfig:
    command: Optional[str] = None
    point: Optional[Document] = None
    fiber: Optional[Union[Document, List[Document]]] = None
    parabolics: Optional[List[Any]] = None
    borel: Optional[List[Any]] = None
    window: Optional[Document] = None
    seed: Optional[int] = None
    format: str = "json"
    out: Optional[Path] = None
    parallel: int = 1
    c_values: Optional[List[Any]] = None
    t_values: Optional[List[Any]] = None
    probe: Optional[Document] = None
    timing: bool = False

    def validate(self) -> "RunConfig":
        if self.command is None:
            raise InputError("No command given (on the command line or in the config file)")
        if self.command not in COMMANDS:
            raise InputError(f"Unknown command '{self.command}'; expected one of {', '.join(COMMANDS)}")
        if self.format not in FORMATS:
            raise InputError(f"Unknown output format '{self.format}'")
        if not isinstance(self.parallel, int) or self.parallel < 1:
            raise InputError(f"parallel must be a positive integer, got {self.parallel!r}")
        if self.seed is not None and (isinstance(self.seed, bool) or not isinstance(self.seed, int)):
            raise InputError(f"seed must be an integer, got {self.seed!r}")
        return self

    @property
    def fibers(self) -> List[Document]:
        if self.fiber is None:
            return []
        return self.fiber if isinstance(self.fiber, list) else [self.fiber]


def _load_document(value: Any, base_dir: Optional[Path], key: str) -> Any:
    """Inline objects pass through; strings are paths to versioned documents"""
    if not isinstance(value, str):
        return value
    path = Path(value)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    doc = FileUtils.read_json(path)
    check_version(doc, f"{key} document {path}")
    return doc


def _resolve(value: Any, base_dir: Optional[Path], key: str) -> Any:
    if isinstance(value, list) and key == "fiber":
        return [_load_document(v, base_dir, key) for v in value]
    return _load_document(value, base_dir, key)


def read_fixture(name: str) -> Document:
    """A config shipped in regfiber/fixtures, by name with or without .json"""
    filename = name if name.endswith(".json") else f"{name}.json"
    resource = resources.files("regfiber") / "fixtures" / filename
    if not resource.is_file():
        raise InputError(f"No fixture named '{name}'")
    try:
        return json.loads(resource.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(f"Fixture {filename}: invalid JSON at line {e.lineno}, column {e.colno}") from e


def config_from_document(data: Document, base_dir: Optional[Path] = None) -> Dict[str, Any]:
    """Validated key/value pairs of a config file"""
    check_version(data, "config")
    values = {}
    for key, value in data.items():
        if key not in _FILE_KEYS:
            logger.warning(f"Ignoring unknown config key '{key}'")
            continue
        if key == "schema_version":
            continue
        if key in _DOCUMENT_KEYS:
            value = _resolve(value, base_dir, key)
        elif key == "out" and value is not None:
            value = Path(value)
        values[key] = value
    return values


def load_config(args) -> RunConfig:
    """
    Build the RunConfig for a parsed argument namespace

    Raises:
        InputError: for missing or conflicting settings
        SchemaError: for malformed config documents
    """
    values: Dict[str, Any] = {}
    if getattr(args, "fixture", None):
        values.update(config_from_document(read_fixture(args.fixture)))
        logger.info(f"Loaded fixture {args.fixture}")
    if getattr(args, "config", None):
        path = Path(args.config)
        values.update(config_from_document(FileUtils.read_json(path), path.parent))
        logger.info(f"Loaded config file {path}")

    for key in _DOCUMENT_KEYS:
        path = getattr(args, key, None)
        if path:
            values[key] = _load_document(str(path), None, key)

    overrides = {
        "command": getattr(args, "command", None),
        "seed": getattr(args, "seed", None),
        "format": getattr(args, "format", None),
        "out": Path(args.out) if getattr(args, "out", None) else None,
        "parallel": getattr(args, "parallel", None),
        "timing": True if getattr(args, "timing", False) else None,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})

    known = {f.name for f in fields(RunConfig)}
    config = RunConfig(**{k: v for k, v in values.items() if k in known})
    logger.debug(f"Run configuration: {config}")
    return config.validate()
