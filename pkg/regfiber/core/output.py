#!/usr/bin/env python3
"""
Record stream writers: JSON Lines or CSV
"""

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, TextIO

from ..utils.file_utils import FileUtils

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv")


def _compact(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _flat(value: Any) -> str:
    if isinstance(value, str) or (isinstance(value, int) and not isinstance(value, bool)):
        return str(value)
    return _compact(value)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return ";".join(f"{k}={_flat(v)}" for k, v in sorted(value.items()))
    if isinstance(value, list):
        return _compact(value)
    return str(value)


def render_json_lines(records: Iterable[Dict[str, Any]]) -> str:
    return "".join(_compact(r) + "\n" for r in records)


def render_csv(records: Iterable[Dict[str, Any]]) -> str:
    """Header row of all keys (sorted), then one row per record"""
    rows = list(records)
    columns = sorted({k for r in rows for k in r})
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_cell(r.get(c)) for c in columns])
    return buffer.getvalue()


class RecordWriter:
    """
    Writes records to stdout or a file

    JSON Lines are written and flushed one record at a time. CSV is held until
    flush() since its header lists the keys of every record.
    """

    def __init__(self, fmt: str = "json", out: Optional[Path] = None):
        if fmt not in FORMATS:
            raise ValueError(f"Unknown output format: {fmt}")
        self.fmt = fmt
        self.out = out
        self.count = 0
        self._pending: List[Dict[str, Any]] = []
        self._stream: Optional[TextIO] = None

    def _target(self) -> TextIO:
        if self._stream is None:
            self._stream = FileUtils.open_text(self.out) if self.out is not None else sys.stdout
        return self._stream

    def add(self, record: Dict[str, Any]) -> None:
        self.count += 1
        if self.fmt == "csv":
            self._pending.append(record)
            return
        stream = self._target()
        stream.write(render_json_lines([record]))
        stream.flush()

    def extend(self, records: Iterable[Dict[str, Any]]) -> None:
        for record in records:
            self.add(record)

    def flush(self) -> None:
        """Write whatever is pending and close an output file"""
        stream = self._target()
        if self.fmt == "csv":
            stream.write(render_csv(self._pending))
            self._pending = []
        stream.flush()
        if self.out is not None:
            stream.close()
            self._stream = None
            logger.info(f"Wrote {self.count} records to {self.out}")
