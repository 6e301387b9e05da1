"""
Tests for record writers and the shared error handling helpers
"""

import logging

import pytest

from regfiber.core.output import RecordWriter, render_csv, render_json_lines
from regfiber.errors import FiberRetractViolation, NotAdjacent, SchemaError
from regfiber.utils import ErrorHandler, FileUtils
from regfiber.utils.error_handler import EXIT_INPUT_ERROR, EXIT_INVARIANT_VIOLATION

RECORDS = [
    {"kind": "a", "ok": True, "table": {"P2": 1, "P1": 0}, "nu": [1, -1]},
    {"kind": "b", "extra": None},
]


def test_json_lines_are_compact_and_sorted():
    text = render_json_lines(RECORDS)
    assert text.splitlines()[0] == '{"kind":"a","nu":[1,-1],"ok":true,"table":{"P1":0,"P2":1}}'
    assert text.endswith("\n")


def test_csv_flattens_cells():
    lines = render_csv(RECORDS).splitlines()
    assert lines[0] == "extra,kind,nu,ok,table"
    assert lines[1] == ',a,"[1,-1]",true,P1=0;P2=1'
    assert lines[2] == ",b,,,"


def test_writer_to_file(tmp_path, capsys):
    out = tmp_path / "nested" / "out.csv"
    writer = RecordWriter("csv", out)
    writer.extend(RECORDS)
    writer.flush()
    assert out.read_text(encoding="utf-8") == render_csv(RECORDS)
    assert capsys.readouterr().out == ""


def test_writer_to_stdout(capsys):
    writer = RecordWriter()
    writer.add(RECORDS[1])
    writer.flush()
    assert capsys.readouterr().out == '{"extra":null,"kind":"b"}\n'


def test_json_writer_streams_each_record(tmp_path):
    out = tmp_path / "stream.jsonl"
    writer = RecordWriter("json", out)
    writer.add(RECORDS[0])
    assert out.read_text(encoding="utf-8") == render_json_lines(RECORDS[:1])
    writer.add(RECORDS[1])
    writer.flush()
    assert out.read_text(encoding="utf-8") == render_json_lines(RECORDS)
    assert writer.count == 2


def test_csv_writer_holds_rows_until_flush(capsys):
    writer = RecordWriter("csv")
    writer.extend(RECORDS)
    assert capsys.readouterr().out == ""
    writer.flush()
    assert capsys.readouterr().out == render_csv(RECORDS)


def test_writer_rejects_unknown_format():
    with pytest.raises(ValueError):
        RecordWriter("xml")


def test_exit_codes():
    handler = ErrorHandler()
    assert handler.exit_code_for(NotAdjacent("x")) == EXIT_INPUT_ERROR
    assert handler.exit_code_for(FiberRetractViolation("x")) == EXIT_INVARIANT_VIOLATION
    assert handler.exit_code_for(RuntimeError("x")) == EXIT_INPUT_ERROR


def test_safe_execute(caplog):
    handler = ErrorHandler(logging.getLogger("test"))

    def fails():
        raise ImportError("no sympy")

    def violates():
        raise FiberRetractViolation("left the fiber")

    with caplog.at_level(logging.WARNING):
        assert handler.safe_execute(fails, "fallback", "Oracle unavailable") == "fallback"
    assert "Oracle unavailable: no sympy" in caplog.text
    with pytest.raises(FiberRetractViolation):
        handler.safe_execute(violates)
    assert handler.safe_execute(lambda a, b: a + b, None, "sum", 2, 3) == 5


def test_read_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2", encoding="utf-8")
    with pytest.raises(SchemaError, match="line 1"):
        FileUtils.read_json(bad)
