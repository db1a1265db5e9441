"""Transcript file formats.

Two formats are supported, both keyed by session:

* SegLST: a JSON array of records with ``session_id``, ``speaker``,
  ``words`` and optional ``start_time`` / ``end_time`` in seconds.
  Unknown keys are preserved on round-trip.
* STM: the line-oriented format ``filename channel speaker begin end
  transcript``; lines starting with ``;;`` are comments. The filename
  becomes the session id.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .errors import (
    BadFieldCount,
    MalformedDocument,
    MissingRequiredKey,
    NonNumericTime,
)
from .seglst import Segment, SegLst, validate

_REQUIRED_KEYS = ("session_id", "speaker", "words")
_TIME_KEYS = ("start_time", "end_time")


def _check_number(value: Any, key: str, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise NonNumericTime(f"{where}: {key} must be a number, got {value!r}")
    return value


def parse_seglst(data: bytes | str) -> dict[str, SegLst]:
    """Parse a SegLST JSON document into one SegLst per session."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        records = json.loads(data)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"invalid JSON: {e}") from e
    if not isinstance(records, list):
        raise MalformedDocument(
            f"expected an array of records, got {type(records).__name__}"
        )

    by_session: dict[str, list[Segment]] = {}
    for i, record in enumerate(records):
        where = f"record {i}"
        if not isinstance(record, dict):
            raise MalformedDocument(f"{where}: expected an object, got {type(record).__name__}")
        for key in _REQUIRED_KEYS:
            if key not in record:
                raise MissingRequiredKey(f"{where}: missing required key {key!r}")
            if not isinstance(record[key], str):
                raise MalformedDocument(
                    f"{where}: {key} must be a string, got {record[key]!r}"
                )
        times = {}
        for key in _TIME_KEYS:
            if record.get(key) is not None:
                times[key] = _check_number(record[key], key, where)
        extra = {
            k: v for k, v in record.items() if k not in _REQUIRED_KEYS + _TIME_KEYS
        }
        segment = Segment(
            session_id=record["session_id"],
            label=record["speaker"],
            words=record["words"],
            begin_time=times.get("start_time"),
            end_time=times.get("end_time"),
            extra=extra,
        )
        by_session.setdefault(segment.session_id, []).append(segment)
    return {sid: validate(segments) for sid, segments in sorted(by_session.items())}


def serialize_seglst(sessions: Mapping[str, SegLst]) -> str:
    records = []
    for sid in sorted(sessions):
        for s in sessions[sid]:
            record: dict[str, Any] = {
                "session_id": s.session_id,
                "speaker": s.label,
                "words": s.words,
            }
            if s.begin_time is not None:
                record["start_time"] = s.begin_time
            if s.end_time is not None:
                record["end_time"] = s.end_time
            record.update(s.extra)
            records.append(record)
    return json.dumps(records, indent=2) + "\n"


def parse_stm(text: bytes | str) -> dict[str, SegLst]:
    """Parse an STM document into one SegLst per session (filename)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    by_session: dict[str, list[Segment]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(";;"):
            continue
        fields = line.split(maxsplit=5)
        if len(fields) < 5:
            raise BadFieldCount(
                f"line {lineno}: expected 'filename channel speaker begin end "
                f"transcript', got {len(fields)} fields"
            )
        filename, channel, speaker, begin, end = fields[:5]
        words = fields[5] if len(fields) == 6 else ""
        try:
            begin_time = float(begin)
            end_time = float(end)
        except ValueError as e:
            raise NonNumericTime(f"line {lineno}: non-numeric time: {e}") from e
        segment = Segment(
            session_id=filename,
            label=speaker,
            words=words,
            begin_time=begin_time,
            end_time=end_time,
            extra={"channel": channel},
        )
        by_session.setdefault(filename, []).append(segment)
    return {sid: validate(segments) for sid, segments in sorted(by_session.items())}


def serialize_stm(sessions: Mapping[str, SegLst]) -> str:
    lines = []
    for sid in sorted(sessions):
        for s in sessions[sid]:
            channel = s.extra.get("channel", "1")
            lines.append(
                f"{s.session_id} {channel} {s.label} {s.begin_time} {s.end_time}"
                f" {s.words}".rstrip()
            )
    return "\n".join(lines) + "\n"


FORMATS = ("json", "stm")


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".stm":
        return "stm"
    if suffix in (".json", ".seglst"):
        return "json"
    raise ValueError(
        f"cannot infer transcript format from {path!r}; pass an explicit format"
    )


def load_transcript(path: str | Path, fmt: str | None = None) -> dict[str, SegLst]:
    """Read a transcript file, inferring the format from the extension."""
    fmt = fmt or detect_format(path)
    data = Path(path).read_bytes()
    try:
        if fmt == "stm":
            return parse_stm(data)
        if fmt == "json":
            return parse_seglst(data)
    except MalformedDocument as e:
        raise type(e)(f"{path}: {e}") from e
    raise ValueError(f"unknown transcript format {fmt!r}")
