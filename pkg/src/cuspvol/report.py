"""Flat key-value report files.

A report is an ordered mapping from dotted keys to scalars.  Each line is
"key = value" with the value JSON-encoded, so floats round-trip exactly
(shortest repr) and parse(emit(report)) == report holds bit for bit.
Nested structures are flattened with dotted keys before emission.
"""

import json
import re

__all__ = ["emit_report", "flatten", "parse_report"]

_KEY_PATTERN = re.compile(r"^[A-Za-z0-9_.\-]+$")


def flatten(value, prefix="", out=None):
    """Flatten nested dicts/lists/tuples into a dotted-key scalar mapping."""
    if out is None:
        out = {}
    if isinstance(value, dict):
        for key, item in value.items():
            flatten(item, f"{prefix}.{key}" if prefix else str(key), out)
    elif isinstance(value, (list, tuple)):
        for index, item in enumerate(value):
            flatten(item, f"{prefix}.{index}" if prefix else str(index), out)
    else:
        if not prefix:
            raise ValueError("cannot flatten a bare scalar without a key")
        out[prefix] = value
    return out


def emit_report(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if not _KEY_PATTERN.match(key):
            raise ValueError(f"invalid report key {key!r}")
        if not isinstance(value, (str, int, float, bool)) and value is not None:
            raise ValueError(f"report value for {key!r} is not a scalar: {type(value).__name__}")
        lines.append(f"{key} = {json.dumps(value)}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> dict:
    report = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, sep, encoded = line.partition(" = ")
        if not sep:
            raise ValueError(f"line {lineno} is not 'key = value': {raw!r}")
        if not _KEY_PATTERN.match(key):
            raise ValueError(f"invalid report key {key!r} on line {lineno}")
        report[key] = json.loads(encoded)
    return report
