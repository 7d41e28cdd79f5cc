"""Bit-stable JSON, CSV, and text emitters.

Identical records produce identical bytes: object keys are sorted,
floats are printed with 17 significant digits, rationals as exact "a/b"
strings, and integers that do not fit in a signed 64-bit word as decimal
strings. Sets are emitted as sorted lists. No locale is consulted.
"""

from __future__ import annotations

import dataclasses
import json
import math
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Sequence

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot emit non-finite float {x!r}")
    return format(x, ".17g")


def to_jsonable(obj: Any) -> Any:
    """Normalize a record into plain JSON-compatible values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj if _INT64_MIN <= obj <= _INT64_MAX else str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Enum):
        return to_jsonable(obj.value)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if hasattr(obj, "_asdict"):  # NamedTuple
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write(value: Any, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, list):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append(pad + "  ")
            _write(item, out, indent + 1)
            out.append(",\n" if i + 1 < len(value) else "\n")
        out.append(pad + "]")
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        keys = sorted(value)
        for i, key in enumerate(keys):
            out.append(pad + "  " + json.dumps(str(key), ensure_ascii=True) + ": ")
            _write(value[key], out, indent + 1)
            out.append(",\n" if i + 1 < len(keys) else "\n")
        out.append(pad + "}")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_json(record: Any) -> str:
    """Canonical JSON text for a record, with a trailing newline."""
    out: list[str] = []
    _write(to_jsonable(record), out, 0)
    out.append("\n")
    return "".join(out)


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, str):
        if any(ch in value for ch in ",\"\n"):
            return '"' + value.replace('"', '""') + '"'
        return value
    raise TypeError(f"cannot emit {type(value).__name__} in CSV")


def emit_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Deterministic CSV: '.' decimal separator, LF line endings."""
    lines = [",".join(header)]
    lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"
