"""Serialization of result records to CSV and JSON lines."""

import csv
import io
from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel

from weightdirac.core.errors import ConfigError

FORMATS = ("jsonl", "csv")


def csv_header(record_type: type[BaseModel], rank: int) -> list[str]:
    """Weight coordinates w1..wr first, then the remaining fields in declaration order."""
    header: list[str] = []
    for name in record_type.model_fields:
        if name == "weight":
            header.extend(f"w{i}" for i in range(1, rank + 1))
        else:
            header.append(name)
    return header


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ";".join(str(v) for v in value)
    return str(value)


def _csv_row(record: BaseModel) -> list[str]:
    row: list[str] = []
    for name, value in record.model_dump(mode="json").items():
        if name == "weight":
            row.extend(value)
        else:
            row.append(_csv_cell(value))
    return row


def emit_report(
    records: Sequence[BaseModel], output_format: str, record_type: type[BaseModel], rank: int
) -> bytes:
    """Render records deterministically.

    Args:
        records: Records of a single type
        output_format: ``jsonl`` (one compact object per line) or ``csv`` (header first)
        record_type: Record model, fixes the CSV header when there are no records
        rank: Number of weight coordinates

    Raises:
        ConfigError: If the format is unknown

    Example:
        >>> from weightdirac.schemas.records import DiracRecord
        >>> emit_report([DiracRecord(weight=["-1"], dim_plus=1, dim_minus=0)], "jsonl", DiracRecord, 1)
        b'{"weight":["-1"],"dim_plus":1,"dim_minus":0}\\n'
    """
    if output_format == "jsonl":
        return "".join(record.model_dump_json() + "\n" for record in records).encode()
    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(csv_header(record_type, rank))
        for record in records:
            writer.writerow(_csv_row(record))
        return buffer.getvalue().encode()
    raise ConfigError(f"unknown output format {output_format!r}; expected one of {', '.join(FORMATS)}")
