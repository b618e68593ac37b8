"""Dataset loading and text cleaning.

The input is a UTF-8, RFC 4180 CSV with a header row; the default columns are
``text`` (the essay) and ``generated`` (0 = human, 1 = AI). Parsing is done by
a small strict reader instead of the csv module so that quoting errors can be
reported with an exact byte offset.
"""

from __future__ import annotations

import math
import re
import unicodedata
from dataclasses import dataclass

from .errors import CsvError, RowError, SchemaError

HUMAN = 0
AI = 1

_WS_RUN = re.compile(r"\s+")


@dataclass(frozen=True)
class TextRecord:
    """One essay: 0-based row index, raw text, derived clean text, label."""

    id: int
    raw_text: str
    clean_text: str
    label: int


@dataclass(frozen=True)
class CorpusStats:
    n_total: int
    n_human: int
    n_ai: int
    # word-count quantiles of clean_text per label; None when the class is empty
    length_quantiles: dict


def clean_text(raw: str) -> str:
    """Normalize raw essay text.

    Fixed order: lowercase, drop decimal digits (category Nd), drop
    punctuation (categories P*), collapse each whitespace run to one space,
    trim. The order matters: whitespace collapse absorbs gaps left by the
    removals. Total function; the result may be empty.
    """
    out = []
    for ch in raw.lower():
        cat = unicodedata.category(ch)
        if cat == "Nd" or cat.startswith("P"):
            continue
        out.append(ch)
    return _WS_RUN.sub(" ", "".join(out)).strip()


def _parse_csv_bytes(data: bytes) -> list[list[str]]:
    """Strict RFC 4180 parser over raw bytes, tracking byte offsets.

    Accepts LF or CRLF row terminators. Raises CsvError on a quote appearing
    inside an unquoted field, text after a closing quote, or EOF inside a
    quoted field. Decodes each field as UTF-8.
    """
    rows: list[list[str]] = []
    field = bytearray()
    row: list[str] = []
    i = 0
    n = len(data)

    def close_field(start: int) -> None:
        try:
            row.append(field.decode("utf-8"))
        except UnicodeDecodeError as e:
            raise CsvError(start + e.start, "invalid UTF-8 in field") from None
        field.clear()

    while i < n:
        b = data[i]
        if b == 0x22:  # opening quote
            if field:
                raise CsvError(i, "quote inside unquoted field")
            start = i
            i += 1
            while True:
                if i >= n:
                    raise CsvError(start, "unterminated quoted field")
                b = data[i]
                if b == 0x22:
                    if i + 1 < n and data[i + 1] == 0x22:  # escaped quote
                        field.append(0x22)
                        i += 2
                        continue
                    i += 1
                    break
                field.append(b)
                i += 1
            if i < n and data[i] not in (0x2C, 0x0A, 0x0D):
                raise CsvError(i, "data after closing quote")
            close_field(start)
            if i >= n:
                rows.append(row)
                return rows
            b = data[i]
            if b == 0x2C:
                i += 1
                continue
            # row terminator
            if b == 0x0D:
                i += 1
                if i < n and data[i] == 0x0A:
                    i += 1
            else:
                i += 1
            rows.append(row)
            row = []
            continue
        if b == 0x2C:
            close_field(i)
            i += 1
            continue
        if b in (0x0A, 0x0D):
            close_field(i)
            rows.append(row)
            row = []
            if b == 0x0D and i + 1 < n and data[i + 1] == 0x0A:
                i += 1
            i += 1
            continue
        field.append(b)
        i += 1
    if field or row:
        close_field(n)
        rows.append(row)
    return rows


def load_dataset(
    path, text_column: str = "text", label_column: str = "generated"
) -> list[TextRecord]:
    """Read the labeled essay CSV into records, in file order.

    Record ids are 0-based data-row indices (the header is row -1, so to
    speak). Labels must be the strings "0" or "1"; text must be non-empty
    after whitespace trimming. clean_text is populated via clean_text().
    """
    with open(path, "rb") as f:
        data = f.read()
    rows = _parse_csv_bytes(data)
    if not rows:
        raise SchemaError("empty file: no header row")
    header = rows[0]
    for col in (text_column, label_column):
        if col not in header:
            raise SchemaError(f"missing column {col!r} (header: {header})")
    ti = header.index(text_column)
    li = header.index(label_column)
    records = []
    for rid, row in enumerate(rows[1:]):
        if len(row) != len(header):
            raise RowError(rid, f"expected {len(header)} fields, got {len(row)}")
        raw = row[ti]
        label_str = row[li].strip()
        if label_str not in ("0", "1"):
            raise RowError(rid, f"label {row[li]!r} outside {{0, 1}}")
        if not raw.strip():
            raise RowError(rid, "empty text field")
        records.append(
            TextRecord(id=rid, raw_text=raw, clean_text=clean_text(raw), label=int(label_str))
        )
    return records


def _nearest_rank(sorted_vals: list[int], p: float) -> int:
    # nearest-rank quantile: value at rank ceil(p * n), clamped into [1, n]
    n = len(sorted_vals)
    rank = min(n, max(1, math.ceil(p * n)))
    return sorted_vals[rank - 1]


def corpus_stats(records: list[TextRecord]) -> CorpusStats:
    """Counts plus p10/p50/p90 word-count quantiles of clean_text per label."""
    n_human = sum(1 for r in records if r.label == HUMAN)
    n_ai = len(records) - n_human
    quantiles = {}
    for name, label in (("human", HUMAN), ("ai", AI)):
        lengths = sorted(len(r.clean_text.split()) for r in records if r.label == label)
        if not lengths:
            quantiles[name] = None
            continue
        quantiles[name] = {
            "p10": _nearest_rank(lengths, 0.10),
            "p50": _nearest_rank(lengths, 0.50),
            "p90": _nearest_rank(lengths, 0.90),
        }
    return CorpusStats(
        n_total=len(records), n_human=n_human, n_ai=n_ai, length_quantiles=quantiles
    )
