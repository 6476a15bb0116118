"""Machine-readable row formats.

Every count and rational is written as a decimal string so values survive a
round trip unchanged. Non-finite ratios are encoded as ``1/0`` (infinity) and
``0/0`` (undefined).
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, TextIO

from .approximation import INFINITY, UNDEFINED, ApproximantRow


def csv_header(m: int) -> list[str]:
    k = m - 1
    header = ["iter"] + [f"n{j}" for j in range(m)]
    for j in range(k):
        header += [f"r{j}_num", f"r{j}_den"]
    header += [f"r{j}_decimal" for j in range(k)]
    header += [f"abs_err{j}" for j in range(k)]
    header.append("stop")
    return header


def _ratio_parts(r) -> tuple[str, str]:
    if r is INFINITY:
        return "1", "0"
    if r is UNDEFINED:
        return "0", "0"
    return str(r.numerator), str(r.denominator)


def _parse_ratio(num: str, den: str):
    n, d = int(num), int(den)
    if d == 0:
        return INFINITY if n else UNDEFINED
    return Fraction(n, d)


def row_to_record(row: ApproximantRow) -> dict[str, str]:
    m = len(row.counts)
    values = [str(row.iter)] + [str(c) for c in row.counts]
    for r in row.ratios:
        values += _ratio_parts(r)
    values += list(row.decimals)
    values += ["" if e is None else str(e) for e in row.abs_errors]
    values.append(row.stop_reason or "")
    return dict(zip(csv_header(m), values))


def record_to_row(rec: dict[str, str]) -> ApproximantRow:
    m = sum(1 for key in rec if key[:1] == "n" and key[1:].isdigit())
    k = m - 1
    return ApproximantRow(
        iter=int(rec["iter"]),
        counts=tuple(int(rec[f"n{j}"]) for j in range(m)),
        ratios=tuple(_parse_ratio(rec[f"r{j}_num"], rec[f"r{j}_den"]) for j in range(k)),
        decimals=tuple(rec[f"r{j}_decimal"] for j in range(k)),
        abs_errors=tuple(Fraction(rec[f"abs_err{j}"]) if rec[f"abs_err{j}"] else None for j in range(k)),
        stop_reason=rec.get("stop") or None,
    )


def write_csv(rows: Iterable[ApproximantRow], m: int, out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=csv_header(m), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row_to_record(row))


def write_jsonl(rows: Iterable[ApproximantRow], out: TextIO) -> None:
    for row in rows:
        out.write(json.dumps(row_to_record(row)) + "\n")


def read_csv(text: str) -> list[ApproximantRow]:
    """Parse CSV written by :func:`write_csv`; ``#`` footer lines are skipped."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return [record_to_row(rec) for rec in csv.DictReader(io.StringIO("\n".join(lines)))]


def read_jsonl(text: str) -> list[ApproximantRow]:
    """Parse JSONL written by :func:`write_jsonl`; objects without ``iter`` are skipped."""
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if "iter" in rec:
            rows.append(record_to_row(rec))
    return rows
