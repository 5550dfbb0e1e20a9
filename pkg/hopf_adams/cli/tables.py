# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Text, JSON and CSV rendering of command results.

A result is a dict. Besides plain values it may carry ``matrices`` (title,
row and column labels, entries as exact rationals), ``tables`` (title,
header, rows), ``reports`` (``Report.as_dict`` trees) and ``lines``.
"""

from __future__ import annotations

import csv
import json
from collections.abc import Iterator
from typing import Any, TextIO

SECTIONS = ("matrices", "tables", "reports", "lines")


def _grid(rows: list[list[str]]) -> Iterator[str]:
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    for row in rows:
        yield "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()


def matrix_lines(matrix: dict[str, Any]) -> Iterator[str]:
    """Aligned rendering with row labels on the left."""
    yield matrix["title"]
    rows = [["", *matrix["columns"]]]
    rows.extend([label, *entries] for label, entries in zip(matrix["rows"], matrix["entries"]))
    yield from _grid(rows)


def table_lines(table: dict[str, Any]) -> Iterator[str]:
    """Aligned rendering of a table."""
    if table.get("title"):
        yield table["title"]
    rows = [[str(cell) for cell in table["header"]]]
    rows.extend([str(cell) for cell in row] for row in table["rows"])
    yield from _grid(rows)


def report_lines(report: dict[str, Any], depth: int = 0) -> Iterator[str]:
    """One line per report, failures with their witnesses."""
    indent = "  " * depth
    status = "PASS" if report["passed"] else "FAIL"
    yield f"{indent}{status} {report['name']} ({report['checked']} checked)"
    if "msg" in report:
        witness = " ".join(f"{key}={value}" for key, value in report.get("witness", {}).items())
        yield f"{indent}  {report['msg']}" + (f": {witness}" if witness else "")
    for key, value in report.get("data", {}).items():
        yield f"{indent}  {key}: {value}"
    for child in report.get("children", []):
        yield from report_lines(child, depth + 1)


def emit_text(result: dict[str, Any], stream: TextIO) -> None:
    """Human readable rendering; blocks are separated by blank lines."""
    blocks: list[list[str]] = []
    blocks.extend(list(matrix_lines(m)) for m in result.get("matrices", []))
    blocks.extend(list(table_lines(t)) for t in result.get("tables", []))
    blocks.extend(list(report_lines(r)) for r in result.get("reports", []))
    if result.get("lines"):
        blocks.append(list(result["lines"]))
    stream.write("\n\n".join("\n".join(block) for block in blocks))
    if blocks:
        stream.write("\n")


def emit_json(result: dict[str, Any], stream: TextIO) -> None:
    """Canonical JSON."""
    stream.write(json.dumps(result, sort_keys=True, indent=1))
    stream.write("\n")


def _report_rows(report: dict[str, Any], path: str = "") -> Iterator[list[str]]:
    name = f"{path}/{report['name']}" if path else report["name"]
    yield [name, "pass" if report["passed"] else "fail", str(report["checked"]), report.get("msg", "")]
    for child in report.get("children", []):
        yield from _report_rows(child, name)


def emit_csv(result: dict[str, Any], stream: TextIO) -> None:
    """One row per matrix entry, table row or report."""
    writer = csv.writer(stream, lineterminator="\n")
    if result.get("matrices"):
        writer.writerow(["matrix", "row", "column", "value"])
        for matrix in result["matrices"]:
            for label, entries in zip(matrix["rows"], matrix["entries"]):
                for column, value in zip(matrix["columns"], entries):
                    writer.writerow([matrix["title"], label, column, value])
    for table in result.get("tables", []):
        writer.writerow(table["header"])
        writer.writerows(table["rows"])
    if result.get("reports"):
        writer.writerow(["report", "status", "checked", "msg"])
        for report in result["reports"]:
            writer.writerows(_report_rows(report))
    for line in result.get("lines", []):
        writer.writerow([line])


EMITTERS = {"text": emit_text, "json": emit_json, "csv": emit_csv}


def emit(result: dict[str, Any], output_format: str, stream: TextIO) -> None:
    """Render a result in the requested format."""
    EMITTERS[output_format](result, stream)
