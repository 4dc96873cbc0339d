"""Deterministic renderers: canonical JSON, CSV, and LaTeX tables.

Reports must be byte-identical across runs for identical inputs: keys are
sorted, rationals are canonical "p/q" strings, and nothing time- or
path-dependent is ever embedded.
"""

from __future__ import annotations

import csv
import io
import json

JSON = "json"
CSV = "csv"
LATEX = "latex"
FORMATS = (JSON, CSV, LATEX)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def dump_csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def dump_latex_table(headers, rows, align: str | None = None) -> str:
    """A tabular in the usual recurrence-table layout: header row, rule, body."""
    if align is None:
        align = "r|" + "r" * (len(headers) - 1)
    lines = [f"\\begin{{tabular}}{{{align}}}"]
    lines.append(" & ".join(headers) + r" \\")
    lines.append("\\hline")
    for row in rows:
        lines.append(" & ".join(str(c) for c in row) + r" \\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"
