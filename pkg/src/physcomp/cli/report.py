"""Deterministic report rendering: human tables, canonical JSON, CSV.

Machine output is byte-stable: keys are sorted, floats are written with 17
significant digits (which round-trips a double exactly), and re-rendering
a parsed report reproduces the bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

FORMATS = ("human", "json", "csv")


@dataclass
class Report:
    subcommand: str
    version: str
    inputs: dict = field(default_factory=dict)
    results: list = field(default_factory=list)  # (name, value, unit, formula)
    warnings: list = field(default_factory=list)

    def add(self, name: str, value, unit: str, formula: str) -> None:
        self.results.append((name, value, unit, formula))

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def to_dict(self) -> dict:
        return {
            "tool": "physcomp",
            "version": self.version,
            "subcommand": self.subcommand,
            "inputs": dict(self.inputs),
            "results": [
                {"name": n, "value": v, "unit": u, "formula": f}
                for n, v, u, f in self.results
            ],
            "warnings": list(self.warnings),
        }


def format_number(x) -> str:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return f"{x:.17g}"


def _json_scalar(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return json.dumps(x, ensure_ascii=False)


def _json_canonical(obj) -> str:
    if isinstance(obj, dict):
        items = ", ".join(
            f"{json.dumps(str(k), ensure_ascii=False)}: {_json_canonical(v)}"
            for k, v in sorted(obj.items())
        )
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_canonical(v) for v in obj) + "]"
    return _json_scalar(obj)


def render_json(report_dict: dict) -> str:
    """Canonical JSON: sorted keys, 17-significant-digit floats."""
    return _json_canonical(report_dict) + "\n"


def render_csv(report_dict: dict) -> str:
    lines = ["name,value,unit,formula"]
    for row in report_dict["results"]:
        lines.append(
            f"{row['name']},{format_number(row['value'])},"
            f"{row['unit']},{row['formula']}"
        )
    return "\n".join(lines) + "\n"


def render_human(report_dict: dict) -> str:
    rows = [
        (row["name"], format_number(row["value"]), row["unit"], row["formula"])
        for row in report_dict["results"]
    ]
    header = ("result", "value", "unit", "formula")
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
        for c in range(4)
    ]
    out = [f"{report_dict['tool']} {report_dict['version']} {report_dict['subcommand']}"]
    if report_dict["inputs"]:
        joined = ", ".join(f"{k}={v}" for k, v in sorted(report_dict["inputs"].items()))
        out.append(f"inputs: {joined}")
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in rows:
        out.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    for w in report_dict["warnings"]:
        out.append(f"warning: {w}")
    return "\n".join(out) + "\n"


def render(report: Report, fmt: str) -> str:
    d = report.to_dict()
    if fmt == "json":
        return render_json(d)
    if fmt == "csv":
        return render_csv(d)
    return render_human(d)
