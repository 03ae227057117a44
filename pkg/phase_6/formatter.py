"""
Phase 6: Report Formatter

Renders a RunReport for the terminal or for machines.

  - JSON: the report dict with `"format": 1`, keys sorted, two-space indent.
    The timing field appears only when asked for, so reruns are byte-identical.
  - Text: a header with the exit status and counts, then one table per command.
"""

from __future__ import annotations

import json
from typing import Callable, Dict, List, Sequence, Union

from phase_2.algebraic import RealAlgebraicNumber
from phase_6.runner import RunReport


def _sample_text(coordinate: Union[str, dict]) -> str:
    """Rationals verbatim; irrationals as a six-digit decimal approximation."""
    if isinstance(coordinate, str):
        return coordinate
    return f"~{float(RealAlgebraicNumber.from_dict(coordinate)):.6g}"


def _sign_text(sign: int) -> str:
    return {1: "+", 0: "0", -1: "-"}[sign]


def _tuple_text(values: Sequence) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _table(headers: List[str], rows: List[List[str]]) -> List[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells):
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    return [line(headers), line(["-" * w for w in widths])] + [line(row) for row in rows]


class ReportFormatter:
    """
    Turns reports into strings.

    Args:
        output:         "json" or "text".
        include_timing: Whether the elapsed time is part of the output.
    """

    def __init__(self, output: str = "text", include_timing: bool = False):
        if output not in ("json", "text"):
            raise ValueError(f"unknown output format {output!r}")
        self.output = output
        self.include_timing = include_timing

    # ── Public API ────────────────────────────────────────────────────────

    def format(self, report: RunReport) -> str:
        if self.output == "json":
            return self.to_json(report)
        return self.to_text(report)

    def to_json(self, report: RunReport) -> str:
        return json.dumps(report.to_dict(self.include_timing), sort_keys=True, indent=2) + "\n"

    def to_text(self, report: RunReport) -> str:
        lines = [f"command: {report.command}"]
        if not report.success:
            lines.append(f"error (exit {report.exit_code}): {report.error}")
            return "\n".join(lines) + "\n"
        if report.counts:
            lines.append("counts: " + ", ".join(f"{k}={v}" for k, v in sorted(report.counts.items())))
        if self.include_timing and report.timing is not None:
            lines.append(f"time: {report.timing:.3f}s")
        renderer = self._renderers().get(report.command)
        if renderer:
            lines.append("")
            lines.extend(renderer(report.payload))
        return "\n".join(lines) + "\n"

    # ── Internal helpers ──────────────────────────────────────────────────

    def _renderers(self) -> Dict[str, Callable[[dict], List[str]]]:
        return {
            "cad": self._cad,
            "project": self._project,
            "valuation": self._valuation,
            "eval": self._eval,
            "compare-projections": self._compare,
        }

    @staticmethod
    def _projection_rows(entries: List[dict]) -> List[List[str]]:
        rows = []
        for entry in entries:
            sources = "; ".join(
                f"{tag['kind']} {_tuple_text(tag['sources'])}" for tag in entry["provenance"]
            )
            rows.append([entry["polynomial"], sources])
        return rows

    def _cad(self, payload: dict) -> List[str]:
        lines = [f"variables: {', '.join(payload['variables'])}"]
        for level in payload["projections"]:
            lines.append("")
            lines.append(f"level {level['level']} polynomials ({', '.join(level['variables'])}):")
            lines.extend(_table(["polynomial", "provenance"], self._projection_rows(level["polynomials"])))
        lines.append("")
        if not payload["lifted"]:
            lines.append(f"projection stopped at level {payload['projected_to']}; no cells lifted")
            return lines
        lines.append(f"cells over level {payload['lifted']} (stack sizes {payload['stack_sizes']}):")
        rows = [
            [
                _tuple_text(cell["index"]),
                _tuple_text(_sample_text(c) for c in cell["sample"]),
                " ".join(_sign_text(s) for s in cell["signs"]),
                " ".join(_tuple_text(v) for v in cell["valuations"]),
            ]
            for cell in payload["cells"]
        ]
        lines.extend(_table(["index", "sample", "signs", "valuations"], rows))
        check = payload.get("delineability")
        if check:
            lines.append("")
            lines.append(f"delineability ({check['probes']} probes, seed {check['seed']}):")
            for item in check["checks"]:
                failures = ", ".join(_tuple_text(i) for i in item["failures"]) or "none"
                lines.append(f"  input {item['input']}: {item['cells_checked']} cells, failures: {failures}")
        return lines

    def _project(self, payload: dict) -> List[str]:
        lines = ["basis:"] + [f"  {b}" for b in payload["basis"]] + [""]
        lines.extend(_table(["polynomial", "provenance"], self._projection_rows(payload["projection"])))
        return lines

    def _valuation(self, payload: dict) -> List[str]:
        rows = [[r["polynomial"], _tuple_text(r["valuation"]), str(r["order"])] for r in payload["results"]]
        lines = [f"point: {_tuple_text(payload['point'])}"]
        lines.extend(_table(["polynomial", "valuation", "order"], rows))
        lines.append(f"evaluator: {_tuple_text(payload['evaluator'])}")
        return lines

    def _eval(self, payload: dict) -> List[str]:
        rows = [[r["polynomial"], _tuple_text(r["valuation"]), r["residual"]] for r in payload["results"]]
        return [f"point: {_tuple_text(payload['point'])}"] + _table(["polynomial", "valuation", "residual"], rows)

    def _compare(self, payload: dict) -> List[str]:
        lines = []
        for key in ("lazard", "mccallum", "brown_mccallum"):
            lines.append(f"{key} ({len(payload[key])}): " + ", ".join(payload[key]))
        lines.append(f"brown_mccallum subset of lazard: {payload['bm_in_lazard']}")
        lines.append(f"lazard subset of mccallum: {payload['lazard_in_mccallum']}")
        lines.append("only in lazard: " + (", ".join(payload["lazard_only"]) or "none"))
        lines.append("only in mccallum: " + (", ".join(payload["mccallum_only"]) or "none"))
        return lines
