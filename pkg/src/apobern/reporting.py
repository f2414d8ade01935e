"""Serialization of identity reports.

The JSON layout is the stable machine interface:

    {"identity": str,
     "grid": [{"n": int, "k": int|null, "lambda": str|null, "y": str|null,
               "variant": str|null}],
     "results": [{"point": {...}, "verdict": "pass"|"fail",
                  "witness": str|null}],
     "summary": {"pass": int, "fail": int, "validity_domain": str}}

Expectation files reuse the layout minus the witness fields, so known
formula defects stay pinned without freezing their (larger) witness
strings.  All output is byte-deterministic for a fixed input.
"""

from __future__ import annotations

import json
from typing import Iterable, List, Optional, Sequence

from .field import render_rational
from .identities import GridPoint, IdentityReport
from .render import TEXT_SYMBOL

__all__ = [
    "report_to_dict",
    "reports_to_json",
    "expectation_from_reports",
    "expectation_mismatches",
    "render_report",
]

FORMATS = ("json", "text", "latex", "csv")


def _point_to_dict(point: GridPoint) -> dict:
    return {
        "n": point.n,
        "k": point.k,
        "lambda": None if point.mode is None else point.mode.label(),
        "y": None if point.y is None else render_rational(point.y),
    }


def report_to_dict(report: IdentityReport, include_witness: bool = True) -> dict:
    grid = [_point_to_dict(p) for p in report.grid]
    results = []
    for entry in report.results:
        point = _point_to_dict(entry.point)
        point["variant"] = entry.variant
        item = {
            "point": point,
            "verdict": "pass" if entry.passed else "fail",
        }
        if include_witness:
            item["witness"] = entry.witness
        results.append(item)
    return {
        "identity": report.identity.value,
        "grid": grid,
        "results": results,
        "summary": {
            "pass": report.summary.passed,
            "fail": report.summary.failed,
            "validity_domain": report.summary.validity_domain,
        },
    }


def reports_to_json(reports: Sequence[IdentityReport], include_witness: bool = True) -> str:
    payload = [report_to_dict(r, include_witness) for r in reports]
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def expectation_from_reports(reports: Sequence[IdentityReport]) -> str:
    """Expectation-file content: the full report minus witnesses."""
    return reports_to_json(reports, include_witness=False)


def expectation_mismatches(
    reports: Sequence[IdentityReport], expected_text: str
) -> List[str]:
    """Compare a run against an expectation file; [] means a clean match.

    Matching is per identity so a subset run can be checked against the
    full default expectation file.
    """
    expected = {item["identity"]: item for item in json.loads(expected_text)}
    mismatches = []
    for report in reports:
        name = report.identity.value
        if name not in expected:
            mismatches.append(f"{name}: no expectation recorded")
            continue
        actual = json.loads(
            json.dumps(report_to_dict(report, include_witness=False))
        )
        if actual != expected[name]:
            mismatches.append(f"{name}: verdict pattern differs from expectation")
    return mismatches


def _human(value: Optional[str], sym: str) -> str:
    if value is None:
        return "-"
    return value.replace("L", sym) if sym != "L" else value


def _text_lines(reports: Sequence[IdentityReport]) -> Iterable[str]:
    for report in reports:
        yield f"== {report.identity.value} =="
        for entry in report.results:
            point = entry.point
            fields = [f"n={point.n}"]
            if point.k is not None:
                fields.append(f"k={point.k}")
            if point.mode is not None:
                fields.append(f"{TEXT_SYMBOL}={point.mode.label()}")
            if point.y is not None:
                fields.append(f"y={render_rational(point.y)}")
            if entry.variant is not None:
                fields.append(f"[{entry.variant}]")
            verdict = "PASS" if entry.passed else "FAIL"
            line = f"  {' '.join(fields)}: {verdict}"
            if entry.witness is not None:
                line += f"  witness: {_human(entry.witness, TEXT_SYMBOL)}"
            yield line
        yield (
            f"  summary: pass={report.summary.passed} fail={report.summary.failed}"
            f"  domain: {report.summary.validity_domain}"
        )
        yield ""


def _latex_escape(text: str) -> str:
    return text.replace("\\", "\\textbackslash{}").replace("_", "\\_")


def _latex_lines(reports: Sequence[IdentityReport]) -> Iterable[str]:
    for report in reports:
        name = _latex_escape(report.identity.value)
        yield f"% {name}"
        yield "\\begin{tabular}{llllll}"
        yield "identity & n & k & $\\lambda$ & y & verdict \\\\"
        for entry in report.results:
            point = entry.point
            ident = name if entry.variant is None else f"{name}:{entry.variant}"
            cells = [
                ident,
                str(point.n),
                "-" if point.k is None else str(point.k),
                "-" if point.mode is None else point.mode.label().replace("symbolic", "$\\lambda$"),
                "-" if point.y is None else render_rational(point.y),
                "pass" if entry.passed else "fail",
            ]
            yield " & ".join(cells) + " \\\\"
        yield "\\end{tabular}"
        yield ""


def _csv_lines(reports: Sequence[IdentityReport]) -> Iterable[str]:
    yield "identity,n,k,lambda,y,verdict"
    for report in reports:
        for entry in report.results:
            point = entry.point
            ident = report.identity.value
            if entry.variant is not None:
                ident = f"{ident}:{entry.variant}"
            yield ",".join(
                [
                    ident,
                    str(point.n),
                    "" if point.k is None else str(point.k),
                    "" if point.mode is None else point.mode.label(),
                    "" if point.y is None else render_rational(point.y),
                    "pass" if entry.passed else "fail",
                ]
            )


def render_report(reports: Sequence[IdentityReport], fmt: str) -> str:
    """Render reports in one of json, text, latex, csv."""
    if fmt == "json":
        return reports_to_json(reports)
    if fmt == "text":
        return "\n".join(_text_lines(reports)) + "\n"
    if fmt == "latex":
        return "\n".join(_latex_lines(reports)) + "\n"
    if fmt == "csv":
        return "\n".join(_csv_lines(reports)) + "\n"
    raise ValueError(f"unknown format: {fmt!r}")
