"""Rendering of evaluation results as text, JSON, and an SVG ROC plot.

All renderers are pure: identical inputs produce byte-identical output.
Undefined metric values render as ``"undefined"`` (text) or ``null``
(JSON) by default; ``zero_division="zero"`` maps them to 0 at render time
only, the computed values are never touched.

JSON key order is part of the contract: ``counts``, ``metrics``,
``roc`` (when a curve is present), ``meta`` (when non-empty); metric keys
follow :meth:`binaryeval.metrics.MetricSet.as_dict`. The initial curve
point's infinite threshold is encoded as ``null`` (standard JSON has no
Infinity literal).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from binaryeval.counts import ConfusionCounts
from binaryeval.metrics import MetricSet
from binaryeval.roc import RocCurve, auc_trapezoid

_ZERO_DIVISION_MODES = ("undefined", "zero")

# SVG canvas geometry: fixed 640x480 with 50-unit margins.
_WIDTH = 640
_HEIGHT = 480
_MARGIN = 50


@dataclass(frozen=True, slots=True)
class EvaluationReport:
    """Everything one evaluation produced, ready to render.

    ``meta`` echoes the input name, record counts and configuration so the
    rendered output is self-describing.
    """

    counts: ConfusionCounts
    metrics: MetricSet
    curve: RocCurve | None = None
    auc: float | None = None
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if (self.curve is None) != (self.auc is None):
            raise ValueError("auc must be present exactly when curve is")
        if self.curve is not None and self.auc != auc_trapezoid(self.curve):
            raise ValueError("auc must equal the trapezoidal area of the curve")


def _check_zero_division(zero_division: str) -> None:
    if zero_division not in _ZERO_DIVISION_MODES:
        raise ValueError(f"zero_division must be one of {_ZERO_DIVISION_MODES}, got {zero_division!r}")


def _format_metric(value: float | None, zero_division: str) -> str:
    if value is None:
        return "0.000000" if zero_division == "zero" else "undefined"
    return f"{value:.6f}"


def _format_meta_value(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _matrix_lines(c: ConfusionCounts) -> list[str]:
    width = max(1, *(len(str(v)) for v in (c.tp, c.fp, c.fn, c.tn)))
    return [
        "confusion matrix (rows actual, columns predicted)",
        f"   {'P':>{width}}  {'N':>{width}}",
        f"P  {c.tp:>{width}}  {c.fn:>{width}}",
        f"N  {c.fp:>{width}}  {c.tn:>{width}}",
    ]


def render_text(report: EvaluationReport, *, zero_division: str = "undefined") -> str:
    """Fixed-order plain-text report: meta echo, matrix, one line per metric."""
    _check_zero_division(zero_division)
    lines: list[str] = []
    if report.meta:
        lines.extend(f"{key} {_format_meta_value(value)}" for key, value in report.meta.items())
        lines.append("")
    lines.extend(_matrix_lines(report.counts))
    lines.append("")
    lines.extend(
        f"{name.upper()} {_format_metric(value, zero_division)}"
        for name, value in report.metrics.as_dict().items()
    )
    if report.curve is not None:
        lines.append("")
        lines.append(f"AUC {report.auc:.6f}")
    return "\n".join(lines) + "\n"


def _json_safe(value: object) -> object:
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def curve_payload(curve: RocCurve) -> dict[str, object]:
    """JSON-ready view of a curve; the initial +inf threshold becomes null."""
    return {
        "points": [
            {
                "fpr": p.fpr,
                "tpr": p.tpr,
                "threshold": None if math.isinf(p.threshold) else p.threshold,
            }
            for p in curve.points
        ],
        "auc": curve.auc,
    }


def render_json(report: EvaluationReport, *, zero_division: str = "undefined") -> str:
    """Machine-readable report; floats use shortest round-trip formatting."""
    _check_zero_division(zero_division)
    metrics: dict[str, object] = {}
    for name, value in report.metrics.as_dict().items():
        if value is None and zero_division == "zero":
            value = 0.0
        metrics[name] = value
    payload: dict[str, object] = {
        "counts": {
            "tp": report.counts.tp,
            "fp": report.counts.fp,
            "fn": report.counts.fn,
            "tn": report.counts.tn,
        },
        "metrics": metrics,
    }
    if report.curve is not None:
        payload["roc"] = curve_payload(report.curve)
    if report.meta:
        payload["meta"] = {key: _json_safe(value) for key, value in report.meta.items()}
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def render_svg(curve: RocCurve, title: str) -> str:
    """Standalone 640x480 SVG of the curve with the chance diagonal.

    Data (0, 0) maps to the plot's bottom-left corner and (1, 1) to its
    top-right; the dashed diagonal marks random guessing and the legend
    carries the area to three decimals. Uses only rect, line, polyline and
    text elements.
    """
    left = _MARGIN
    top = _MARGIN
    right = _WIDTH - _MARGIN
    bottom = _HEIGHT - _MARGIN

    def x_px(fpr: float) -> float:
        return left + fpr * (right - left)

    def y_px(tpr: float) -> float:
        return bottom - tpr * (bottom - top)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="#ffffff"/>',
        f'<rect x="{left}" y="{top}" width="{right - left}" height="{bottom - top}" '
        'fill="none" stroke="#000000" stroke-width="1"/>',
        f'<text x="{_WIDTH / 2:.2f}" y="30.00" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{_escape(title)}</text>',
    ]

    for i in range(6):
        value = i / 5
        x = x_px(value)
        y = y_px(value)
        lines.append(
            f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 5}" '
            'stroke="#000000" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{x:.2f}" y="{bottom + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{value:.1f}</text>'
        )
        lines.append(
            f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" '
            'stroke="#000000" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{value:.1f}</text>'
        )

    lines.append(
        f'<line x1="{x_px(0.0):.2f}" y1="{y_px(0.0):.2f}" x2="{x_px(1.0):.2f}" y2="{y_px(1.0):.2f}" '
        'stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    polyline = " ".join(f"{x_px(p.fpr):.2f},{y_px(p.tpr):.2f}" for p in curve.points)
    lines.append(
        f'<polyline points="{polyline}" fill="none" stroke="#1f77b4" stroke-width="2"/>'
    )
    lines.append(
        f'<text x="{(left + right) / 2:.2f}" y="{bottom + 40}" text-anchor="middle" '
        'font-family="sans-serif" font-size="13">False Positive Rate</text>'
    )
    lines.append(
        f'<text x="18.00" y="{(top + bottom) / 2:.2f}" text-anchor="middle" '
        'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {(top + bottom) / 2:.2f})">True Positive Rate</text>'
    )
    lines.append(
        f'<text x="{right - 10}" y="{bottom - 10}" text-anchor="end" '
        f'font-family="sans-serif" font-size="13">AUC = {curve.auc:.3f}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
