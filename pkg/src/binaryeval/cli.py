"""Command-line entry point: ``evaluate`` and ``roc`` subcommands.

Results go to stdout, diagnostics to stderr. Exit status is 0 on
success, 1 on a validation or parse failure (strict mode) or degenerate
input, and 2 on a usage error. Identical argv and input bytes produce
identical output bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from typing import Mapping, Sequence, TextIO

from binaryeval.counts import apply_threshold, from_predictions
from binaryeval.ingest import InputConfig, InputMode, ParseError, ParseReport, parse_hard_labels, parse_scores
from binaryeval.metrics import all_metrics
from binaryeval.report import EvaluationReport, _format_meta_value, curve_payload, render_json, render_svg, render_text
from binaryeval.roc import RocCurve, roc_points


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="prediction file, or - for standard input")
    common.add_argument("--positive-label", default="1", metavar="TEXT",
                        help="label text mapped to the positive class (default: 1)")
    common.add_argument("--negative-label", default=None, metavar="TEXT",
                        help="if set, the only accepted negative label; otherwise one-vs-rest")
    common.add_argument("--delimiter", default=",", metavar="CHAR",
                        help="field separator (default: ,)")
    common.add_argument("--header", action="store_true",
                        help="skip one header line")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--zero-division", choices=("undefined", "zero"), default="undefined",
                        help="render undefined metrics as 'undefined' or as 0 (default: undefined)")
    common.add_argument("--strict", action="store_true",
                        help="abort on the first malformed row instead of skipping it")

    parser = argparse.ArgumentParser(
        prog="binaryeval",
        description="Evaluate binary classifier predictions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    evaluate = sub.add_parser("evaluate", parents=[common],
                              help="confusion matrix and all metrics at one decision rule")
    evaluate.add_argument("--mode", choices=("hard-labels", "scores"), default="hard-labels",
                          help="row layout: actual,predicted or actual,score (default: hard-labels)")
    evaluate.add_argument("--threshold", type=float, default=None, metavar="REAL",
                          help="decision threshold, required with --mode scores")
    roc = sub.add_parser("roc", parents=[common],
                         help="ROC curve and AUC from scored predictions")
    roc.add_argument("--mode", choices=("hard-labels", "scores"), default="scores",
                     help="must be scores for this subcommand")
    roc.add_argument("--svg", default=None, metavar="PATH",
                     help="also write an SVG plot of the curve")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot open input {path!r}: {exc.strerror or exc}") from None


def _input_config(args: argparse.Namespace, mode: InputMode) -> InputConfig:
    if len(args.delimiter) != 1 or args.delimiter in "\r\n":
        raise _UsageError(f"--delimiter must be a single character, got {args.delimiter!r}")
    if args.negative_label is not None and args.negative_label == args.positive_label:
        raise _UsageError("--negative-label must differ from --positive-label")
    return InputConfig(
        mode=mode,
        positive_label=args.positive_label,
        negative_label=args.negative_label,
        delimiter=args.delimiter,
        has_header=args.header,
    )


def _common_meta(args: argparse.Namespace, parse_report: ParseReport) -> dict[str, object]:
    return {
        "input": args.input,
        "mode": args.mode,
        "positive_label": args.positive_label,
        "negative_label": args.negative_label,
        "delimiter": args.delimiter,
        "header": args.header,
        "strict": args.strict,
        "records_read": parse_report.records_read,
        "records_accepted": parse_report.records_accepted,
    }


def _warn_failures(parse_report: ParseReport, err: TextIO) -> None:
    for line_number, reason in parse_report.failures:
        err.write(f"warning: line {line_number}: {reason}\n")


def _run_evaluate(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    mode = InputMode(args.mode)
    if mode is InputMode.SCORES and args.threshold is None:
        raise _UsageError("--threshold is required with --mode scores")
    if mode is InputMode.HARD_LABELS and args.threshold is not None:
        raise _UsageError("--threshold is only valid with --mode scores")
    if args.threshold is not None and math.isnan(args.threshold):
        raise _UsageError("--threshold must not be NaN")

    cfg = _input_config(args, mode)
    text = _read_input(args.input)
    if mode is InputMode.HARD_LABELS:
        pairs, parse_report = parse_hard_labels(text, cfg, strict=args.strict)
    else:
        samples, parse_report = parse_scores(text, cfg, strict=args.strict)
        pairs = apply_threshold(samples, args.threshold)
    _warn_failures(parse_report, err)

    counts = from_predictions(pairs)
    meta = _common_meta(args, parse_report)
    meta["threshold"] = args.threshold
    meta["zero_division"] = args.zero_division
    report = EvaluationReport(counts=counts, metrics=all_metrics(counts), meta=meta)
    if args.format == "json":
        out.write(render_json(report, zero_division=args.zero_division))
    else:
        out.write(render_text(report, zero_division=args.zero_division))
    return 0


def _roc_text(curve: RocCurve, meta: Mapping[str, object]) -> str:
    lines = [f"{key} {_format_meta_value(value)}" for key, value in meta.items()]
    lines.append("")
    lines.append("fpr tpr threshold")
    for p in curve.points:
        threshold = "inf" if math.isinf(p.threshold) else repr(p.threshold)
        lines.append(f"{p.fpr:.6f} {p.tpr:.6f} {threshold}")
    lines.append(f"AUC {curve.auc:.6f}")
    return "\n".join(lines) + "\n"


def _roc_json(curve: RocCurve, meta: Mapping[str, object]) -> str:
    return json.dumps({"roc": curve_payload(curve), "meta": dict(meta)},
                      indent=2, allow_nan=False) + "\n"


def _run_roc(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.mode != "scores":
        raise _UsageError("--mode must be 'scores' for the roc subcommand")
    cfg = _input_config(args, InputMode.SCORES)
    text = _read_input(args.input)
    samples, parse_report = parse_scores(text, cfg, strict=args.strict)
    _warn_failures(parse_report, err)

    try:
        curve = roc_points(samples)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 1

    meta = _common_meta(args, parse_report)
    if args.format == "json":
        out.write(_roc_json(curve, meta))
    else:
        out.write(_roc_text(curve, meta))
    if args.svg is not None:
        svg = render_svg(curve, title=f"ROC curve ({args.input})")
        try:
            Path(args.svg).write_text(svg, encoding="utf-8")
        except OSError as exc:
            err.write(f"error: cannot write --svg file {args.svg!r}: {exc.strerror or exc}\n")
            return 1
    return 0


def run(
    argv: Sequence[str] | None = None,
    *,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Parse ``argv`` and run one evaluation pipeline; returns the exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv if argv is None else list(argv))
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return 0 if exc.code is None else 2

    try:
        if args.subcommand == "evaluate":
            return _run_evaluate(args, out, err)
        return _run_roc(args, out, err)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
