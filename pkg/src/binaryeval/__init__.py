"""Binary classifier evaluation: exact tallies, metrics, ROC/AUC, reports."""

from binaryeval.counts import (
    ConfusionCounts,
    Label,
    LabeledPrediction,
    ScoredSample,
    apply_threshold,
    binarize,
    empty,
    from_predictions,
    merge,
    record,
)
from binaryeval.ingest import (
    InputConfig,
    InputMode,
    ParseError,
    ParseReport,
    parse_hard_labels,
    parse_scores,
)
from binaryeval.metrics import (
    MetricSet,
    MetricValue,
    accuracy,
    all_metrics,
    error_rate,
    f1_score,
    false_positive_rate,
    matthews_corrcoef,
    precision,
    recall,
    sensitivity,
    specificity,
    true_negative_rate,
    true_positive_rate,
)
from binaryeval.report import EvaluationReport, render_json, render_svg, render_text
from binaryeval.roc import (
    DiagonalPosition,
    RocCurve,
    RocPoint,
    auc_pair_count,
    auc_trapezoid,
    diagonal_position,
    roc_points,
)

__version__ = "0.1.0"

__all__ = [
    "ConfusionCounts",
    "DiagonalPosition",
    "EvaluationReport",
    "InputConfig",
    "InputMode",
    "Label",
    "LabeledPrediction",
    "MetricSet",
    "MetricValue",
    "ParseError",
    "ParseReport",
    "RocCurve",
    "RocPoint",
    "ScoredSample",
    "accuracy",
    "all_metrics",
    "apply_threshold",
    "auc_pair_count",
    "auc_trapezoid",
    "binarize",
    "diagonal_position",
    "empty",
    "error_rate",
    "f1_score",
    "false_positive_rate",
    "from_predictions",
    "matthews_corrcoef",
    "merge",
    "parse_hard_labels",
    "parse_scores",
    "precision",
    "recall",
    "record",
    "render_json",
    "render_svg",
    "render_text",
    "roc_points",
    "sensitivity",
    "specificity",
    "true_negative_rate",
    "true_positive_rate",
]
