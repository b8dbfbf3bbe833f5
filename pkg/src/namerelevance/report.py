"""Aggregate score distributions, mode comparisons, validation against
manual labels, and their text/json/csv renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .corpus import CorpusStats, LabeledRecord
from .scorer import ScoreResult

BUCKET_NAMES = ("0-24", "25-49", "50-74", "75-100")

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class Distribution:
    """Bucketed histogram of 0-100 scores.

    ``bottom_half_share`` is the fraction of scores below 50 (the two lowest
    buckets together).
    """

    total: int
    zero_count: int
    hundred_count: int
    bucket_counts: tuple[int, int, int, int]
    bottom_half_share: float


@dataclass(frozen=True)
class ModeComparison:
    """Per-mode distributions over one corpus, plus the per-record score
    movement from the first mode to the last."""

    modes: tuple[str, ...]
    distributions: Mapping[str, Distribution]
    deltas: tuple[int, ...]


@dataclass(frozen=True)
class ValidationOutcome:
    """Agreement of predicted labels with manual ones.

    Per record: 1 for a primary-label match, 0.5 for a secondary match,
    otherwise 0.
    """

    per_record: tuple[tuple[str, int, float], ...]
    mean_agreement: float


def score_to_label(score: int) -> int:
    """Bucket a 0-100 score into the four review labels.

    Buckets are lower-inclusive: [0,25) -> 0, [25,50) -> 1, [50,75) -> 2,
    and [75,100] -> 3.
    """
    if not 0 <= score <= 100:
        raise ValueError(f"score out of range 0..100: {score}")
    if score < 25:
        return 0
    if score < 50:
        return 1
    if score < 75:
        return 2
    return 3


def distribution(scores: Iterable[int]) -> Distribution:
    """Count scores into the four label buckets plus the 0 and 100 extremes."""
    buckets = [0, 0, 0, 0]
    zero = hundred = total = 0
    for score in scores:
        buckets[score_to_label(score)] += 1
        total += 1
        if score == 0:
            zero += 1
        elif score == 100:
            hundred += 1
    share = (buckets[0] + buckets[1]) / total if total else 0.0
    return Distribution(
        total=total,
        zero_count=zero,
        hundred_count=hundred,
        bucket_counts=tuple(buckets),
        bottom_half_share=share,
    )


def compare_modes(per_mode_scores: Mapping[str, Sequence[int]]) -> ModeComparison:
    """Distributions per mode plus per-record deltas (last mode minus the
    first). All score lists must cover the same records in the same order."""
    modes = tuple(per_mode_scores)
    lengths = {mode: len(scores) for mode, scores in per_mode_scores.items()}
    if len(set(lengths.values())) > 1:
        raise ValueError(f"score lists must have equal length, got {lengths}")
    distributions = {mode: distribution(scores) for mode, scores in per_mode_scores.items()}
    if modes:
        first = per_mode_scores[modes[0]]
        last = per_mode_scores[modes[-1]]
        deltas = tuple(b - a for a, b in zip(first, last))
    else:
        deltas = ()
    return ModeComparison(modes=modes, distributions=distributions, deltas=deltas)


def validate(results: Sequence[ScoreResult], labels: Sequence[LabeledRecord]) -> ValidationOutcome:
    """Score predicted labels against manual ones.

    Every label must resolve to exactly one result by name; results without
    labels are ignored. An empty label set yields a mean of 0.0.
    """
    by_name: dict[str, ScoreResult] = {}
    ambiguous: set[str] = set()
    for result in results:
        if result.name in by_name:
            ambiguous.add(result.name)
        by_name[result.name] = result
    per_record: list[tuple[str, int, float]] = []
    for label in labels:
        if label.name in ambiguous:
            raise ValueError(f"label {label.name!r} matches more than one scored record")
        result = by_name.get(label.name)
        if result is None:
            raise ValueError(f"label {label.name!r} matches no scored record")
        predicted = score_to_label(result.score)
        if predicted == label.primary_label:
            agreement = 1.0
        elif predicted == label.secondary_label:
            agreement = 0.5
        else:
            agreement = 0.0
        per_record.append((label.name, predicted, agreement))
    mean = sum(item[2] for item in per_record) / len(per_record) if per_record else 0.0
    return ValidationOutcome(per_record=tuple(per_record), mean_agreement=mean)


def render_report(report, fmt: str = "text") -> str:
    """Serialize a report deterministically.

    Accepts a Distribution, ModeComparison, ValidationOutcome, a mapping of
    mode name to ValidationOutcome, or CorpusStats. ``text`` is a fixed-width
    table, ``json`` a stable-key document, ``csv`` one row per metric/record.
    """
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if isinstance(report, Distribution):
        return _render_distribution(report, fmt)
    if isinstance(report, ModeComparison):
        return _render_comparison(report, fmt)
    if isinstance(report, ValidationOutcome):
        return _render_validation({None: report}, fmt)
    if isinstance(report, CorpusStats):
        return _render_stats(report, fmt)
    if isinstance(report, Mapping):
        return _render_validation(dict(report), fmt)
    raise TypeError(f"cannot render {type(report).__name__}")


def _distribution_items(dist: Distribution) -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = [
        ("total", dist.total),
        ("zero", dist.zero_count),
        ("hundred", dist.hundred_count),
    ]
    items.extend((f"bucket_{name}", count) for name, count in zip(BUCKET_NAMES, dist.bucket_counts))
    items.append(("bottom_half_share", _share(dist.bottom_half_share)))
    return items


def _share(value: float) -> str:
    return f"{value:.4f}"


def distribution_doc(dist: Distribution) -> dict:
    """The stable-key JSON shape of a Distribution (shared with the CLI's
    JSON-lines trailer)."""
    return {
        "total": dist.total,
        "zero": dist.zero_count,
        "hundred": dist.hundred_count,
        "buckets": dict(zip(BUCKET_NAMES, dist.bucket_counts)),
        "bottom_half_share": dist.bottom_half_share,
    }


def _render_distribution(dist: Distribution, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"distribution": distribution_doc(dist)}, indent=2) + "\n"
    items = _distribution_items(dist)
    if fmt == "csv":
        return _csv_rows([("metric", "value"), *items])
    width = max(len(name) for name, _ in items)
    return "".join(f"{name:<{width}}  {value}\n" for name, value in items)


def _render_comparison(comparison: ModeComparison, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "modes": {mode: distribution_doc(dist) for mode, dist in comparison.distributions.items()},
            "deltas": list(comparison.deltas),
        }
        return json.dumps(doc, indent=2) + "\n"
    per_mode = [_distribution_items(comparison.distributions[mode]) for mode in comparison.modes]
    metric_names = [name for name, _ in per_mode[0]] if per_mode else []
    rows = [("metric", *comparison.modes)]
    for i, metric in enumerate(metric_names):
        rows.append((metric, *(str(items[i][1]) for items in per_mode)))
    if fmt == "csv":
        return _csv_rows(rows)
    widths = [max(len(str(row[col])) for row in rows) for col in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [f"{str(cell):<{widths[0]}}" if col == 0 else f"{str(cell):>{widths[col]}}" for col, cell in enumerate(row)]
        lines.append("  ".join(cells).rstrip() + "\n")
    return "".join(lines)


def _render_validation(outcomes: dict, fmt: str) -> str:
    def outcome_doc(outcome: ValidationOutcome) -> dict:
        return {
            "mean_agreement": outcome.mean_agreement,
            "records": [
                {"name": name, "predicted_label": predicted, "agreement": agreement}
                for name, predicted, agreement in outcome.per_record
            ],
        }

    anonymous = set(outcomes) == {None}
    if fmt == "json":
        if anonymous:
            doc = {"validation": outcome_doc(outcomes[None])}
        else:
            doc = {"validation": {mode: outcome_doc(outcome) for mode, outcome in outcomes.items()}}
        return json.dumps(doc, indent=2) + "\n"
    rows: list[tuple[str, ...]] = []
    for mode, outcome in outcomes.items():
        prefix = () if anonymous else (mode,)
        for name, predicted, agreement in outcome.per_record:
            rows.append((*prefix, name, str(predicted), _agreement(agreement)))
        rows.append((*prefix, "mean_agreement", "", _share(outcome.mean_agreement)))
    header = ("name", "predicted_label", "agreement") if anonymous else ("mode", "name", "predicted_label", "agreement")
    rows.insert(0, header)
    if fmt == "csv":
        return _csv_rows(rows)
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [f"{cell:<{widths[col]}}" for col, cell in enumerate(row)]
        lines.append("  ".join(cells).rstrip() + "\n")
    return "".join(lines)


def _agreement(value: float) -> str:
    return f"{value:.1f}"


def _render_stats(stats: CorpusStats, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "stats": {
                "records": stats.record_count,
                "empty_summaries": stats.empty_summary_count,
                "mean_summary_tokens": stats.mean_summary_token_count,
                "top_name_tokens": [[token, count] for token, count in stats.top_name_tokens],
            }
        }
        return json.dumps(doc, indent=2) + "\n"
    rows: list[tuple[str, str]] = [
        ("records", str(stats.record_count)),
        ("empty_summaries", str(stats.empty_summary_count)),
        ("mean_summary_tokens", f"{stats.mean_summary_token_count:.4f}"),
    ]
    rows.extend((f"token {token}", str(count)) for token, count in stats.top_name_tokens)
    if fmt == "csv":
        return _csv_rows([("metric", "value"), *rows])
    width = max(len(name) for name, _ in rows)
    return "".join(f"{name:<{width}}  {value}\n" for name, value in rows)


def _csv_rows(rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()
