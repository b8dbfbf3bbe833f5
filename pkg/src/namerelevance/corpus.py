"""Corpus and manual-label ingestion, plus the summary statistics an
operator uses to discover corpus-specific boilerplate tokens."""

from __future__ import annotations

import csv
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ._sources import TextSource, open_text
from .normalizer import tokenize_summary

VALID_LABELS = (0, 1, 2, 3)


class CorpusFormatError(ValueError):
    """Raised when an input file does not match its expected layout."""


@dataclass(frozen=True)
class PackageRecord:
    """One (name, summary) pair; the unit of scoring.

    The summary may be empty, the name may not (blank-named rows are
    rejected at load time).
    """

    name: str
    summary: str


@dataclass(frozen=True)
class LabeledRecord:
    """A manually reviewed record: primary and secondary labels in 0..3."""

    name: str
    primary_label: int
    secondary_label: int


@dataclass(frozen=True)
class CorpusStats:
    """Aggregates over a corpus.

    ``top_name_tokens`` is sorted by descending frequency with lexicographic
    tie-breaks; summaries with no alphanumeric content count as empty.
    """

    record_count: int
    empty_summary_count: int
    mean_summary_token_count: float
    top_name_tokens: tuple[tuple[str, int], ...]


def load_corpus(source: TextSource) -> list[PackageRecord]:
    """Load records from a CSV file with ``name`` and ``summary`` columns.

    Field contents are preserved verbatim. Rows whose name is blank are
    skipped with a diagnostic on stderr naming the offending row; a missing
    required column is fatal.
    """
    records: list[PackageRecord] = []
    with open_text(source) as stream:
        reader = csv.DictReader(stream)
        _require_columns(reader.fieldnames, ("name", "summary"))
        for row in reader:
            name = row.get("name") or ""
            if not name.strip():
                print(f"row {reader.line_num}: empty name, row skipped", file=sys.stderr)
                continue
            records.append(PackageRecord(name=name, summary=row.get("summary") or ""))
    return records


def load_labels(source: TextSource) -> list[LabeledRecord]:
    """Load manual labels from a CSV file with ``name``, ``primary`` and
    ``secondary`` columns.

    Labels must be integers in 0..3 and names must be unique; violations are
    fatal and name the offending row.
    """
    labels: list[LabeledRecord] = []
    seen: set[str] = set()
    with open_text(source) as stream:
        reader = csv.DictReader(stream)
        _require_columns(reader.fieldnames, ("name", "primary", "secondary"))
        for row in reader:
            name = (row.get("name") or "").strip()
            if not name:
                raise CorpusFormatError(f"row {reader.line_num}: empty name in labels file")
            if name in seen:
                raise CorpusFormatError(f"row {reader.line_num}: duplicate name {name!r}")
            seen.add(name)
            labels.append(
                LabeledRecord(
                    name=name,
                    primary_label=_parse_label(row.get("primary"), "primary", reader.line_num),
                    secondary_label=_parse_label(row.get("secondary"), "secondary", reader.line_num),
                )
            )
    return labels


def corpus_stats(
    records: Sequence[PackageRecord],
    name_tokenizer: Callable[[str], Iterable[str]],
) -> CorpusStats:
    """Compute corpus aggregates.

    ``name_tokenizer`` decides what counts as a name token; feeding the
    segmenting tokenizer here is how the frequent boilerplate tokens worth
    adding to the common-word set show up.
    """
    token_counts: Counter[str] = Counter()
    empty_summaries = 0
    summary_tokens = 0
    for record in records:
        tokens = tokenize_summary(record.summary)
        if not tokens:
            empty_summaries += 1
        summary_tokens += len(tokens)
        token_counts.update(name_tokenizer(record.name))
    ranked = sorted(token_counts.items(), key=lambda item: (-item[1], item[0]))
    mean_tokens = summary_tokens / len(records) if records else 0.0
    return CorpusStats(
        record_count=len(records),
        empty_summary_count=empty_summaries,
        mean_summary_token_count=mean_tokens,
        top_name_tokens=tuple(ranked),
    )


def _require_columns(fieldnames: Sequence[str] | None, required: Iterable[str]) -> None:
    present = set(fieldnames or ())
    for column in required:
        if column not in present:
            raise CorpusFormatError(f"missing column {column!r}")


def _parse_label(value: str | None, column: str, row: int) -> int:
    try:
        label = int((value or "").strip())
    except ValueError:
        raise CorpusFormatError(f"row {row}: {column} label {value!r} is not an integer") from None
    if label not in VALID_LABELS:
        raise CorpusFormatError(f"row {row}: {column} label {label} out of range 0..3")
    return label
