"""Command-line interface: score, compare, validate, and stats subcommands.

Results go to stdout (or ``-o``); diagnostics go to stderr. Exit status is
0 on success, 1 on I/O or data errors, 2 on bad flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from functools import partial
from typing import Sequence

from .corpus import corpus_stats, load_corpus, load_labels
from .normalizer import LemmaRules, load_lemma_exceptions, load_word_set, tokenize_name
from .report import FORMATS, compare_modes, distribution, distribution_doc, render_report, validate
from .resources import (
    Resources,
    bundled_wordlist_source,
    load_default_common_words,
    load_default_lemma_rules,
    load_default_stopwords,
)
from .scorer import MODES, ScoreConfig, ScoreResult, score_corpus
from .segmenter import load_wordlist


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.handler(args)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as handle:
                handle.write(output)
        else:
            sys.stdout.write(output)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="namerelevance",
        description="Score how well entity names are reflected in their summaries.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    score = subparsers.add_parser("score", help="score each record and append a distribution")
    _add_io_options(score)
    _add_resource_options(score)
    _add_pipeline_options(score, with_mode=True)
    score.set_defaults(handler=run_score)

    compare = subparsers.add_parser("compare", help="score all three modes and compare them")
    _add_io_options(compare)
    _add_resource_options(compare)
    _add_pipeline_options(compare, with_mode=False)
    compare.set_defaults(handler=run_compare)

    val = subparsers.add_parser("validate", help="check all three modes against manual labels")
    _add_io_options(val)
    val.add_argument("--labels", required=True, help="CSV with name,primary,secondary columns")
    _add_resource_options(val)
    _add_pipeline_options(val, with_mode=False)
    val.set_defaults(handler=run_validate)

    stats = subparsers.add_parser("stats", help="corpus statistics incl. top name tokens")
    _add_io_options(stats)
    stats.add_argument("--top", type=_positive_int, default=20, help="how many name tokens to list")
    stats.add_argument("--wordlist", help="wordlist path (default: bundled)")
    stats.set_defaults(handler=run_stats)

    return parser


def run_score(args: argparse.Namespace) -> str:
    records = load_corpus(args.input)
    config = _config_from_args(args, mode=args.mode)
    resources = _resources_from_args(args)
    results = score_corpus(records, config, resources, jobs=args.jobs)
    dist = distribution([result.score for result in results])
    body = _render_rows(results, config.mode, args.format)
    if args.format == "json":
        return body + json.dumps({"distribution": distribution_doc(dist)}) + "\n"
    return body + "\n" + render_report(dist, args.format)


def run_compare(args: argparse.Namespace) -> str:
    records = load_corpus(args.input)
    resources = _resources_from_args(args)
    per_mode = {}
    for mode in MODES:
        config = _config_from_args(args, mode=mode)
        results = score_corpus(records, config, resources, jobs=args.jobs)
        per_mode[mode] = [result.score for result in results]
    return render_report(compare_modes(per_mode), args.format)


def run_validate(args: argparse.Namespace) -> str:
    records = load_corpus(args.input)
    labels = load_labels(args.labels)
    resources = _resources_from_args(args)
    outcomes = {}
    for mode in MODES:
        config = _config_from_args(args, mode=mode)
        results = score_corpus(records, config, resources, jobs=args.jobs)
        outcomes[mode] = validate(results, labels)
    return render_report(outcomes, args.format)


def run_stats(args: argparse.Namespace) -> str:
    records = load_corpus(args.input)
    model = load_wordlist(args.wordlist if args.wordlist else bundled_wordlist_source())
    stats = corpus_stats(records, partial(tokenize_name, model))
    stats = replace(stats, top_name_tokens=stats.top_name_tokens[: args.top])
    return render_report(stats, args.format)


def _add_io_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-i", "--input", required=True, help="corpus CSV with name,summary columns")
    parser.add_argument("-o", "--output", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=FORMATS, default="text")


def _add_resource_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--wordlist", help="wordlist path (default: bundled)")
    parser.add_argument("--stopwords", help="stopword file path (default: bundled)")
    parser.add_argument("--common-words", help="common-word file path (default: bundled)")
    parser.add_argument("--lemma-exceptions", help="lemma exception file path (default: bundled)")


def _add_pipeline_options(parser: argparse.ArgumentParser, *, with_mode: bool) -> None:
    if with_mode:
        parser.add_argument("--mode", choices=MODES, default="full")
    parser.add_argument("--fuzzy-threshold", type=_ratio_int, default=25)
    parser.add_argument("--summary-ngram-max", type=_min2_int, default=3)
    parser.add_argument("--acronym-max", type=_min2_int, default=5)
    parser.add_argument("--no-acronyms", action="store_true", help="drop acronym entries from the summary index")
    parser.add_argument("--strict-baseline", action="store_true",
                        help="baseline/ngram modes compare raw name tokens, without the lemma softening")
    parser.add_argument("--jobs", type=_positive_int, default=1, help="worker processes for scoring")


def _config_from_args(args: argparse.Namespace, *, mode: str) -> ScoreConfig:
    return ScoreConfig(
        mode=mode,
        fuzzy_threshold=args.fuzzy_threshold,
        summary_ngram_max=args.summary_ngram_max,
        acronym_max=args.acronym_max,
        acronyms_enabled=not args.no_acronyms,
        strict_baseline=args.strict_baseline,
    )


def _resources_from_args(args: argparse.Namespace) -> Resources:
    if args.wordlist:
        model = load_wordlist(args.wordlist)
    else:
        model = load_wordlist(bundled_wordlist_source())
    stopwords = load_word_set(args.stopwords) if args.stopwords else load_default_stopwords()
    common = load_word_set(args.common_words) if args.common_words else load_default_common_words()
    if args.lemma_exceptions:
        rules = LemmaRules(exceptions=load_lemma_exceptions(args.lemma_exceptions))
    else:
        rules = load_default_lemma_rules()
    return Resources(
        segmentation=model,
        stopwords=stopwords,
        common_words=common,
        lemma_rules=rules,
    )


def _render_rows(results: Sequence[ScoreResult], mode: str, fmt: str) -> str:
    if fmt == "json":
        lines = []
        for result in results:
            lines.append(
                json.dumps(
                    {
                        "name": result.name,
                        "score": result.score,
                        "mode": mode,
                        "flags": sorted(result.flags),
                        "credits": [
                            {
                                "token": credit.name_token,
                                "via": credit.matched_via,
                                "credit": round(credit.credit, 2),
                                "matched": credit.matched_text,
                            }
                            for credit in result.credits
                        ],
                    }
                )
            )
        return "".join(line + "\n" for line in lines)
    rows = [
        (result.name, str(result.score), mode, _flags_field(result), _credits_field(result))
        for result in results
    ]
    header = ("name", "score", "mode", "flags", "credits")
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
    all_rows = [header, *rows]
    widths = [max(len(row[col]) for row in all_rows) for col in range(len(header))]
    lines = []
    for row in all_rows:
        cells = [f"{row[col]:<{widths[col]}}" if col != 1 else f"{row[col]:>{widths[col]}}" for col in range(len(row))]
        lines.append("  ".join(cells).rstrip() + "\n")
    return "".join(lines)


def _flags_field(result: ScoreResult) -> str:
    return "|".join(sorted(result.flags))


def _credits_field(result: ScoreResult) -> str:
    return ";".join(
        f"{credit.name_token}:{credit.matched_via}:{credit.credit:.2f}" for credit in result.credits
    )


def _ratio_int(text: str) -> int:
    value = int(text)
    if not 0 <= value <= 100:
        raise argparse.ArgumentTypeError(f"must be in 0..100, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _min2_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be at least 2, got {value}")
    return value


if __name__ == "__main__":
    sys.exit(main())
