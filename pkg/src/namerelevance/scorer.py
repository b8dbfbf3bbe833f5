"""Relevance scoring: combine segmentation, normalisation, and matching into
the three staged pipeline modes and produce per-record 0-100 scores with
per-token match provenance.

Modes are strictly cumulative:

* ``baseline`` - membership of name tokens in the filtered, lemmatized
  summary.
* ``ngram`` - baseline plus concatenated token windows and acronyms on the
  summary side, and concatenated windows on the name side.
* ``full`` - ngram plus a lemma check on name tokens and fuzzy matching
  with a similarity threshold.

Because each mode only adds ways to earn credit, per-record scores never
decrease from one mode to the next.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import PackageRecord
from .matcher import acronyms, best_fuzzy_match, ngrams
from .normalizer import filter_tokens, lemmatize, tokenize_name, tokenize_summary
from .resources import Resources

MODES = ("baseline", "ngram", "full")

EMPTY_SUMMARY = "empty_summary"
EMPTY_NAME_TOKENS = "empty_name_tokens"

# how an index entry was built -> provenance label for a direct hit
_KIND_TO_VIA = {"token": "exact", "ngram": "ngram", "acronym": "acronym"}

# lower is better; used to pick the label when several tiers reach the
# same credit
_VIA_PRIORITY = {"exact": 0, "ngram": 1, "acronym": 2, "lemma": 3, "fuzzy": 4, "none": 5}


@dataclass(frozen=True)
class ScoreConfig:
    """Pipeline mode and its knobs; validated on construction."""

    mode: str = "full"
    fuzzy_threshold: int = 25
    summary_ngram_max: int = 3
    acronym_max: int = 5
    acronyms_enabled: bool = True
    strict_baseline: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0 <= self.fuzzy_threshold <= 100:
            raise ValueError(f"fuzzy_threshold must be in 0..100, got {self.fuzzy_threshold}")
        if self.summary_ngram_max < 2:
            raise ValueError("summary_ngram_max must be at least 2")
        if self.acronym_max < 2:
            raise ValueError("acronym_max must be at least 2")


@dataclass(frozen=True)
class SummaryIndex:
    """Matchable entries built from one summary.

    ``entries`` maps each entry to how it was built (``token``, ``ngram``,
    or ``acronym``), in deterministic insertion order: lemmatized tokens
    first, then concatenated windows, then acronyms. The first builder of an
    entry wins, so a string that is both a real token and an acronym counts
    as a token.
    """

    entries: Mapping[str, str]
    has_summary_tokens: bool


@dataclass(frozen=True)
class TokenCredit:
    """How much one name token earned, and from which match tier."""

    name_token: str
    credit: float
    matched_via: str
    matched_text: str = ""


@dataclass(frozen=True)
class ScoreResult:
    """Per-record outcome: integer score, per-token provenance, and flags
    for the degenerate cases (no usable name tokens / no summary text)."""

    name: str
    score: int
    credits: tuple[TokenCredit, ...]
    name_token_count: int
    flags: frozenset[str]


def prepare_summary(record: PackageRecord, config: ScoreConfig, resources: Resources) -> SummaryIndex:
    """Tokenize, filter, and lemmatize a summary into a matchable index.

    In ngram/full modes the index also carries concatenated windows (up to
    ``summary_ngram_max`` tokens) and, when enabled, window acronyms (up to
    ``acronym_max`` tokens), both computed over the filtered token sequence
    before lemmatisation.
    """
    raw_tokens = tokenize_summary(record.summary)
    filtered = filter_tokens(raw_tokens, resources.stopwords, resources.common_words)
    entries: dict[str, str] = {}
    for token in filtered:
        entries.setdefault(lemmatize(resources.lemma_rules, token), "token")
    if config.mode != "baseline":
        for gram in ngrams(filtered, 2, config.summary_ngram_max):
            entries.setdefault(gram, "ngram")
        if config.acronyms_enabled:
            for acronym in acronyms(filtered, 2, config.acronym_max):
                entries.setdefault(acronym, "acronym")
    return SummaryIndex(entries=entries, has_summary_tokens=bool(raw_tokens))


def token_credit(
    name_token: str,
    index: SummaryIndex,
    config: ScoreConfig,
    resources: Resources,
) -> TokenCredit:
    """Best credit the summary grants one name token.

    Tiers, in order: direct membership (all modes), lemma membership
    (always in full mode; in baseline/ngram unless ``strict_baseline``),
    then fuzzy matching at ``fuzzy_threshold`` (full mode only, earning the
    fractional credit ratio/100). Name-side window hits are applied at the
    record level, not here.
    """
    kind = index.entries.get(name_token)
    if kind is not None:
        return TokenCredit(name_token, 1.0, _KIND_TO_VIA[kind], name_token)
    if config.mode == "full" or not config.strict_baseline:
        lemma = lemmatize(resources.lemma_rules, name_token)
        if lemma in index.entries:
            return TokenCredit(name_token, 1.0, "lemma", lemma)
    if config.mode == "full":
        match = best_fuzzy_match(name_token, index.entries)
        if match is not None and match.ratio >= config.fuzzy_threshold:
            return TokenCredit(name_token, match.ratio / 100, "fuzzy", match.candidate)
    return TokenCredit(name_token, 0.0, "none", "")


def score_record(record: PackageRecord, config: ScoreConfig, resources: Resources) -> ScoreResult:
    """Score one record: the credit-weighted share of its filtered name
    tokens that the summary accounts for, rounded half-up to 0-100."""
    name_tokens = tokenize_name(resources.segmentation, record.name)
    filtered = filter_tokens(name_tokens, resources.stopwords, resources.common_words)
    index = prepare_summary(record, config, resources)

    flags = set()
    if not index.has_summary_tokens:
        flags.add(EMPTY_SUMMARY)
    if not filtered:
        flags.add(EMPTY_NAME_TOKENS)
        return ScoreResult(record.name, 0, (), 0, frozenset(flags))

    credits = [token_credit(token, index, config, resources) for token in filtered]

    if config.mode != "baseline":
        # a window of name tokens that reappears concatenated in the summary
        # grants full credit to every token it covers
        for n in range(2, len(filtered) + 1):
            for start in range(len(filtered) - n + 1):
                gram = "".join(filtered[start : start + n])
                if gram not in index.entries:
                    continue
                for position in range(start, start + n):
                    current = credits[position]
                    if current.credit < 1.0 or _VIA_PRIORITY[current.matched_via] > _VIA_PRIORITY["ngram"]:
                        credits[position] = TokenCredit(current.name_token, 1.0, "ngram", gram)

    # integer half-up of 100 * sum(credit) / count, done in hundredths so
    # float credits cannot perturb the rounding
    hundredths = sum(round(credit.credit * 100) for credit in credits)
    score = (2 * hundredths + len(credits)) // (2 * len(credits))
    return ScoreResult(record.name, score, tuple(credits), len(credits), frozenset(flags))


def score_corpus(
    records: Sequence[PackageRecord],
    config: ScoreConfig,
    resources: Resources,
    *,
    jobs: int = 1,
) -> list[ScoreResult]:
    """Score records independently, preserving input order.

    With ``jobs`` > 1 the work fans out across processes; results are
    identical to a serial run.
    """
    if jobs <= 1 or len(records) < 2:
        return [score_record(record, config, resources) for record in records]
    chunksize = max(1, len(records) // (jobs * 4))
    with ProcessPoolExecutor(
        max_workers=jobs,
        initializer=_init_worker,
        initargs=(config, resources),
    ) as pool:
        return list(pool.map(_score_in_worker, records, chunksize=chunksize))


_WORKER_STATE: tuple[ScoreConfig, Resources] | None = None


def _init_worker(config: ScoreConfig, resources: Resources) -> None:
    global _WORKER_STATE
    _WORKER_STATE = (config, resources)


def _score_in_worker(record: PackageRecord) -> ScoreResult:
    assert _WORKER_STATE is not None
    config, resources = _WORKER_STATE
    return score_record(record, config, resources)
