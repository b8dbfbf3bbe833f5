"""Scikit-learn style estimator wrapping the scoring pipeline, so relevance
scores can sit inside ordinary sklearn pipelines and grid searches."""

from __future__ import annotations

import os
from typing import Iterable, Mapping

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .corpus import PackageRecord
from .normalizer import LemmaRules, load_lemma_exceptions, load_word_set
from .resources import (
    Resources,
    bundled_wordlist_source,
    load_default_common_words,
    load_default_lemma_rules,
    load_default_stopwords,
)
from .scorer import ScoreConfig, ScoreResult, score_corpus
from .segmenter import SegmentationModel, load_wordlist


def as_records(X: Iterable) -> list[PackageRecord]:
    """Coerce estimator input into PackageRecords.

    Accepts PackageRecord instances, (name, summary) pairs (including rows
    of a two-column array), and mappings with ``name``/``summary`` keys.
    Blank names are a caller error here, unlike CSV ingestion where they are
    skipped row by row.
    """
    records: list[PackageRecord] = []
    for position, item in enumerate(X):
        if isinstance(item, PackageRecord):
            record = item
        elif isinstance(item, Mapping):
            record = PackageRecord(str(item.get("name", "")), str(item.get("summary", "") or ""))
        elif isinstance(item, str):
            raise ValueError(f"record {position}: expected (name, summary), got a bare string")
        else:
            try:
                name, summary = item
            except (TypeError, ValueError):
                raise ValueError(
                    f"record {position}: expected PackageRecord, (name, summary) pair, or mapping"
                ) from None
            record = PackageRecord(str(name), "" if summary is None else str(summary))
        if not record.name.strip():
            raise ValueError(f"record {position}: name is blank")
        records.append(record)
    return records


class NameRelevanceScorer(BaseEstimator):
    """Score how well an entity's name is reflected in its summary text.

    Each record's filtered name tokens are matched against its summary
    through the staged pipeline selected by ``mode``; the score is the
    credit-weighted share of name tokens the summary accounts for, on a
    0-100 scale.

    Parameters
    ----------
    mode : {"baseline", "ngram", "full"}, default="full"
        Pipeline stage. ``baseline`` checks token membership, ``ngram`` adds
        concatenated windows and acronyms, ``full`` adds a name-token lemma
        check and fuzzy matching.
    fuzzy_threshold : int, default=25
        Minimum 0-100 similarity for a fuzzy hit to earn credit (full mode).
    summary_ngram_max : int, default=3
        Largest summary-side window joined into an n-gram entry.
    acronym_max : int, default=5
        Largest summary-side window contributing an acronym entry.
    acronyms_enabled : bool, default=True
        Whether summary windows also contribute their initials.
    strict_baseline : bool, default=False
        When True, baseline/ngram modes compare raw name tokens only,
        reproducing the historical behaviour where a name token like
        "tracks" misses a summary lemmatized to "track".
    wordlist : path, readable stream, sequence of words, or None
        Frequency-descending vocabulary for name segmentation; None uses the
        bundled list (or the NAMERELEVANCE_WORDLIST override).
    stopwords : path, readable stream, iterable of words, or None
        Tokens removed from both sides before matching; None uses the
        bundled list.
    common_words : path, readable stream, iterable of words, or None
        Corpus-specific boilerplate removed before matching; None uses the
        bundled {"py", "python"}.
    lemma_exceptions : path, readable stream, mapping, or None
        Word-to-lemma overrides applied before the suffix rules; None uses
        the bundled table.

    Attributes
    ----------
    config_ : ScoreConfig
        Validated pipeline configuration.
    resources_ : Resources
        Resolved lexical resources shared by all scoring calls.

    Examples
    --------
    >>> scorer = NameRelevanceScorer(mode="full").fit()
    >>> scorer.predict([("pytracks", "Tracks the GPS data")])
    array([100])
    """

    def __init__(
        self,
        mode: str = "full",
        fuzzy_threshold: int = 25,
        summary_ngram_max: int = 3,
        acronym_max: int = 5,
        acronyms_enabled: bool = True,
        strict_baseline: bool = False,
        wordlist=None,
        stopwords=None,
        common_words=None,
        lemma_exceptions=None,
    ):
        self.mode = mode
        self.fuzzy_threshold = fuzzy_threshold
        self.summary_ngram_max = summary_ngram_max
        self.acronym_max = acronym_max
        self.acronyms_enabled = acronyms_enabled
        self.strict_baseline = strict_baseline
        self.wordlist = wordlist
        self.stopwords = stopwords
        self.common_words = common_words
        self.lemma_exceptions = lemma_exceptions

    def fit(self, X=None, y=None) -> "NameRelevanceScorer":
        """Validate parameters and resolve lexical resources.

        Nothing is learned from ``X``; it is accepted for pipeline
        compatibility.
        """
        self.config_ = ScoreConfig(
            mode=self.mode,
            fuzzy_threshold=self.fuzzy_threshold,
            summary_ngram_max=self.summary_ngram_max,
            acronym_max=self.acronym_max,
            acronyms_enabled=self.acronyms_enabled,
            strict_baseline=self.strict_baseline,
        )
        self.resources_ = Resources(
            segmentation=self._resolve_wordlist(),
            stopwords=self._resolve_word_set(self.stopwords, load_default_stopwords),
            common_words=self._resolve_word_set(self.common_words, load_default_common_words),
            lemma_rules=self._resolve_lemma_rules(),
        )
        return self

    def predict(self, X) -> np.ndarray:
        """Integer 0-100 relevance score per record."""
        return np.array([result.score for result in self.score_records(X)], dtype=int)

    def transform(self, X) -> np.ndarray:
        """Scores as a single feature column, for pipeline composition."""
        return self.predict(X).reshape(-1, 1)

    def score_records(self, X, *, jobs: int = 1) -> list[ScoreResult]:
        """Full per-record results, including per-token match provenance."""
        self._check_fitted()
        return score_corpus(as_records(X), self.config_, self.resources_, jobs=jobs)

    def _check_fitted(self) -> None:
        if not hasattr(self, "resources_"):
            raise NotFittedError(
                "This NameRelevanceScorer instance is not fitted yet; call fit() first."
            )

    def _resolve_wordlist(self) -> SegmentationModel:
        source = self.wordlist
        if source is None:
            return load_wordlist(bundled_wordlist_source())
        if isinstance(source, (str, os.PathLike)) or hasattr(source, "read"):
            return load_wordlist(source)
        return SegmentationModel.from_words(source)

    @staticmethod
    def _resolve_word_set(source, load_default) -> frozenset[str]:
        if source is None:
            return load_default()
        if isinstance(source, (str, os.PathLike)) or hasattr(source, "read"):
            return load_word_set(source)
        return frozenset(word.lower() for word in source if word)

    def _resolve_lemma_rules(self) -> LemmaRules:
        source = self.lemma_exceptions
        if source is None:
            return load_default_lemma_rules()
        if isinstance(source, Mapping):
            return LemmaRules(exceptions={k.lower(): v.lower() for k, v in source.items()})
        return LemmaRules(exceptions=load_lemma_exceptions(source))
