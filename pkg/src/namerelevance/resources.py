"""The lexical resources scoring needs, and loaders for the bundled ones."""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources as importlib_resources

from .normalizer import LemmaRules, load_lemma_exceptions, load_word_set
from .segmenter import SegmentationModel, load_wordlist

WORDLIST_ENV_VAR = "NAMERELEVANCE_WORDLIST"

_DATA = importlib_resources.files(__package__) / "data"


@dataclass(frozen=True)
class Resources:
    """Immutable bundle of everything the scorer consults.

    Safe to share across threads and to ship to worker processes.
    """

    segmentation: SegmentationModel
    stopwords: frozenset[str]
    common_words: frozenset[str]
    lemma_rules: LemmaRules


def bundled_wordlist_source():
    """The bundled wordlist, unless ``NAMERELEVANCE_WORDLIST`` points
    elsewhere."""
    override = os.environ.get(WORDLIST_ENV_VAR)
    if override:
        return override
    return _DATA / "wordlist.txt"


def load_default_resources() -> Resources:
    """Load the wordlist, stopword, common-word, and lemma-exception files
    shipped with the package (honouring the wordlist environment override)."""
    return Resources(
        segmentation=load_wordlist(bundled_wordlist_source()),
        stopwords=load_default_stopwords(),
        common_words=load_default_common_words(),
        lemma_rules=load_default_lemma_rules(),
    )


def load_default_stopwords() -> frozenset[str]:
    with (_DATA / "stopwords.txt").open("r", encoding="utf-8") as stream:
        return load_word_set(stream)


def load_default_common_words() -> frozenset[str]:
    with (_DATA / "common_words.txt").open("r", encoding="utf-8") as stream:
        return load_word_set(stream)


def load_default_lemma_rules() -> LemmaRules:
    with (_DATA / "lemma_exceptions.txt").open("r", encoding="utf-8") as stream:
        return LemmaRules(exceptions=load_lemma_exceptions(stream))
