"""Tokenisation, stopword and common-word filtering, and rule-based
lemmatisation."""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Iterable, Mapping

from ._sources import TextSource, open_text
from .segmenter import SegmentationModel, segment

# Ordered suffix rules: (suffix, replacement, minimum stem length). The first
# rule whose suffix matches and whose stem meets the minimum applies; rules
# that map a suffix to itself act as guards that keep later rules off words
# they would mangle (glass, status, basis, speed).
DEFAULT_SUFFIX_RULES: tuple[tuple[str, str, int], ...] = (
    ("sses", "ss", 2),
    ("ies", "y", 2),
    ("ied", "y", 2),
    ("eed", "eed", 2),
    ("ss", "ss", 2),
    ("us", "us", 2),
    ("is", "is", 2),
    ("ing", "", 3),
    ("ed", "", 3),
    ("s", "", 3),
)

# Stripping -ing/-ed exposes doubled consonants (logging -> logg); undouble
# these endings only, since ll/ss/ff/zz legitimately end words.
_UNDOUBLE_SUFFIXES = ("ing", "ed")
_DOUBLED_ENDINGS = frozenset({"bb", "dd", "gg", "mm", "nn", "pp", "rr", "tt"})

_TOKEN_RE = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class LemmaRules:
    """Exception table plus ordered suffix rules driving :func:`lemmatize`."""

    exceptions: Mapping[str, str]
    suffix_rules: tuple[tuple[str, str, int], ...] = DEFAULT_SUFFIX_RULES


def tokenize_summary(text: str) -> list[str]:
    """Lowercase tokens split on every non-alphanumeric character; empty
    fragments are dropped, order and duplicates preserved."""
    return _TOKEN_RE.findall(text.lower())


def tokenize_name(model: SegmentationModel, name: str) -> list[str]:
    """Lowercase a name, split it on separators, and segment each
    concatenated chunk ("py-tracks" and "pytracks" both tokenize to
    ["py", "tracks"])."""
    tokens: list[str] = []
    for chunk in _TOKEN_RE.findall(name.lower()):
        tokens.extend(segment(model, chunk))
    return tokens


def filter_tokens(
    tokens: Iterable[str],
    stopwords: frozenset[str],
    common_words: frozenset[str],
) -> list[str]:
    """Drop tokens present in either set, keeping the survivors' order."""
    return [t for t in tokens if t not in stopwords and t not in common_words]


def lemmatize(rules: LemmaRules, word: str) -> str:
    """Map a lowercase word to its base form.

    The exception table wins outright; otherwise the first suffix rule that
    matches and leaves a long-enough stem applies (at most one rule fires).
    Unmatched words come back unchanged.
    """
    exception = rules.exceptions.get(word)
    if exception is not None:
        return exception
    for suffix, replacement, min_stem in rules.suffix_rules:
        if not word.endswith(suffix):
            continue
        stem = word[: len(word) - len(suffix)] + replacement
        if len(stem) < min_stem:
            continue
        if (
            not replacement
            and suffix in _UNDOUBLE_SUFFIXES
            and len(stem) >= 3
            and stem[-2:] in _DOUBLED_ENDINGS
        ):
            stem = stem[:-1]
        return stem
    return word


def load_word_set(source: TextSource) -> frozenset[str]:
    """Read a one-token-per-line file into a lowercase set; blank lines are
    ignored. Used for both stopword and common-word files."""
    with open_text(source) as stream:
        return frozenset(word for word in (line.strip().lower() for line in stream) if word)


def load_lemma_exceptions(source: TextSource) -> dict[str, str]:
    """Read tab-separated ``word<TAB>lemma`` lines into an exception table.

    Malformed lines are skipped with a diagnostic on stderr.
    """
    exceptions: dict[str, str] = {}
    with open_text(source) as stream:
        for line_number, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                print(
                    f"lemma exceptions line {line_number}: expected word<TAB>lemma, skipped",
                    file=sys.stderr,
                )
                continue
            exceptions[parts[0].lower()] = parts[1].lower()
    return exceptions
