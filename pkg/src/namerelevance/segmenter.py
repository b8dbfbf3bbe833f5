"""Split concatenated strings into words by dynamic programming over a
frequency-ranked wordlist.

The cost of an in-vocabulary word grows with its frequency rank (a Zipf-style
heuristic: common words are cheap), while unknown text pays a steep
per-character price. The cheapest partition of a chunk is therefore the one
that covers as much of it as possible with frequent words.
"""

from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from typing import Iterable

from ._sources import TextSource, open_text

UNKNOWN_UNIT_COST = 100.0

_WORD_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class SegmentationModel:
    """Immutable vocabulary ranked by descending corpus frequency."""

    ranked_words: tuple[str, ...]
    rank_index: dict[str, int]
    max_word_length: int
    vocab_size: int

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "SegmentationModel":
        """Build a model from an already-clean iterable of ranked words.

        Words are lowercased; duplicates keep the rank of their first
        occurrence.
        """
        rank_index: dict[str, int] = {}
        for word in words:
            word = word.lower()
            if word and word not in rank_index:
                rank_index[word] = len(rank_index)
        ranked = tuple(rank_index)
        return cls(
            ranked_words=ranked,
            rank_index=rank_index,
            max_word_length=max(map(len, ranked), default=0),
            vocab_size=len(ranked),
        )


def load_wordlist(source: TextSource) -> SegmentationModel:
    """Read a wordlist (one word per line, most frequent first) into a
    :class:`SegmentationModel`.

    Lines are lowercased before validation; a line containing anything other
    than ``[a-z0-9]`` is skipped with a diagnostic on stderr. Duplicate words
    keep their first rank. An empty stream yields an empty model, which
    :func:`segment` handles by leaving chunks whole.
    """
    words: list[str] = []
    with open_text(source) as stream:
        for line_number, line in enumerate(stream, start=1):
            word = line.strip().lower()
            if not word:
                continue
            if not _WORD_RE.fullmatch(word):
                print(
                    f"wordlist line {line_number}: not alphanumeric, skipped: {word!r}",
                    file=sys.stderr,
                )
                continue
            words.append(word)
    return SegmentationModel.from_words(words)


def word_cost(model: SegmentationModel, word: str) -> float:
    """Cost of using ``word`` in a segmentation; lower is more probable.

    In-vocabulary words cost ``ln((rank + 1) * ln(vocab_size + 2))``;
    anything else costs ``UNKNOWN_UNIT_COST`` per character.
    """
    rank = model.rank_index.get(word)
    if rank is None:
        return UNKNOWN_UNIT_COST * len(word)
    return math.log((rank + 1) * math.log(model.vocab_size + 2))


def segment(model: SegmentationModel, chunk: str) -> list[str]:
    """Partition ``chunk`` into the cheapest sequence of words.

    Dynamic programming over prefix lengths; every split point is a
    candidate, so an unknown run can stay whole. Cost ties prefer fewer
    tokens, then a longer final token, which makes the output deterministic.
    The concatenation of the result always equals ``chunk``.
    """
    n = len(chunk)
    if n == 0:
        return []
    # dp[i]: (cost, token_count, last_token_length) of the best partition
    # of chunk[:i]
    dp: list[tuple[float, int, int]] = [(0.0, 0, 0)]
    for i in range(1, n + 1):
        best_key = (math.inf, 0, 0)
        best_last = 0
        for j in range(i):
            cost_j, count_j, _ = dp[j]
            key = (cost_j + word_cost(model, chunk[j:i]), count_j + 1, j - i)
            if key < best_key:
                best_key = key
                best_last = i - j
        dp.append((best_key[0], best_key[1], best_last))
    tokens: list[str] = []
    i = n
    while i > 0:
        last = dp[i][2]
        tokens.append(chunk[i - last : i])
        i -= last
    tokens.reverse()
    return tokens
