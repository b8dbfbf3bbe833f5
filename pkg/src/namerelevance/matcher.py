"""String matching primitives: edit distance, similarity ratios, fuzzy
candidate search, and token-window expansion (n-grams and acronyms)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class FuzzyMatch:
    """Closest candidate found for a token, with its 0-100 similarity."""

    candidate: str
    ratio: int


def levenshtein(a: str, b: str) -> int:
    """Minimum number of single-character insertions, deletions, and
    substitutions that turn ``a`` into ``b``."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(b) > len(a):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, char_a in enumerate(a, start=1):
        current = [i]
        for j, char_b in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (char_a != char_b),
                )
            )
        previous = current
    return previous[-1]


def similarity_ratio(a: str, b: str) -> int:
    """Levenshtein distance normalised by the longer string, as an integer
    percentage: 100 means identical, 0 means nothing in common.

    Rounding is half-up; two empty strings score 100.
    """
    longest = max(len(a), len(b))
    if longest == 0:
        return 100
    matched = longest - levenshtein(a, b)
    return (200 * matched + longest) // (2 * longest)


def best_fuzzy_match(token: str, candidates: Iterable[str]) -> FuzzyMatch | None:
    """Candidate with the highest similarity to ``token``.

    Earlier candidates win ties; returns None when there are no candidates.
    """
    best: FuzzyMatch | None = None
    token_length = len(token)
    for candidate in candidates:
        if best is not None:
            # length difference bounds the distance from below, so it bounds
            # the ratio from above; skip candidates that cannot beat the
            # incumbent strictly
            longest = max(token_length, len(candidate))
            if longest > 0:
                reachable = longest - abs(token_length - len(candidate))
                if (200 * reachable + longest) // (2 * longest) <= best.ratio:
                    continue
            elif best.ratio >= 100:
                continue
        ratio = similarity_ratio(token, candidate)
        if best is None or ratio > best.ratio:
            best = FuzzyMatch(candidate, ratio)
    return best


def ngrams(tokens: Sequence[str], n_min: int, n_max: int) -> list[str]:
    """Every contiguous window of ``n_min``..``n_max`` tokens, each window
    joined into a single string; windows are emitted smallest-n first,
    left to right."""
    if not 1 <= n_min <= n_max:
        raise ValueError(f"invalid n-gram range [{n_min}, {n_max}]")
    grams: list[str] = []
    for n in range(n_min, min(n_max, len(tokens)) + 1):
        for i in range(len(tokens) - n + 1):
            grams.append("".join(tokens[i : i + n]))
    return grams


def acronyms(tokens: Sequence[str], n_min: int, n_max: int) -> list[str]:
    """First letters of every contiguous window of ``n_min``..``n_max``
    tokens, in the same order as :func:`ngrams`."""
    if not 2 <= n_min <= n_max:
        raise ValueError(f"invalid acronym range [{n_min}, {n_max}]")
    initials = [token[0] for token in tokens]
    out: list[str] = []
    for n in range(n_min, min(n_max, len(tokens)) + 1):
        for i in range(len(tokens) - n + 1):
            out.append("".join(initials[i : i + n]))
    return out
