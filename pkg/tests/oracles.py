"""Independent oracles the test suite checks the implementation against.

Nothing here shares code with the library's algorithms: edit distance is
recomputed by exploring edit sequences, and segmentation optimality by
enumerating every contiguous partition.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from namerelevance.segmenter import SegmentationModel, word_cost


def bfs_edit_distance(a: str, b: str) -> int:
    """Edit distance by breadth-first search over single-character edits.

    Explores every string reachable from ``a`` one edit at a time until ``b``
    appears. States longer than the longer input are pruned (an optimal edit
    sequence never needs to overshoot), as are characters outside the two
    inputs. Only practical for small strings and distances.
    """
    if a == b:
        return 0
    alphabet = sorted(set(a) | set(b))
    max_length = max(len(a), len(b))
    frontier = {a}
    seen = {a}
    for depth in itertools.count(start=1):
        next_frontier: set[str] = set()
        for state in frontier:
            for edited in _single_edits(state, alphabet, max_length):
                if edited == b:
                    return depth
                if edited not in seen:
                    seen.add(edited)
                    next_frontier.add(edited)
        frontier = next_frontier
        assert frontier, "edit search exhausted without reaching the target"


def _single_edits(state: str, alphabet: Sequence[str], max_length: int) -> Iterator[str]:
    for i in range(len(state)):
        yield state[:i] + state[i + 1 :]  # delete
        for char in alphabet:
            if char != state[i]:
                yield state[:i] + char + state[i + 1 :]  # substitute
    if len(state) < max_length:
        for i in range(len(state) + 1):
            for char in alphabet:
                yield state[:i] + char + state[i:]  # insert


@lru_cache(maxsize=None)
def case_edit_distance(a: str, b: str) -> int:
    """Edit distance by exhaustive case analysis on the first characters.

    Every way of consuming the heads of ``a`` and ``b`` (match, substitute,
    delete, insert) is explored; memoisation collapses repeated suffix pairs
    so sweeping all short string pairs stays tractable.
    """
    if not a:
        return len(b)
    if not b:
        return len(a)
    if a[0] == b[0]:
        return case_edit_distance(a[1:], b[1:])
    return 1 + min(
        case_edit_distance(a[1:], b),
        case_edit_distance(a, b[1:]),
        case_edit_distance(a[1:], b[1:]),
    )


def all_partitions(chunk: str) -> Iterator[list[str]]:
    """Every contiguous partition of ``chunk`` (2^(n-1) of them)."""
    if not chunk:
        yield []
        return
    for cuts in itertools.product((False, True), repeat=len(chunk) - 1):
        parts: list[str] = []
        start = 0
        for position, cut in enumerate(cuts, start=1):
            if cut:
                parts.append(chunk[start:position])
                start = position
        parts.append(chunk[start:])
        yield parts


def partition_cost(model: SegmentationModel, parts: Sequence[str]) -> float:
    return sum(word_cost(model, part) for part in parts)


def min_partition_cost(model: SegmentationModel, chunk: str) -> float:
    """Cheapest total cost over every contiguous partition, by enumeration."""
    return min(partition_cost(model, parts) for parts in all_partitions(chunk))
