"""Uniform access to text inputs given as paths or open streams."""

from __future__ import annotations

import io
import os
from contextlib import contextmanager
from typing import IO, Iterator, Union

TextSource = Union[str, os.PathLike, IO[str], IO[bytes]]


@contextmanager
def open_text(source: TextSource) -> Iterator[IO[str]]:
    """Yield a readable text stream for a path, text stream, or byte stream.

    Streams passed in by the caller are not closed; byte streams are wrapped
    as UTF-8 text for the duration of the block.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            yield handle
        return
    read = getattr(source, "read", None)
    if read is None:
        raise TypeError(f"not a path or readable stream: {source!r}")
    if isinstance(read(0), str):
        yield source  # type: ignore[misc]
        return
    wrapper = io.TextIOWrapper(source, encoding="utf-8", newline="")
    try:
        yield wrapper
    finally:
        wrapper.detach()
