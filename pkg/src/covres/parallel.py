"""Order-preserving fork-join map over independent pure tasks."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1)


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``list(map(fn, items))``, spread over ``workers`` processes when > 1.

    Results come back in input order, so any merge that follows is
    independent of scheduling. ``fn`` must be picklable when workers > 1.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def chunked(seq: list[T], parts: int) -> list[list[T]]:
    parts = max(1, parts)
    size = -(-len(seq) // parts) if seq else 1
    return [seq[i:i + size] for i in range(0, len(seq), size)]
