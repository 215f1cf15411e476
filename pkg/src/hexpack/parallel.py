"""Worker-count policy and a deterministic chunked map."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """HEXPACK_THREADS if set to a positive integer, else the CPU count."""
    raw = os.environ.get("HEXPACK_THREADS", "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"HEXPACK_THREADS must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"HEXPACK_THREADS must be a positive integer, got {raw!r}")
        return value
    return os.cpu_count() or 1


def pmap(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Map in input order; uses worker processes only when more than one is allowed."""
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
