"""Optional thread fan-out for embarrassingly parallel grids.

The worker count is capped by the RLSPEC_THREADS environment variable
(default 1, i.e. serial); results always come back in input order so
callers stay deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count(requested: int | None = None) -> int:
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get("RLSPEC_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def ordered_map(fn, items, workers: int | None = None) -> list:
    items = list(items)
    k = min(worker_count(workers), max(1, len(items)))
    if k <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))
