"""Worker-pool helper honoring the TRACE_LATTICE_THREADS environment variable.

Unset, empty, or 0 means run serially; a positive integer caps the thread
count. Results always come back in input order, so parallel and serial runs
produce identical output.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    raw = os.environ.get("TRACE_LATTICE_THREADS", "").strip()
    if not raw:
        return 0
    n = int(raw)
    if n < 0:
        raise ValueError(f"TRACE_LATTICE_THREADS must be >= 0, got {n}")
    return n


def pmap(fn, items) -> list:
    items = list(items)
    n = worker_count()
    if n == 0 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
