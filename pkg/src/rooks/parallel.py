"""Deterministic worker-pool helper.

Work is split into an ordered list of independent jobs; results are merged
back in job order, so the output never depends on the worker count.  The
count comes from the ROOKS_WORKERS environment variable (default 1).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "ROOKS_WORKERS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "1")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    return max(count, 1)


def chunk_map(fn, jobs, workers: int | None = None) -> list:
    """Apply ``fn`` to every job, preserving job order in the result."""
    jobs = list(jobs)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))
