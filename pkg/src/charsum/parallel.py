"""Order-preserving parallel map.

Results come back in input order regardless of the job count, so every
sweep is byte-identical between serial and parallel runs.  Workers must
be picklable module-level callables (functools.partial is fine).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def pmap(fn, items, jobs=1):
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    chunksize = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
