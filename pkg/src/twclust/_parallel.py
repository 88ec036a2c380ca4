"""Order-preserving parallel map over worker processes.

Work items are (function, args-tuple) pairs executed either inline (jobs <= 1)
or on a process pool.  Results come back in submission order, so callers see
identical output regardless of scheduling; all randomness must flow through
explicit sub-seeds carried in the arguments.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def _call(fn, args):
    return fn(*args)


def parallel_map(fn, argtuples, jobs=1):
    argtuples = list(argtuples)
    if jobs is None:
        jobs = default_jobs()
    jobs = max(1, min(int(jobs), len(argtuples) or 1))
    if jobs == 1:
        return [fn(*args) for args in argtuples]
    chunk = max(1, len(argtuples) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, [fn] * len(argtuples), argtuples,
                             chunksize=chunk))


def default_jobs():
    env = os.environ.get("TWCLUST_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
