"""Monte-Carlo kernel façade: picks the compiled backend, falls back to pure.

The compiled extension (``sdc._kernel``) is preferred when importable; the
pure-Python twin (``sdc._purekernel``) is the fallback.  Both produce
bit-identical output, so which one runs is invisible except for speed.
``SDC_KERNEL=pure`` (or ``compiled``) overrides the automatic choice.

Work may be split across threads.  Because every sample draws from an RNG
stream derived from ``(seed, sample index)`` alone, the result is identical
for any chunking, so ``SDC_THREADS`` only caps how many threads are used
(0 or unset means automatic).  The compiled kernel releases the GIL, making
the split an actual speedup there.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _purekernel
from .errors import CardinalityError
from .rng import MASK64

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

if os.environ.get("SDC_KERNEL") == "pure":
    _active = _purekernel
elif os.environ.get("SDC_KERNEL") == "compiled":
    if _compiled is None:
        raise ImportError("SDC_KERNEL=compiled but sdc._kernel is not built")
    _active = _compiled
else:
    _active = _compiled if _compiled is not None else _purekernel

_MIN_SAMPLES_PER_THREAD = 20_000


def backend() -> str:
    """Name of the active backend: ``"compiled"`` or ``"pure"``."""
    return "compiled" if _active is not _purekernel else "pure"


def has_compiled() -> bool:
    return _compiled is not None


def resolve_threads(threads: int | None = None) -> int:
    """Thread count to use: explicit argument, else SDC_THREADS, else auto."""
    if threads is None:
        raw = os.environ.get("SDC_THREADS", "0")
        try:
            threads = int(raw)
        except ValueError:
            threads = 0
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def _check_bounds(n: int, m: int, n_samples: int) -> None:
    if n < 1:
        raise ValueError(f"need at least one state, got {n}")
    if n_samples < 0:
        raise ValueError(f"negative sample count {n_samples}")
    universe = n * (n - 1)
    if not 0 <= m <= universe:
        raise CardinalityError(
            f"{m} transitions requested but {n} states allow at most {universe}")


def _run_chunked(fn, n: int, m: int, n_samples: int, seed: int,
                 threads: int | None, assemble):
    seed &= MASK64
    threads = min(resolve_threads(threads),
                  max(1, n_samples // _MIN_SAMPLES_PER_THREAD))
    if threads <= 1:
        return fn(n, m, n_samples, seed, 0)
    bounds = np.linspace(0, n_samples, threads + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(
            lambda se: fn(n, m, int(se[1] - se[0]), seed, int(se[0])),
            zip(bounds[:-1], bounds[1:]),
        ))
    return assemble(parts)


def reach_counts(n: int, m: int, n_samples: int, seed: int,
                 threads: int | None = None) -> np.ndarray:
    """Per-sample reachable-state counts for ``n_samples`` random diagrams."""
    _check_bounds(n, m, n_samples)
    return _run_chunked(_active.reach_counts, n, m, n_samples, seed, threads,
                        np.concatenate)


def reach_histogram(n: int, m: int, n_samples: int, seed: int,
                    threads: int | None = None) -> np.ndarray:
    """Histogram of reachable-state counts: index ``k`` holds ``#{reach == k}``."""
    counts = reach_counts(n, m, n_samples, seed, threads)
    return np.bincount(counts, minlength=n + 1)


def edge_subsets(n: int, m: int, n_samples: int, seed: int,
                 threads: int | None = None) -> np.ndarray:
    """Sampled edge subsets, one sorted row of universe ids per sample."""
    _check_bounds(n, m, n_samples)
    return _run_chunked(_active.edge_subsets, n, m, n_samples, seed, threads,
                        np.vstack)
