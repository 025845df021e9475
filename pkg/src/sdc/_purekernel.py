"""Pure-Python Monte-Carlo kernel: the fallback for ``sdc._kernel``.

Both kernels implement the same contract and must return bit-identical
arrays: sample ``i`` draws its randomness from SplitMix64 stream
``(seed, i)``, picks a uniform ``m``-subset of the ``n*(n-1)`` loop-free
directed edges by partial Fisher-Yates over the enumerated universe, and
(for reach counts) walks the subset from state 0.

Edge ``e`` of the universe decodes to source ``e // (n-1)`` and target
``e % (n-1)``, skipping the diagonal.
"""

from __future__ import annotations

import numpy as np

from .rng import SplitMix64

BACKEND = "pure"


def _sample_subset(rng: SplitMix64, perm: list[int], m: int) -> list[int]:
    universe = len(perm)
    for t in range(m):
        j = t + rng.below(universe - t)
        perm[t], perm[j] = perm[j], perm[t]
    return perm[:m]


def _reach_count(n: int, chosen: list[int], out_edges: list[list[int]]) -> int:
    for targets in out_edges:
        targets.clear()
    for e in chosen:
        src, off = divmod(e, n - 1)
        out_edges[src].append(off + 1 if off >= src else off)
    reached = bytearray(n)
    reached[0] = 1
    count = 1
    pending = [0]
    while pending:
        for nxt in out_edges[pending.pop()]:
            if not reached[nxt]:
                reached[nxt] = 1
                count += 1
                pending.append(nxt)
    return count


def reach_counts(n: int, m: int, n_samples: int, seed: int, start_index: int = 0):
    """Reachable-state count of each sampled diagram, as an int64 array."""
    out = np.empty(n_samples, dtype=np.int64)
    universe = list(range(n * (n - 1)))
    out_edges: list[list[int]] = [[] for _ in range(n)]
    for i in range(n_samples):
        rng = SplitMix64.stream(seed, start_index + i)
        chosen = _sample_subset(rng, universe[:], m) if m else []
        out[i] = _reach_count(n, chosen, out_edges) if n > 1 else 1
    return out


def edge_subsets(n: int, m: int, n_samples: int, seed: int, start_index: int = 0):
    """Sampled edge subsets as an (n_samples, m) int32 array, rows sorted."""
    out = np.empty((n_samples, m), dtype=np.int32)
    universe = list(range(n * (n - 1)))
    for i in range(n_samples):
        rng = SplitMix64.stream(seed, start_index + i)
        out[i, :] = sorted(_sample_subset(rng, universe[:], m))
    return out
