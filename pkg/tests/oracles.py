"""Independent reference implementations used to check the library.

These deliberately take a different route than the code under test:
reachability via boolean-matrix powering instead of graph search, and exact
subset enumeration over ordered vertex pairs instead of sampling.
"""

from itertools import combinations

import numpy as np

from sdc.model import StateDiagram


def _closure_row(n: int, edges, start: int) -> frozenset[int]:
    reach = np.eye(n, dtype=np.int64)
    for source, target in edges:
        reach[source, target] = 1
    # Squaring doubles the covered path length; log2(n)+1 squarings suffice.
    for _ in range(max(1, n.bit_length())):
        reach = ((reach @ reach) > 0).astype(np.int64)
    return frozenset(np.flatnonzero(reach[start]).tolist())


def matrix_reachable(diagram: StateDiagram) -> frozenset[str]:
    """Reachable state names via transitive closure by matrix powering."""
    names = [s.name for s in diagram.states]
    index = {name: i for i, name in enumerate(names)}
    edges = [(index[t.source], index[t.target]) for t in diagram.transitions]
    reached = _closure_row(len(names), edges, index[diagram.start])
    return frozenset(names[i] for i in reached)


def exact_reach_distribution(n: int, m: int) -> dict[int, float]:
    """Exact reachable-count distribution by enumerating every m-subset of
    the loop-free ordered vertex pairs, start fixed at vertex 0."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    counts: dict[int, int] = {}
    total = 0
    for subset in combinations(pairs, m):
        k = len(_closure_row(n, subset, 0))
        counts[k] = counts.get(k, 0) + 1
        total += 1
    return {k: c / total for k, c in counts.items()}
