"""Uniform random diagrams and the empirical reachability distribution.

The random model: for ``n`` states there are ``n*(n-1)`` possible directed
edges between distinct states (self-loops are excluded — they can never
change reachability but would consume edge budget).  A diagram with ``m``
transitions is an ``m``-subset of that universe chosen uniformly, i.e. every
subset of cardinality ``m`` is equally likely.  States are named ``S1..Sn``
with ``S1`` the start state; by vertex symmetry the reachability
distribution does not depend on which state starts.  Transitions are named
``T1..Tm`` in canonical (enumeration) edge order.

``reachability_pmf`` estimates the distribution of the reachable-state count
by simulating many such diagrams.  Sample ``i`` uses RNG stream
``(seed, i)``, so the estimate is reproducible and independent of
parallelism; the heavy loop runs in :mod:`sdc.kernel`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .errors import CardinalityError
from .model import StateDiagram, StateNode, Transition
from .rng import SplitMix64


@dataclass(frozen=True)
class RandomModelConfig:
    n_states: int
    n_transitions: int
    n_samples: int
    seed: int

    def __post_init__(self):
        if self.n_states < 1:
            raise ValueError(f"need at least one state, got {self.n_states}")
        universe = self.n_states * (self.n_states - 1)
        if not 0 <= self.n_transitions <= universe:
            raise CardinalityError(
                f"{self.n_transitions} transitions requested but "
                f"{self.n_states} states allow at most {universe}")
        if self.n_samples < 1:
            raise ValueError(f"need at least one sample, got {self.n_samples}")


@dataclass(frozen=True)
class ReachabilityPMF:
    """Empirical distribution of the reachable-state count.

    ``counts[k]`` is the number of simulated diagrams with exactly ``k``
    reachable states; ``counts[0]`` is always zero (the start state is
    always reachable) and the counts sum to ``config.n_samples``.
    """

    config: RandomModelConfig
    counts: tuple[int, ...]

    def probability(self, k: int) -> float:
        if 0 <= k < len(self.counts):
            return self.counts[k] / self.config.n_samples
        return 0.0

    def mean(self) -> float:
        total = sum(k * c for k, c in enumerate(self.counts))
        return total / self.config.n_samples


def decode_edge(n: int, edge_id: int) -> tuple[int, int]:
    """Universe id -> 0-based (source, target), diagonal skipped."""
    source, offset = divmod(edge_id, n - 1)
    return source, offset + 1 if offset >= source else offset


def diagram_from_edges(n: int, edge_ids, title: str = "Random") -> StateDiagram:
    """Diagram with states ``S1..Sn`` and one transition per universe id.

    Transitions are named ``T1..Tm`` in the order the ids are given; pass
    sorted ids for the canonical naming.
    """
    transitions = []
    for i, edge_id in enumerate(edge_ids):
        source, target = decode_edge(n, edge_id)
        transitions.append(Transition(f"T{i + 1}", f"S{source + 1}", f"S{target + 1}"))
    return StateDiagram(
        title=title,
        states=tuple(StateNode(f"S{i + 1}") for i in range(n)),
        transitions=tuple(transitions),
        start="S1",
    )


def random_diagram(n: int, m: int, rng: SplitMix64) -> StateDiagram:
    """Uniformly random valid diagram with ``n`` states and ``m`` transitions.

    Partial Fisher-Yates over the enumerated edge universe: exactly ``m``
    draws from ``rng``, every ``m``-subset equally likely.
    """
    universe = n * (n - 1)
    if n < 1:
        raise ValueError(f"need at least one state, got {n}")
    if not 0 <= m <= universe:
        raise CardinalityError(
            f"{m} transitions requested but {n} states allow at most {universe}")
    perm = list(range(universe))
    for t in range(m):
        j = t + rng.below(universe - t)
        perm[t], perm[j] = perm[j], perm[t]
    return diagram_from_edges(n, sorted(perm[:m]))


def reachability_pmf(config: RandomModelConfig,
                     threads: int | None = None) -> ReachabilityPMF:
    """Simulate the reachable-count distribution for ``config``."""
    histogram = kernel.reach_histogram(
        config.n_states, config.n_transitions, config.n_samples,
        config.seed, threads=threads)
    return ReachabilityPMF(config, tuple(int(c) for c in histogram))


def cdf(pmf: ReachabilityPMF, k: int) -> float:
    """Empirical P(reachable <= k); 0 below 1 and exactly 1 at ``n_states``."""
    if k < 1:
        return 0.0
    if k >= pmf.config.n_states:
        return 1.0
    return sum(pmf.counts[1:k + 1]) / pmf.config.n_samples
