"""Reachability and summary statistics for a diagram.

Reachability treats the diagram as a plain digraph: transition names and
parallel edges are irrelevant, only which states can be walked to from the
start state.  The start state itself always counts, so reachability is at
least one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import StateDiagram, StateKind


@dataclass(frozen=True)
class DiagramStats:
    n_states: int
    n_transitions: int
    n_reachable: int
    n_concrete: int
    n_abstract: int
    n_unclassified: int
    dead_ends: tuple[str, ...]  # zero out-degree states, in diagram order


def reachable_set(diagram: StateDiagram) -> frozenset[str]:
    """States reachable from the start state (including it) as a name set.

    Assumes a valid diagram.
    """
    successors: dict[str, list[str]] = {s.name: [] for s in diagram.states}
    for t in diagram.transitions:
        successors[t.source].append(t.target)

    reached = {diagram.start}
    pending = [diagram.start]
    while pending:
        current = pending.pop()
        for nxt in successors[current]:
            if nxt not in reached:
                reached.add(nxt)
                pending.append(nxt)
    return frozenset(reached)


def stats(diagram: StateDiagram) -> DiagramStats:
    """Summary counts for a valid diagram."""
    kinds = [s.kind for s in diagram.states]
    sources = {t.source for t in diagram.transitions}
    return DiagramStats(
        n_states=len(diagram.states),
        n_transitions=len(diagram.transitions),
        n_reachable=len(reachable_set(diagram)),
        n_concrete=kinds.count(StateKind.CONCRETE),
        n_abstract=kinds.count(StateKind.ABSTRACT),
        n_unclassified=kinds.count(StateKind.UNCLASSIFIED),
        dead_ends=tuple(s.name for s in diagram.states if s.name not in sources),
    )
