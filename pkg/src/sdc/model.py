"""State diagram data model, validation rules, and single-step semantics.

A diagram is a directed graph of named states and named transitions with one
designated start state and no final states.  All types are immutable values;
every operation here is a pure function, so diagrams can be shared freely
between threads.

Naming rules (enforced by :func:`validate`, not by the constructors, so that
candidate diagrams from any source can be inspected):

* names are non-empty, ASCII alphanumeric, and start with an uppercase letter;
* state names are pairwise distinct;
* no transition may share a name with a state;
* two transitions leaving the same state may not share a name (transitions
  leaving *different* states may);
* no two transitions may be exact duplicates of each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import UnknownMessageError, UnknownStateError

_IDENTIFIER_RE = re.compile(r"[A-Z][A-Za-z0-9]*\Z")


def valid_identifier(text: str) -> bool:
    """True if ``text`` is a legal state or transition name."""
    return bool(_IDENTIFIER_RE.match(text))


class StateKind(Enum):
    """Author/researcher annotation; does not affect semantics."""

    CONCRETE = "concrete"
    ABSTRACT = "abstract"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class StateNode:
    name: str
    kind: StateKind = StateKind.UNCLASSIFIED
    position: tuple[float, float] | None = None


@dataclass(frozen=True)
class Transition:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class StateDiagram:
    title: str
    states: tuple[StateNode, ...]
    transitions: tuple[Transition, ...]
    start: str

    def __post_init__(self):
        # Accept lists for convenience; store tuples so values stay immutable.
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", tuple(self.transitions))

    def state_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.states)

    def transition_names(self) -> frozenset[str]:
        return frozenset(t.name for t in self.transitions)

    def has_state(self, name: str) -> bool:
        return any(s.name == name for s in self.states)


class ViolationCode(Enum):
    # Declaration order is the report's sort order; values are the stable
    # names used in CLI diagnostics.
    BAD_IDENTIFIER = "BadIdentifier"
    DUPLICATE_STATE_NAME = "DuplicateStateName"
    STATE_TRANSITION_NAME_CLASH = "StateTransitionNameClash"
    DUPLICATE_OUTGOING_TRANSITION_NAME = "DuplicateOutgoingTransitionName"
    MISSING_START = "MissingStart"
    DANGLING_ENDPOINT = "DanglingEndpoint"
    DUPLICATE_EDGE_TRIPLE = "DuplicateEdgeTriple"


_CODE_ORDER = {code: i for i, code in enumerate(ViolationCode)}


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    subject: str
    detail: str

    def __str__(self):
        return f"{self.code.value}: {self.subject} ({self.detail})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> list[ViolationCode]:
        return [v.code for v in self.violations]


def validate(diagram: StateDiagram) -> ValidationReport:
    """Check every model invariant and report one violation per break.

    Accepts arbitrary candidate diagrams (nothing is assumed about the
    input).  The report is deterministic: violations are sorted by
    (code, subject, detail) with codes in declaration order.

    ``DuplicateOutgoingTransitionName`` and ``DuplicateEdgeTriple`` are
    disjoint by construction: an exact duplicate of a transition is reported
    only as the latter, a same-named transition to a *different* target only
    as the former.  Together they cover the per-source name-uniqueness rule.
    """
    found: set[Violation] = set()

    state_names = [s.name for s in diagram.states]
    state_set = set(state_names)

    for name in state_names:
        if not valid_identifier(name):
            found.add(Violation(ViolationCode.BAD_IDENTIFIER, name, "state name"))
    for t in diagram.transitions:
        if not valid_identifier(t.name):
            found.add(Violation(
                ViolationCode.BAD_IDENTIFIER, t.name,
                f"transition name ({t.source} -> {t.target})"))

    seen: set[str] = set()
    for name in state_names:
        if name in seen:
            found.add(Violation(
                ViolationCode.DUPLICATE_STATE_NAME, name,
                f"declared {state_names.count(name)} times"))
        seen.add(name)

    for name in sorted({t.name for t in diagram.transitions} & state_set):
        found.add(Violation(
            ViolationCode.STATE_TRANSITION_NAME_CLASH, name,
            "used as both a state name and a transition name"))

    triples: dict[tuple[str, str, str], int] = {}
    for t in diagram.transitions:
        triples[(t.name, t.source, t.target)] = triples.get((t.name, t.source, t.target), 0) + 1
    for (name, source, target), count in triples.items():
        if count > 1:
            found.add(Violation(
                ViolationCode.DUPLICATE_EDGE_TRIPLE, f"{name}:{source}->{target}",
                f"declared {count} times"))

    out_targets: dict[tuple[str, str], set[str]] = {}
    for t in diagram.transitions:
        out_targets.setdefault((t.source, t.name), set()).add(t.target)
    for (source, name), targets in out_targets.items():
        if len(targets) > 1:
            found.add(Violation(
                ViolationCode.DUPLICATE_OUTGOING_TRANSITION_NAME, f"{source}:{name}",
                f"leaves {source} towards {len(targets)} different targets"))

    if diagram.start not in state_set:
        found.add(Violation(
            ViolationCode.MISSING_START, diagram.start,
            "start does not name an existing state"))

    for t in diagram.transitions:
        if t.source not in state_set:
            found.add(Violation(
                ViolationCode.DANGLING_ENDPOINT, t.name,
                f"source {t.source} is not a state"))
        if t.target not in state_set:
            found.add(Violation(
                ViolationCode.DANGLING_ENDPOINT, t.name,
                f"target {t.target} is not a state"))

    ordered = sorted(found, key=lambda v: (_CODE_ORDER[v.code], v.subject, v.detail))
    return ValidationReport(tuple(ordered))


def step(diagram: StateDiagram, current: str, msg: str) -> str:
    """Apply one message: follow the matching transition or stay put.

    This is the semantics the generated ``update`` function embodies: if the
    diagram has a transition named ``msg`` leaving ``current``, the result is
    its target; otherwise the current state is returned unchanged.
    """
    if not diagram.has_state(current):
        raise UnknownStateError(f"no state named {current!r}")
    if msg not in diagram.transition_names():
        raise UnknownMessageError(f"no transition named {msg!r}")
    for t in diagram.transitions:
        if t.source == current and t.name == msg:
            return t.target
    return current


def outgoing(diagram: StateDiagram, state: str) -> list[Transition]:
    """Transitions leaving ``state``, in diagram order."""
    if not diagram.has_state(state):
        raise UnknownStateError(f"no state named {state!r}")
    return [t for t in diagram.transitions if t.source == state]
