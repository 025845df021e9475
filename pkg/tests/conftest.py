import random
from pathlib import Path

import pytest

from sdc.model import StateDiagram, StateKind, StateNode, Transition
from sdc.formats import parse_dsl

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Transition-name pool is small on purpose: reuse of the same name from
# different source states must show up in generated diagrams.  "Tick" is
# excluded (reserved by codegen).
TRANSITION_POOL = (
    "Go", "Run", "Jump", "Open", "Close", "Enter",
    "Leave", "Push", "Pull", "Climb", "Swim", "Fly",
)


def random_valid_diagram(rng: random.Random, max_states: int = 8,
                         max_transitions: int = 20) -> StateDiagram:
    """Seeded generator of valid diagrams (self-loops and name reuse included)."""
    n = rng.randint(1, max_states)
    states = []
    for i in range(n):
        kind = rng.choice(list(StateKind))
        position = None
        if rng.random() < 0.3:
            position = (round(rng.uniform(-250, 250), 1),
                        round(rng.uniform(-250, 250), 1))
        states.append(StateNode(f"S{i + 1}", kind, position))

    used_names: dict[str, set[str]] = {s.name: set() for s in states}
    transitions = []
    target_m = rng.randint(0, max_transitions)
    for _ in range(target_m * 4):
        if len(transitions) >= target_m:
            break
        source = rng.choice(states).name
        target = rng.choice(states).name
        name = rng.choice(TRANSITION_POOL)
        if name in used_names[source]:
            continue
        used_names[source].add(name)
        transitions.append(Transition(name, source, target))

    return StateDiagram(
        title=f"Random {rng.randint(0, 999)}",
        states=tuple(states),
        transitions=tuple(transitions),
        start=rng.choice(states).name,
    )


@pytest.fixture(scope="session")
def school() -> StateDiagram:
    return parse_dsl((FIXTURES / "school.sd").read_text())


@pytest.fixture(scope="session")
def dragon() -> StateDiagram:
    return parse_dsl((FIXTURES / "dragon.sd").read_text())


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
