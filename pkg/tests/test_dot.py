import re

import pytest

from sdc.dot import to_dot
from sdc.formats import parse_dsl


def tokenize_dot(text: str) -> list[str]:
    """Minimal DOT tokenizer: quoted strings, identifiers, and punctuation.

    Raises on anything unexpected, which is all the syntax checking the
    emitted subset needs.
    """
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c == '"':
            j = i + 1
            while j < len(text):
                if text[j] == "\\":
                    j += 2
                elif text[j] == '"':
                    break
                else:
                    j += 1
            if j >= len(text):
                raise ValueError("unterminated string")
            tokens.append(text[i:j + 1])
            i = j + 1
        elif text[i:i + 2] == "->":
            tokens.append("->")
            i += 2
        elif c in "{}[];,=":
            tokens.append(c)
            i += 1
        else:
            match = re.match(r"[A-Za-z0-9_]+", text[i:])
            if not match:
                raise ValueError(f"unexpected character {c!r} at {i}")
            tokens.append(match.group())
            i += len(match.group())
    return tokens


def test_school_output(school):
    text = to_dot(school)
    tokens = tokenize_dot(text)
    assert tokens[0] == "digraph"
    assert tokens.count("->") == 7
    assert '"Outside"' in tokens
    assert text.count("shape=circle") == 1
    assert '"Outside" [style=filled, fillcolor=green];' in text
    assert '"Outside" -> "Hallway" [label="GoInside"];' in text


def test_every_state_and_edge_appears(school):
    text = to_dot(school)
    node_lines = [l for l in text.splitlines() if l.endswith(";") and "->" not in l
                  and l.strip().startswith('"')]
    edge_lines = [l for l in text.splitlines() if "->" in l]
    assert len(node_lines) == len(school.states)
    assert len(edge_lines) == len(school.transitions)


def test_single_state():
    d = parse_dsl("state Start @start")
    text = to_dot(d)
    assert "->" not in text
    assert '"Start" [style=filled, fillcolor=green];' in text


def test_self_loop():
    d = parse_dsl("state A @start\nStay: A -> A")
    assert '"A" -> "A" [label="Stay"];' in to_dot(d)


def test_title_escaping():
    d = parse_dsl('title He said "hi"\nstate A @start')
    text = to_dot(d)
    assert 'label="He said \\"hi\\""' in text
    tokenize_dot(text)  # must stay parseable


def test_deterministic(school):
    assert to_dot(school) == to_dot(school)


def test_balanced_braces(school, dragon):
    for d in (school, dragon):
        tokens = tokenize_dot(to_dot(d))
        assert tokens.count("{") == tokens.count("}") == 1
