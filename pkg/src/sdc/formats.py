"""Reading and writing diagrams: canonical JSON documents and a line DSL.

JSON schema (exact): top-level keys ``title`` (string), ``start`` (string),
``states`` (array of ``{"name", "kind", "x"?, "y"?}`` with kind one of
``"concrete" | "abstract" | "unclassified"``) and ``transitions`` (array of
``{"name", "from", "to"}``).  Unknown keys are rejected.  ``kind`` defaults
to ``"unclassified"`` on input; ``x``/``y`` must come as a pair.

DSL grammar, one declaration per line::

    title <free text>
    state <Identifier> [@start] [#concrete|#abstract]
    <Identifier>: <From> -> <To>

Blank lines and lines starting with ``//`` are ignored.

Both parsers reject documents whose diagram breaks a model invariant
(:class:`~sdc.errors.DiagramValidationError`), so every diagram obtained from
this module is safe to hand to the rest of the toolchain.  ``emit_json`` is
the exact inverse of ``parse_json`` and emits deterministic bytes (fixed key
order, two-space indent, ``\\n`` line endings, trailing newline).
"""

from __future__ import annotations

import json

from .errors import DiagramSyntaxError, DiagramValidationError, SchemaError
from .model import StateDiagram, StateKind, StateNode, Transition, validate

_STATE_KEYS = {"name", "kind", "x", "y"}
_TRANSITION_KEYS = {"name", "from", "to"}
_TOP_KEYS = {"title", "start", "states", "transitions"}


def _check_validates(diagram: StateDiagram) -> StateDiagram:
    report = validate(diagram)
    if not report.ok:
        raise DiagramValidationError(report)
    return diagram


def _schema_str(obj, what):
    if not isinstance(obj, str):
        raise SchemaError(f"{what} must be a string, got {type(obj).__name__}")
    return obj


def parse_json_unchecked(text: bytes | str) -> StateDiagram:
    """Parse a JSON document into a candidate diagram without validating it.

    Used by the CLI ``validate`` command, which wants the full violation
    report rather than the first failure.  Everyone else should call
    :func:`parse_json`.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DiagramSyntaxError(f"not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    if not isinstance(doc, dict):
        raise SchemaError("top-level value must be an object")
    missing = _TOP_KEYS - doc.keys()
    if missing:
        raise SchemaError(f"missing required fields: {', '.join(sorted(missing))}")
    unknown = doc.keys() - _TOP_KEYS
    if unknown:
        raise SchemaError(f"unknown fields: {', '.join(sorted(unknown))}")

    title = _schema_str(doc["title"], "title")
    start = _schema_str(doc["start"], "start")

    if not isinstance(doc["states"], list):
        raise SchemaError("states must be an array")
    states = []
    for entry in doc["states"]:
        if not isinstance(entry, dict):
            raise SchemaError("each state must be an object")
        unknown = entry.keys() - _STATE_KEYS
        if unknown:
            raise SchemaError(f"unknown state fields: {', '.join(sorted(unknown))}")
        if "name" not in entry:
            raise SchemaError("state missing name")
        name = _schema_str(entry["name"], "state name")
        kind_text = entry.get("kind", "unclassified")
        try:
            kind = StateKind(_schema_str(kind_text, "state kind"))
        except ValueError:
            raise SchemaError(f"unknown state kind {kind_text!r}") from None
        position = None
        if ("x" in entry) != ("y" in entry):
            raise SchemaError(f"state {name!r} must have both x and y or neither")
        if "x" in entry:
            if not all(isinstance(entry[k], (int, float)) and not isinstance(entry[k], bool)
                       for k in ("x", "y")):
                raise SchemaError(f"state {name!r} position must be numeric")
            position = (float(entry["x"]), float(entry["y"]))
        states.append(StateNode(name, kind, position))

    if not isinstance(doc["transitions"], list):
        raise SchemaError("transitions must be an array")
    transitions = []
    for entry in doc["transitions"]:
        if not isinstance(entry, dict):
            raise SchemaError("each transition must be an object")
        unknown = entry.keys() - _TRANSITION_KEYS
        if unknown:
            raise SchemaError(f"unknown transition fields: {', '.join(sorted(unknown))}")
        missing = _TRANSITION_KEYS - entry.keys()
        if missing:
            raise SchemaError(f"transition missing fields: {', '.join(sorted(missing))}")
        transitions.append(Transition(
            _schema_str(entry["name"], "transition name"),
            _schema_str(entry["from"], "transition from"),
            _schema_str(entry["to"], "transition to"),
        ))

    return StateDiagram(title, tuple(states), tuple(transitions), start)


def parse_json(text: bytes | str) -> StateDiagram:
    """Parse and validate a canonical JSON diagram document."""
    return _check_validates(parse_json_unchecked(text))


def emit_json(diagram: StateDiagram) -> bytes:
    """Serialize a valid diagram to deterministic JSON bytes."""
    states = []
    for s in diagram.states:
        entry = {"name": s.name, "kind": s.kind.value}
        if s.position is not None:
            entry["x"], entry["y"] = s.position
        states.append(entry)
    doc = {
        "title": diagram.title,
        "start": diagram.start,
        "states": states,
        "transitions": [
            {"name": t.name, "from": t.source, "to": t.target}
            for t in diagram.transitions
        ],
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


_KIND_FLAGS = {"#concrete": StateKind.CONCRETE, "#abstract": StateKind.ABSTRACT}


def parse_dsl_unchecked(text: str) -> StateDiagram:
    """Parse DSL text into a candidate diagram without validating it."""
    title = ""
    saw_title = False
    start = None
    states: list[StateNode] = []
    transitions: list[Transition] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue

        if line == "title" or line.startswith("title "):
            if saw_title:
                raise DiagramSyntaxError("duplicate title declaration", line=lineno)
            saw_title = True
            title = line[len("title"):].strip()
            continue

        if line == "state" or line.startswith("state "):
            tokens = line.split()[1:]
            if not tokens:
                raise DiagramSyntaxError("state declaration without a name", line=lineno)
            name, *flags = tokens
            kind = StateKind.UNCLASSIFIED
            is_start = False
            for flag in flags:
                if flag == "@start":
                    if is_start:
                        raise DiagramSyntaxError("repeated @start flag", line=lineno)
                    is_start = True
                elif flag in _KIND_FLAGS:
                    if kind is not StateKind.UNCLASSIFIED:
                        raise DiagramSyntaxError("repeated kind flag", line=lineno)
                    kind = _KIND_FLAGS[flag]
                else:
                    raise DiagramSyntaxError(f"unknown flag {flag!r}", line=lineno)
            if is_start:
                if start is not None:
                    raise DiagramSyntaxError("more than one @start state", line=lineno)
                start = name
            states.append(StateNode(name, kind))
            continue

        if ":" in line:
            name, _, rest = line.partition(":")
            endpoints = rest.split("->")
            if len(endpoints) != 2:
                raise DiagramSyntaxError(
                    "transition must be '<Name>: <From> -> <To>'", line=lineno)
            source, target = endpoints[0].strip(), endpoints[1].strip()
            if not name.strip() or not source or not target:
                raise DiagramSyntaxError(
                    "transition must be '<Name>: <From> -> <To>'", line=lineno)
            if " " in source or " " in target:
                raise DiagramSyntaxError("endpoint names cannot contain spaces", line=lineno)
            transitions.append(Transition(name.strip(), source, target))
            continue

        raise DiagramSyntaxError(f"cannot parse declaration {line!r}", line=lineno)

    return StateDiagram(title, tuple(states), tuple(transitions), start or "")


def parse_dsl(text: str) -> StateDiagram:
    """Parse and validate DSL text."""
    return _check_validates(parse_dsl_unchecked(text))
