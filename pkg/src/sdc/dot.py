"""Graphviz DOT export for visual inspection of a diagram."""

from __future__ import annotations

from .model import StateDiagram


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(diagram: StateDiagram) -> str:
    """Render a valid diagram as a DOT digraph.

    States are circles, the start state is filled green, and every
    transition becomes a labeled directed edge.  Nodes and edges appear in
    diagram order; stored layout hints are ignored (graphviz places nodes
    better than raw editor coordinates).
    """
    lines = ["digraph state_diagram {"]
    if diagram.title:
        lines.append(f"  label={_quote(diagram.title)};")
    lines.append("  node [shape=circle];")
    for state in diagram.states:
        attrs = ' [style=filled, fillcolor=green]' if state.name == diagram.start else ""
        lines.append(f"  {_quote(state.name)}{attrs};")
    for t in diagram.transitions:
        lines.append(f"  {_quote(t.source)} -> {_quote(t.target)} "
                     f"[label={_quote(t.name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
