"""Generate a complete model-view-update application from a diagram.

The output is an Elm module built around two sum types: ``Msg`` has one
constructor per distinct transition name (plus the built-in ``Tick``, which
carries the time and key state), and ``State`` has one constructor per
state.  The ``update`` function cases on the message and then on the current
state, falling through to "keep the current state" for messages that do not
apply; ``view`` renders one page per state with a title and one button per
outgoing transition, buttons composed from simple shapes so they are easy to
restyle.

Generation goes through :class:`UpdateIR`, a message -> source -> target
mapping, so the semantics of the emitted update can be tested against
:func:`sdc.model.step` without compiling any Elm.  All output is
deterministic: constructors appear in diagram / first-occurrence order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import CodegenError
from .model import StateDiagram, outgoing

#: Built-in message carrying the clock; reserved, cannot name a transition
#: or state (it would collide with the generated constructor).
TICK = "Tick"

TITLE_Y = 140.0
BUTTON_TOP_Y = 90.0
BUTTON_PITCH = 50.0


@dataclass(frozen=True)
class UpdateIR:
    """Where each message sends each state; absent pairs stay put."""

    moves: Mapping[str, Mapping[str, str]]

    def apply(self, source: str, msg: str) -> str:
        return self.moves.get(msg, {}).get(source, source)


@dataclass(frozen=True)
class ButtonPlacement:
    label: str
    x: float
    y: float


@dataclass(frozen=True)
class GeneratedApp:
    msg_type_src: str
    state_type_src: str
    update_src: str
    view_src: str
    full_module_src: str
    catalog: tuple[str, ...]
    ir: UpdateIR


def build_ir(diagram: StateDiagram) -> tuple[tuple[str, ...], UpdateIR]:
    """Message catalog and update IR for a valid diagram.

    The catalog lists ``Tick`` first, then each distinct transition name in
    first-occurrence diagram order.  The IR has an entry per transition:
    ``moves[name][source] == target``.
    """
    if diagram.has_state(TICK) or TICK in diagram.transition_names():
        raise CodegenError(f"{TICK!r} is reserved for the built-in clock message")
    catalog = [TICK]
    moves: dict[str, dict[str, str]] = {}
    for t in diagram.transitions:
        if t.name not in moves:
            catalog.append(t.name)
            moves[t.name] = {}
        moves[t.name][t.source] = t.target
    return tuple(catalog), UpdateIR(moves)


def render_button_layout(page_state: str,
                         labels: Sequence[str]) -> list[ButtonPlacement]:
    """Button placements for one page: a centered vertical stack.

    The stack starts below the title and descends with a fixed pitch; the
    layout depends only on the label list, so every page places its buttons
    the same way.
    """
    del page_state
    return [
        ButtonPlacement(label, 0.0, BUTTON_TOP_Y - i * BUTTON_PITCH)
        for i, label in enumerate(labels)
    ]


def _num(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(value)


def _elm_string(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def _sum_type(head: str, constructors: Sequence[str]) -> str:
    # type Foo = A
    #          | B     (pipes aligned under the '=')
    pipe_indent = " " * (len(head) + 1)
    lines = [f"{head} = {constructors[0]}"]
    lines.extend(f"{pipe_indent}| {c}" for c in constructors[1:])
    return "\n".join(lines) + "\n"


def _update_src(diagram: StateDiagram, catalog: Sequence[str], ir: UpdateIR) -> str:
    lines = [
        "update msg model =",
        "    case msg of",
        f"        {TICK} t _ ->",
        "            { model | time = t }",
    ]
    state_order = diagram.state_names()
    for msg in catalog[1:]:
        arms = ir.moves[msg]
        lines.append(f"        {msg} ->")
        lines.append("            case model.state of")
        for source in state_order:
            if source in arms:
                lines.append(f"                {source} ->")
                lines.append(f"                    {{ model | state = {arms[source]} }}")
        lines.append("                otherwise ->")
        lines.append("                    model")
    return "\n".join(lines) + "\n"


def _view_src(diagram: StateDiagram) -> str:
    lines = [
        "view model =",
        "    collage 512 380 (page model)",
        "",
        "page model =",
        "    case model.state of",
    ]
    for state in diagram.states:
        labels = [t.name for t in outgoing(diagram, state.name)]
        lines.append(f"        {state.name} ->")
        lines.append(f"            [ text {_elm_string(state.name)} |> size 24 "
                     f"|> centered |> filled black |> move ( 0, {_num(TITLE_Y)} )")
        for placement in render_button_layout(state.name, labels):
            lines.append(
                f"            , transitionButton {_elm_string(placement.label)} "
                f"{placement.label} ( {_num(placement.x)}, {_num(placement.y)} )")
        lines.append("            ]")
    lines += [
        "",
        "transitionButton label msg ( x, y ) =",
        "    group",
        "        [ roundedRect 150 34 6 |> filled lightBlue",
        "        , text label |> size 12 |> centered |> filled black |> move ( 0, -4 )",
        "        ]",
        "        |> move ( x, y )",
        "        |> notifyTap msg",
    ]
    return "\n".join(lines) + "\n"


def gen_app(diagram: StateDiagram) -> GeneratedApp:
    """Emit the application sources for a valid diagram.

    Output is byte-identical across runs for equal input; the full module
    contains the message type, state type, update, and view sections
    verbatim.
    """
    catalog, ir = build_ir(diagram)

    msg_constructors = [f"{TICK} Float GetKeyState"] + list(catalog[1:])
    msg_type_src = _sum_type("type Msg", msg_constructors)
    state_type_src = _sum_type("type State", list(diagram.state_names()))
    update_src = _update_src(diagram, catalog, ir)
    view_src = _view_src(diagram)

    start = diagram.start
    title = diagram.title or "StateDiagram"
    full_module_src = "\n".join([
        "module Main exposing (main)",
        "",
        "import GraphicSVG exposing (..)",
        "import GraphicSVG.App exposing (..)",
        "",
        "",
        msg_type_src.rstrip("\n"),
        "",
        "",
        state_type_src.rstrip("\n"),
        "",
        "",
        "type alias Model =",
        "    { state : State",
        "    , time : Float",
        "    }",
        "",
        "",
        "init =",
        f"    {{ state = {start}",
        "    , time = 0",
        "    }",
        "",
        "",
        update_src.rstrip("\n"),
        "",
        "",
        view_src.rstrip("\n"),
        "",
        "",
        "main =",
        f"    gameApp {TICK}",
        "        { model = init",
        f"        , title = {_elm_string(title)}",
        "        , update = update",
        "        , view = view",
        "        }",
        "",
    ])
    return GeneratedApp(
        msg_type_src=msg_type_src,
        state_type_src=state_type_src,
        update_src=update_src,
        view_src=view_src,
        full_module_src=full_module_src,
        catalog=catalog,
        ir=ir,
    )
