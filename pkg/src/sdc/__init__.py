"""State diagram toolchain.

Model and validate state diagrams, analyze their reachability, generate a
complete model-view-update application from them, and test observed diagrams
against the uniform random digraph model.
"""

from .adtest import AdTestResult, Observation, ad_statistic, ad_test, pit_transform
from .analysis import DiagramStats, reachable_set, stats
from .codegen import GeneratedApp, UpdateIR, build_ir, gen_app, render_button_layout
from .dot import to_dot
from .formats import emit_json, parse_dsl, parse_json
from .model import (
    StateDiagram, StateKind, StateNode, Transition, ValidationReport,
    Violation, ViolationCode, outgoing, step, validate,
)
from .montecarlo import (
    RandomModelConfig, ReachabilityPMF, cdf, random_diagram, reachability_pmf,
)

__version__ = "0.1.0"

__all__ = [
    "AdTestResult", "DiagramStats", "GeneratedApp", "Observation",
    "RandomModelConfig", "ReachabilityPMF", "StateDiagram", "StateKind",
    "StateNode", "Transition", "UpdateIR", "ValidationReport", "Violation",
    "ViolationCode", "ad_statistic", "ad_test", "build_ir", "cdf",
    "emit_json", "gen_app", "outgoing", "parse_dsl", "parse_json",
    "pit_transform", "random_diagram", "reachability_pmf", "reachable_set",
    "render_button_layout", "stats", "step", "to_dot", "validate",
]
