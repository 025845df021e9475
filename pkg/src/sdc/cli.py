"""Command-line interface.

Subcommands: ``validate``, ``stats``, ``gen``, ``dot``, ``walk``,
``simulate``, ``ad-test``.  Results go to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 parse/validation failure, 2 usage error.  Every
randomized command takes an explicit ``--seed`` (default 0) and is fully
reproducible; ``SDC_THREADS`` caps simulation parallelism (0 = automatic).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .adtest import DEFAULT_OBSERVATIONS, Observation, ad_test
from .analysis import stats
from .codegen import gen_app
from .dot import to_dot
from .errors import (
    DiagramSyntaxError, DiagramValidationError, SchemaError, SdcError,
    UnknownMessageError, UnknownStateError,
)
from .formats import parse_dsl, parse_dsl_unchecked, parse_json, parse_json_unchecked
from .model import step, validate
from .montecarlo import RandomModelConfig, cdf, reachability_pmf
from .rng import mix64

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _load(path_text: str, input_format: str | None, checked: bool = True):
    path = Path(path_text)
    fmt = input_format
    if fmt is None:
        fmt = "sd" if path.suffix == ".sd" else "json"
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path_text}: {exc}") from exc
    if fmt == "sd":
        text = raw.decode("utf-8")
        return parse_dsl(text) if checked else parse_dsl_unchecked(text)
    return parse_json(raw) if checked else parse_json_unchecked(raw)


def _cmd_validate(args) -> int:
    diagram = _load(args.file, args.input_format, checked=False)
    report = validate(diagram)
    if report.ok:
        print("ok")
        return EXIT_OK
    for violation in report.violations:
        print(f"{args.file}: {violation}", file=sys.stderr)
    return EXIT_INVALID


def _cmd_stats(args) -> int:
    result = stats(_load(args.file, args.input_format))
    if args.format == "json":
        print(json.dumps({
            "n_states": result.n_states,
            "n_transitions": result.n_transitions,
            "n_reachable": result.n_reachable,
            "n_concrete": result.n_concrete,
            "n_abstract": result.n_abstract,
            "n_unclassified": result.n_unclassified,
            "dead_ends": list(result.dead_ends),
        }, indent=2))
    else:
        rows = [
            ("states", result.n_states),
            ("transitions", result.n_transitions),
            ("reachable", result.n_reachable),
            ("concrete", result.n_concrete),
            ("abstract", result.n_abstract),
            ("unclassified", result.n_unclassified),
            ("dead ends", ", ".join(result.dead_ends) or "-"),
        ]
        width = max(len(label) for label, _ in rows)
        for label, value in rows:
            print(f"{label:<{width}}  {value}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    app = gen_app(_load(args.file, args.input_format))
    if args.out:
        Path(args.out).write_text(app.full_module_src, encoding="utf-8")
    else:
        sys.stdout.write(app.full_module_src)
    return EXIT_OK


def _cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_load(args.file, args.input_format)))
    return EXIT_OK


def _cmd_walk(args) -> int:
    diagram = _load(args.file, args.input_format)
    messages = [m.strip() for m in args.msgs.split(",") if m.strip()]
    current = diagram.start
    print(f"start: {current}")
    for msg in messages:
        current = step(diagram, current, msg)
        print(f"{msg} -> {current}")
    return EXIT_OK


def _pmf_json(pmf) -> dict:
    return {
        "n_states": pmf.config.n_states,
        "n_transitions": pmf.config.n_transitions,
        "n_samples": pmf.config.n_samples,
        "seed": pmf.config.seed,
        "counts": list(pmf.counts[1:]),  # counts[k] for k = 1..n_states
    }


def _cmd_simulate(args) -> int:
    config = RandomModelConfig(args.states, args.transitions, args.samples, args.seed)
    pmf = reachability_pmf(config)
    if args.format == "json":
        print(json.dumps(_pmf_json(pmf), indent=2))
    else:
        peak = max(pmf.counts) or 1
        print(f"reachable states over {config.n_samples} samples "
              f"(n={config.n_states}, m={config.n_transitions}, seed={config.seed})")
        for k in range(1, config.n_states + 1):
            count = pmf.counts[k]
            bar = "#" * round(40 * count / peak)
            print(f"{k:>3}  {count:>8}  {count / config.n_samples:>7.4f}  {bar}")
    return EXIT_OK


def _parse_obs(texts) -> list[Observation]:
    observations = []
    for text in texts:
        parts = text.split(",")
        if len(parts) != 3:
            raise UsageError(f"--obs expects 'n,m,reach', got {text!r}")
        try:
            n, m, reach = (int(p) for p in parts)
            observations.append(Observation(n, m, reach))
        except ValueError as exc:
            raise UsageError(f"bad --obs {text!r}: {exc}") from exc
    return observations


def _cmd_ad_test(args) -> int:
    if args.obs:
        observations = _parse_obs(args.obs)
    else:
        observations = [Observation(*triple) for triple in DEFAULT_OBSERVATIONS]

    # One PMF per distinct (n, m) configuration, each with a seed derived
    # from the master seed so the whole run is a function of --seed.
    pmfs_by_config = {}
    for obs in observations:
        key = (obs.n_states, obs.n_transitions)
        if key not in pmfs_by_config:
            config = RandomModelConfig(
                key[0], key[1], args.pmf_samples,
                mix64(args.seed ^ mix64(len(pmfs_by_config) + 1)))
            pmfs_by_config[key] = reachability_pmf(config)
    pmfs = [pmfs_by_config[(o.n_states, o.n_transitions)] for o in observations]

    result = ad_test(observations, pmfs, n_null=args.null, seed=args.seed)
    print(json.dumps({
        "statistic": result.statistic,
        "p_value": result.p_value,
        "n_null": result.n_null,
        "n_pmf_samples": result.n_pmf_samples,
        "seed": result.seed,
        "u_values": list(result.u_values),
        "observations": [
            {"n_states": o.n_states, "n_transitions": o.n_transitions,
             "reachable": o.reachable}
            for o in observations
        ],
        "pmfs": [_pmf_json(p) for p in pmfs_by_config.values()],
    }, indent=2))
    return EXIT_OK


def _add_diagram_arg(parser):
    parser.add_argument("file", help="diagram file (.sd or .json)")
    parser.add_argument("--input-format", choices=["sd", "json"],
                        help="override the extension-based format detection")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdc",
        description="State diagram toolchain: validate, analyze, generate, simulate.")
    parser.add_argument("--version", action="version", version=f"sdc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a diagram against the model rules")
    _add_diagram_arg(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("stats", help="reachability and summary counts")
    _add_diagram_arg(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("gen", help="generate the model-view-update application")
    _add_diagram_arg(p)
    p.add_argument("--out", help="write the module here instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("dot", help="export the diagram as Graphviz DOT")
    _add_diagram_arg(p)
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("walk", help="replay a message sequence from the start state")
    _add_diagram_arg(p)
    p.add_argument("--msgs", required=True, help="comma-separated message names")
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("simulate",
                       help="empirical reachability distribution of random diagrams")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--transitions", type=int, required=True)
    p.add_argument("--samples", type=int, default=4000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("ad-test",
                       help="Anderson-Darling test of observed reachabilities "
                            "against the uniform random model")
    p.add_argument("--obs", action="append", metavar="N,M,REACH",
                   help="observed diagram as 'states,transitions,reachable' "
                        "(repeatable; default: the five bundled observations)")
    p.add_argument("--pmf-samples", type=int, default=4000)
    p.add_argument("--null", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_ad_test)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sdc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DiagramSyntaxError, SchemaError) as exc:
        print(f"sdc: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DiagramValidationError as exc:
        for violation in exc.report.violations:
            print(f"sdc: {violation}", file=sys.stderr)
        return EXIT_INVALID
    except (UnknownStateError, UnknownMessageError) as exc:
        print(f"sdc: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SdcError as exc:
        print(f"sdc: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
