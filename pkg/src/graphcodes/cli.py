"""Command-line interface.

Four subcommands: ``analyze`` (one graph), ``join`` (two graphs),
``sweep`` and ``conjecture`` (whole corpora as JSON-lines).  Exit codes:
0 success, 2 usage, 3 unreadable/malformed input, 4 cap exceeded,
5 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from dataclasses import dataclass, field
from typing import Sequence

from .classify import analyze
from .code import (
    DEFAULT_EXACT_SEARCH_CAP,
    DEFAULT_ORACLE_CAP,
    min_distance_formula,
)
from .errors import ArgumentError, CapacityError, ParseError
from .explore import (
    FamilyRange,
    Graph6Stream,
    RandomSpec,
    check_conjecture,
    corpus_entries,
    sweep,
)
from .graph import Graph, family, parse_edge_list, parse_graph6
from .joins import join_distance_analysis, join_type_rule

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAPACITY = 4
EXIT_INTERNAL = 5


@dataclass(frozen=True)
class CliConfig:
    exact_search_cap: int = DEFAULT_EXACT_SEARCH_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    output_format: str = "text"
    parallelism: int = field(default_factory=lambda: os.cpu_count() or 1)
    seed: int | None = None

    def __post_init__(self):
        if self.exact_search_cap < 1 or self.oracle_cap < 1:
            raise ArgumentError("caps must be >= 1")
        if self.parallelism < 1:
            raise ArgumentError("parallelism must be >= 1")


class _SourceAction(argparse.Action):
    """Collect --family/--graph6/--edges in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        sources = getattr(namespace, "sources", None) or []
        kind = option_string.lstrip("-")
        sources.append((kind, values))
        namespace.sources = sources


def _add_source_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--family",
        nargs="+",
        action=_SourceAction,
        metavar=("NAME", "PARAM"),
        help="named family with integer parameters, e.g. --family complete 4",
    )
    p.add_argument(
        "--graph6", action=_SourceAction, metavar="STR", help="graph6 string"
    )
    p.add_argument(
        "--edges", action=_SourceAction, metavar="PATH", help="edge-list file"
    )


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--cap-exact", type=int, default=DEFAULT_EXACT_SEARCH_CAP)
    p.add_argument("--cap-oracle", type=int, default=DEFAULT_ORACLE_CAP)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcodes",
        description="Binary [2n, n] codes generated by [I_n | A] for graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="classify one graph's code")
    _add_source_flags(p_analyze)
    _add_common_flags(p_analyze)
    p_analyze.add_argument(
        "--all-minimizers",
        action="store_true",
        help="also list every minimizing vertex set",
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_join = sub.add_parser("join", help="analyze the join of two graphs")
    _add_source_flags(p_join)
    _add_common_flags(p_join)
    p_join.set_defaults(func=cmd_join)

    p_sweep = sub.add_parser("sweep", help="analyze a corpus, JSON-lines out")
    _add_corpus_flags(p_sweep)
    _add_common_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_conj = sub.add_parser(
        "conjecture", help="test the minimizer-overlap dichotomy on a corpus"
    )
    _add_corpus_flags(p_conj)
    _add_common_flags(p_conj)
    p_conj.set_defaults(func=cmd_conjecture)

    return parser


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--family",
        nargs="+",
        metavar=("NAME", "PARAM"),
        help="family to sweep; combine with --range for the last parameter",
    )
    p.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument(
        "--random",
        nargs="+",
        metavar="K=V",
        help="random corpus, e.g. --random n=8 p=0.5 count=100 seed=1",
    )
    p.add_argument(
        "--stdin", action="store_true", help="read graph6 lines from stdin"
    )


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        exact_search_cap=args.cap_exact,
        oracle_cap=args.cap_oracle,
        output_format=args.format,
        parallelism=args.jobs,
        seed=args.seed,
    )


def _graph_from_source(kind: str, value) -> Graph:
    if kind == "family":
        name, *params = value
        try:
            numbers = [int(tok) for tok in params]
        except ValueError:
            raise ArgumentError(
                f"family parameters must be integers, got {params}"
            ) from None
        return family(name, *numbers)
    if kind == "graph6":
        return parse_graph6(value)
    if kind == "edges":
        try:
            with open(value, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ParseError(f"cannot read {value}: {exc}") from exc
        return parse_edge_list(text)
    raise ArgumentError(f"unknown source kind {kind!r}")


def _require_sources(parser_name: str, args: argparse.Namespace, count: int) -> list:
    sources = getattr(args, "sources", None) or []
    if len(sources) != count:
        raise ArgumentError(
            f"{parser_name} needs exactly {count} graph source(s) "
            f"(--family/--graph6/--edges), got {len(sources)}"
        )
    return sources


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    (source,) = _require_sources("analyze", args, 1)
    g = _graph_from_source(*source)
    report = analyze(g, exact_cap=config.exact_search_cap)
    minimizers = None
    if args.all_minimizers:
        dist = min_distance_formula(
            g, collect_all=True, cap=config.exact_search_cap
        )
        minimizers = [list(s.labels()) for s in dist.all_minimizers]
    if config.output_format == "json":
        payload = report.to_dict()
        if minimizers is not None:
            payload["minimizers"] = minimizers
        print(json.dumps(payload))
    else:
        print(f"graph: {g.n} vertices, {g.edge_count()} edges")
        print(f"degree profile: {list(report.degree_profile)}")
        print(f"code: [{report.length}, {report.dim}, {report.d}]")
        print(
            f"self-dual: {_yes(report.self_dual)}    "
            f"self-orthogonal: {_yes(report.self_orthogonal)}"
        )
        print(
            f"type: {report.code_type.value}    "
            f"extremal: {_yes(report.extremal)}"
        )
        print(f"witness: S = {_set_text(report.witness.labels())}")
        if minimizers is not None:
            print(f"minimizers ({len(minimizers)}):")
            for m in minimizers:
                print(f"  {_set_text(m)}")
    return EXIT_OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _set_text(labels) -> str:
    return "{" + ", ".join(str(v) for v in labels) + "}"


def cmd_join(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    sources = _require_sources("join", args, 2)
    g1 = _graph_from_source(*sources[0])
    g2 = _graph_from_source(*sources[1])
    analysis = join_distance_analysis(g1, g2, exact_cap=config.exact_search_cap)
    prediction = join_type_rule(g1, g2)
    if config.output_format == "json":
        payload = analysis.to_dict()
        payload["type_prediction"] = prediction.to_dict()
        print(json.dumps(payload))
    else:
        t1, t2, tj = (t.value for t in analysis.types)
        print(
            f"join of {analysis.n1} + {analysis.n2} vertices: "
            f"d1={analysis.d1} d2={analysis.d2} d={analysis.d}"
        )
        print(f"types: {t1}, {t2} -> join {tj}")
        if prediction.applicable:
            match = "matches" if prediction.predicted is analysis.types[2] else "DIFFERS"
            print(
                f"type prediction: {prediction.predicted.value} "
                f"(rule {prediction.rule}), {match}"
            )
        else:
            print("type prediction: not applicable (inputs not both self-dual)")
        print(f"distance rule: {analysis.applicable_rule}")
        for check in analysis.bounds_checked:
            print(f"  {check.name}: {'ok' if check.satisfied else 'VIOLATED'}")
    return EXIT_OK


def _corpus_from_args(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> FamilyRange | RandomSpec | Graph6Stream:
    chosen = [
        flag
        for flag, present in (
            ("--family", args.family is not None),
            ("--random", args.random is not None),
            ("--stdin", args.stdin),
        )
        if present
    ]
    if len(chosen) != 1:
        parser.error("choose exactly one corpus: --family, --random, or --stdin")
    if args.family is not None:
        name, *params = args.family
        try:
            fixed = tuple(int(tok) for tok in params)
        except ValueError:
            parser.error(f"family parameters must be integers, got {params}")
        lo = hi = None
        if args.range is not None:
            lo, hi = args.range
        return FamilyRange(kind=name, params=fixed, lo=lo, hi=hi)
    if args.random is not None:
        tokens = {}
        for tok in args.random:
            key, sep, raw = tok.partition("=")
            if not sep:
                parser.error(f"--random expects k=v tokens, got {tok!r}")
            tokens[key] = raw
        unknown = set(tokens) - {"n", "p", "count", "seed"}
        if unknown:
            parser.error(f"--random: unknown keys {sorted(unknown)}")
        try:
            n = int(tokens["n"])
            p = float(tokens.get("p", "0.5"))
            count = int(tokens.get("count", "100"))
        except (KeyError, ValueError) as exc:
            parser.error(f"--random: {exc}")
        seed = tokens.get("seed")
        if seed is None and args.seed is not None:
            seed = args.seed
        if seed is None:
            parser.error("--random corpora require a seed (seed=N or --seed N)")
        return RandomSpec(n=n, p=p, count=count, seed=int(seed))
    lines = tuple(sys.stdin.read().splitlines())
    return Graph6Stream(lines=lines)


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    spec = _corpus_from_args(args._parser, args)
    totals = {
        "graphs": 0,
        "errors": 0,
        "self_dual": 0,
        "type_ii": 0,
        "conjecture_counterexamples": 0,
    }
    for item in sweep(spec, exact_cap=config.exact_search_cap, jobs=config.parallelism):
        totals["graphs"] += 1
        if item.error is not None:
            totals["errors"] += 1
            print(f"error for {item.graph_id!r}: {item.error}", file=sys.stderr)
        else:
            if item.report.self_dual:
                totals["self_dual"] += 1
            if item.report.code_type.value == "type-II":
                totals["type_ii"] += 1
            totals["conjecture_counterexamples"] += len(
                item.conjecture.counterexamples
            )
        print(json.dumps(item.to_dict()))
    print(json.dumps({"summary": totals}))
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    spec = _corpus_from_args(args._parser, args)
    totals = {"graphs": 0, "errors": 0, "counterexamples": 0}
    for graph_id, g, error in corpus_entries(spec):
        totals["graphs"] += 1
        if error is not None or g is None:
            totals["errors"] += 1
            print(f"error for {graph_id!r}: {error}", file=sys.stderr)
            print(json.dumps({"graph_id": graph_id, "error": error}))
            continue
        try:
            report = check_conjecture(g, exact_cap=config.exact_search_cap)
        except (ArgumentError, CapacityError) as exc:
            totals["errors"] += 1
            print(f"error for {graph_id!r}: {exc}", file=sys.stderr)
            print(json.dumps({"graph_id": graph_id, "error": str(exc)}))
            continue
        totals["counterexamples"] += len(report.counterexamples)
        print(json.dumps(report.to_dict()))
    totals["holds_for_all"] = totals["counterexamples"] == 0
    print(json.dumps({"summary": totals}))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._parser = parser
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"graphcodes: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"graphcodes: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ArgumentError as exc:
        print(f"graphcodes: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
