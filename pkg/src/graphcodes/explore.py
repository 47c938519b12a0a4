"""Empirical testers and corpus sweeps.

Nothing in here assumes any unproven statement: the conjecture tester
classifies every distance-minimizing set by its overlap with von and
reports what it finds, shipping a portable graph6 witness for any set
that is neither equal to nor disjoint from its von.  Random corpora are
seeded, so every sweep is reproducible bit for bit.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Union

from .classify import CodeReport, analyze
from .code import DEFAULT_EXACT_SEARCH_CAP, min_distance_formula, rank_bound
from .errors import ArgumentError, CapacityError, ParseError
from .graph import Graph, VertexSet, family, parse_graph6, von, write_graph6

__all__ = [
    "ConjectureReport",
    "Counterexample",
    "FamilyRange",
    "Graph6Stream",
    "RandomSpec",
    "SweepItem",
    "check_conjecture",
    "check_rank_equality",
    "check_removal_identity",
    "corpus_entries",
    "random_graph",
    "sweep",
]


@dataclass(frozen=True)
class Counterexample:
    """A minimizing set that is neither equal to nor disjoint from its von."""

    s: VertexSet
    von_s: VertexSet
    relation: str

    def to_dict(self) -> dict:
        return {
            "s": list(self.s.labels()),
            "von_s": list(self.von_s.labels()),
            "relation": self.relation,
        }


@dataclass(frozen=True)
class ConjectureReport:
    """Overlap classification of every distance-minimizing set of one graph.

    ``graph_id`` is the graph6 encoding, so any counterexample can be
    re-verified independently of this package.
    """

    graph_id: str
    minimizers_checked: int
    holds_for_all: bool
    counterexamples: tuple[Counterexample, ...]

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "minimizers_checked": self.minimizers_checked,
            "holds_for_all": self.holds_for_all,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def _overlap_relation(s: VertexSet, von_s: VertexSet) -> str:
    if s.bits == von_s.bits:
        return "equal"
    if s.bits & von_s.bits == 0:
        return "disjoint"
    return "neither"


def check_conjecture(
    g: Graph, exact_cap: int = DEFAULT_EXACT_SEARCH_CAP
) -> ConjectureReport:
    """Classify every minimizing set S as equal / disjoint / neither w.r.t. von(S).

    The conjectured dichotomy (equal or disjoint, never neither) is
    reported, never assumed; "neither" cases are returned with both sets.
    """
    dist = min_distance_formula(g, collect_all=True, cap=exact_cap)
    assert dist.all_minimizers is not None
    counterexamples = []
    for s in dist.all_minimizers:
        von_s = von(g, s)
        if _overlap_relation(s, von_s) == "neither":
            counterexamples.append(Counterexample(s, von_s, "neither"))
    return ConjectureReport(
        graph_id=write_graph6(g),
        minimizers_checked=len(dist.all_minimizers),
        holds_for_all=not counterexamples,
        counterexamples=tuple(counterexamples),
    )


def check_rank_equality(
    g: Graph, exact_cap: int = DEFAULT_EXACT_SEARCH_CAP
) -> bool:
    """True iff the 2-rank lower bound is tight: rk2(A) == d(C) - 1."""
    d = min_distance_formula(g, cap=exact_cap).d
    return rank_bound(g) - 1 == d - 1


def check_removal_identity(g: Graph, s: VertexSet, v: int) -> bool:
    """Check how von changes when v in S ∩ von(S) is removed from S.

    Outside N(v) nothing changes: von(S - {v}) and von(S) agree there.
    Inside N(v) they trade places: their intersection with N(v) is empty.
    Returns the conjunction of both checks.
    """
    if len(s) < 2:
        raise ArgumentError("removal identity needs |S| >= 2")
    von_s = von(g, s)
    if v not in s or v not in von_s:
        raise ArgumentError("v must lie in both S and von(S)")
    reduced = VertexSet(g.n, s.bits ^ (1 << v))
    von_reduced = von(g, reduced)
    nv = g.adj[v]
    outside_agrees = (von_reduced.bits & ~nv) == (von_s.bits & ~nv)
    inside_disjoint = (von_reduced.bits & von_s.bits & nv) == 0
    return outside_agrees and inside_disjoint


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Independent edge inclusion with probability ``p``."""
    if n < 0:
        raise ArgumentError("vertex count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ArgumentError("edge probability must be in [0, 1]")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class FamilyRange:
    """A named family swept over a range of its last parameter.

    ``params`` are fixed leading parameters; when ``lo``/``hi`` are given,
    the family runs with last parameter lo..hi inclusive, otherwise the
    fixed parameters alone name a single graph.
    """

    kind: str
    params: tuple[int, ...] = ()
    lo: int | None = None
    hi: int | None = None


@dataclass(frozen=True)
class RandomSpec:
    """Seeded random corpus: ``count`` graphs on ``n`` vertices, edge
    probability ``p``."""

    n: int
    p: float
    count: int
    seed: int


@dataclass(frozen=True)
class Graph6Stream:
    """One graph6 string per entry (e.g. lines of a file or stdin)."""

    lines: tuple[str, ...]


CorpusSpec = Union[FamilyRange, RandomSpec, Graph6Stream]


def corpus_entries(
    spec: CorpusSpec,
) -> Iterator[tuple[str, Graph | None, str | None]]:
    """Yield (graph_id, graph, error) triples for a corpus spec.

    Malformed graph6 lines yield an error entry instead of aborting the
    stream; family and random corpora never produce error entries.
    """
    if isinstance(spec, FamilyRange):
        if spec.lo is None:
            g = family(spec.kind, *spec.params)
            yield write_graph6(g), g, None
            return
        hi = spec.hi if spec.hi is not None else spec.lo
        for last in range(spec.lo, hi + 1):
            g = family(spec.kind, *spec.params, last)
            yield write_graph6(g), g, None
    elif isinstance(spec, RandomSpec):
        rng = random.Random(spec.seed)
        for _ in range(spec.count):
            g = random_graph(spec.n, spec.p, rng)
            yield write_graph6(g), g, None
    elif isinstance(spec, Graph6Stream):
        for line in spec.lines:
            line = line.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except ParseError as exc:
                yield line, None, f"parse: {exc}"
                continue
            yield write_graph6(g), g, None
    else:
        raise ArgumentError(f"unknown corpus spec {type(spec).__name__}")


@dataclass(frozen=True)
class SweepItem:
    """Per-graph sweep result; ``error`` is set instead of the results when
    the item failed (parse problem, cap exceeded, ...)."""

    graph_id: str
    report: CodeReport | None
    conjecture: ConjectureReport | None
    rank_equality: bool | None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "report": None if self.report is None else self.report.to_dict(),
            "conjecture": (
                None if self.conjecture is None else self.conjecture.to_dict()
            ),
            "rank_equality": self.rank_equality,
            "error": self.error,
        }


def _sweep_one(
    entry: tuple[str, Graph | None, str | None], exact_cap: int
) -> SweepItem:
    graph_id, g, error = entry
    if error is not None or g is None:
        return SweepItem(graph_id, None, None, None, error)
    try:
        report = analyze(g, exact_cap=exact_cap)
        conjecture = check_conjecture(g, exact_cap=exact_cap)
        rank_eq = check_rank_equality(g, exact_cap=exact_cap)
    except (ArgumentError, CapacityError) as exc:
        return SweepItem(graph_id, None, None, None, str(exc))
    return SweepItem(graph_id, report, conjecture, rank_eq, None)


def _sweep_one_star(args: tuple) -> SweepItem:
    return _sweep_one(*args)


def sweep(
    spec: CorpusSpec,
    exact_cap: int = DEFAULT_EXACT_SEARCH_CAP,
    jobs: int = 1,
) -> Iterator[SweepItem]:
    """Analyze a whole corpus, yielding one item per graph in corpus order.

    Deterministic for a given spec (random corpora carry their seed).
    With ``jobs`` > 1 the items are processed in a process pool; output
    order is still the corpus order.
    """
    entries = corpus_entries(spec)
    if jobs <= 1:
        for entry in entries:
            yield _sweep_one(entry, exact_cap)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        tasks = ((entry, exact_cap) for entry in entries)
        yield from pool.map(_sweep_one_star, tasks, chunksize=8)
