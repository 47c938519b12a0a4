"""Shared corpus builders and naive reference implementations.

The naive functions are deliberately independent of the package's bit-set
kernels (plain lists and Python sets) so they can serve as oracles.
"""

from __future__ import annotations

import random
from itertools import combinations

from graphcodes import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    m_copies_complete,
    path,
    petersen,
    star,
    wheel,
)

# one seed per corpus so reruns are bit-identical
SEED_TREES = 0xB10C0DE
SEED_RANDOM_CORPUS = 20250810
SEED_RELABEL = 424242
SEED_JOIN_PAIRS = 515151
SEED_CONJECTURE = 777


# ---------------------------------------------------------------------------
# naive reference implementations (oracles)
# ---------------------------------------------------------------------------


def adjacency_sets(g: Graph) -> list[set[int]]:
    return [{v for v in range(g.n) if g.has_edge(u, v)} for u in range(g.n)]


def naive_von(g: Graph, s: set[int]) -> set[int]:
    nbrs = adjacency_sets(g)
    return {v for v in range(g.n) if len(nbrs[v] & s) % 2 == 1}


def naive_min_distance(g: Graph) -> int:
    """Plain minimum of |S| + |von(S)| over every nonempty subset."""
    best = None
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            value = k + len(naive_von(g, set(s)))
            if best is None or value < best:
                best = value
    return best


def naive_rank(rows: list[list[int]]) -> int:
    m = [row[:] for row in rows]
    if not m:
        return 0
    rank = 0
    for col in range(len(m[0])):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def naive_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) % 2 for j in range(cols)]
        for i in range(rows)
    ]


def girth(g: Graph) -> int | None:
    """Shortest cycle length via BFS from every vertex; None if acyclic."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in range(g.n):
                if not g.has_edge(u, v):
                    continue
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random attachment tree on n >= 2 vertices."""
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


def distance_table() -> list[tuple[str, Graph, int]]:
    """(label, graph, expected minimum distance) for the example families."""
    rows: list[tuple[str, Graph, int]] = []
    rows.append(("P1", path(1), 1))
    for n in range(2, 13):
        rows.append((f"P{n}", path(n), 2))
    rng = random.Random(SEED_TREES)
    for i in range(10):
        n = rng.randrange(2, 13)
        rows.append((f"tree{i}(n={n})", random_tree(n, rng), 2))
    rows.append(("C3", cycle(3), 3))
    rows.append(("C4", cycle(4), 2))
    for n in range(5, 13):
        rows.append((f"C{n}", cycle(n), 3))
    for n in range(4, 11):
        rows.append((f"K{n}", complete(n), 4))
    for n in range(1, 9):
        rows.append((f"K1,{n}", star(n), 2))
    for m in range(1, 6):
        for n in range(m, 11 - m):
            if max(m, n) >= 2:
                rows.append((f"K{m},{n}", complete_bipartite(m, n), 2))
    rows.append(("W4", wheel(4), 4))
    rows.append(("W5", wheel(5), 2))
    for n in range(6, 13):
        rows.append((f"W{n}", wheel(n), 4))
    rows.append(("Petersen", petersen(), 4))
    return rows


def named_family_corpus() -> list[tuple[str, Graph]]:
    """Every family instance from the distance table plus a few small
    complete graphs and disjoint unions of complete blocks."""
    rows = [(label, g) for label, g, _ in distance_table()]
    rows += [(f"K{n}", complete(n)) for n in (1, 2, 3)]
    rows += [
        ("2K4", m_copies_complete(2, 4)),
        ("3K4", m_copies_complete(3, 4)),
        ("2K6", m_copies_complete(2, 6)),
    ]
    rows += [(f"{m}K2", m_copies_complete(m, 2)) for m in range(2, 6)]
    return rows


def random_corpus(
    count: int = 300, seed: int = SEED_RANDOM_CORPUS
) -> list[tuple[str, Graph]]:
    """Seeded G(n, 1/2) graphs with n cycling through 4..10."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = 4 + (i % 7)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        ]
        out.append((f"rand{i}(n={n})", Graph.from_edges(n, edges)))
    return out
