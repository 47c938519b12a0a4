"""Simple undirected graphs as packed adjacency bit-rows.

Vertices are labeled 0..n-1 internally; anything user-facing (reports,
CLI output, error messages about named examples) uses 1-based labels via
:meth:`VertexSet.labels`.  ``adj[i]`` is the neighborhood of vertex ``i``
as a bitset, so the adjacency matrix over GF(2) is just the rows viewed
as a :class:`~graphcodes.gf2.Gf2Matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, ParseError, ShapeError
from .gf2 import Gf2Matrix, bits_of

__all__ = [
    "Graph",
    "SrgParams",
    "VertexSet",
    "are_duplicates",
    "check_srg",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "family",
    "join",
    "m_copies_complete",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "petersen",
    "relabel",
    "star",
    "von",
    "wheel",
    "write_edge_list",
    "write_graph6",
]


@dataclass(frozen=True)
class Graph:
    """Simple graph; symmetry and irreflexivity are enforced eagerly."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ArgumentError(
                f"expected {self.n} adjacency rows, got {len(self.adj)}"
            )
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ArgumentError(f"row {i} references vertices >= {self.n}")
            if (row >> i) & 1:
                raise ArgumentError(f"loop at vertex {i + 1}")
        for i in range(self.n):
            for j in bits_of(self.adj[i]):
                if not (self.adj[j] >> i) & 1:
                    raise ArgumentError(
                        f"asymmetric adjacency between {i + 1} and {j + 1}"
                    )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build from 0-based edge pairs."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"loop at vertex {u + 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_adjacency(cls, rows: Sequence[Sequence[int]]) -> Graph:
        """Build from a dense 0/1 adjacency matrix."""
        n = len(rows)
        adj = []
        for row in rows:
            if len(row) != n:
                raise ArgumentError("adjacency matrix must be square")
            bits = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ArgumentError(f"entry {e!r} is not a bit")
                bits |= e << j
            adj.append(bits)
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits_of(self.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def adjacency_matrix(self) -> Gf2Matrix:
        return Gf2Matrix(self.n, self.n, self.adj)


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of a graph on ``universe`` vertices."""

    universe: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise ShapeError(
                f"bits outside the {self.universe}-vertex universe"
            )

    @classmethod
    def from_vertices(cls, universe: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < universe:
                raise ArgumentError(f"vertex {v} outside universe {universe}")
            bits |= 1 << v
        return cls(universe, bits)

    def members(self) -> tuple[int, ...]:
        return tuple(bits_of(self.bits))

    def labels(self) -> tuple[int, ...]:
        """Members in 1-based labels, for display."""
        return tuple(v + 1 for v in bits_of(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and bool((self.bits >> v) & 1)


def von(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices with an odd number of neighbors inside ``s``.

    This is the XOR of the adjacency rows indexed by ``s``, equivalently
    the GF(2) sum of the adjacency columns of ``s``, and is the inner
    loop of the minimum-distance search.
    """
    if s.universe != g.n:
        raise ShapeError(
            f"vertex set over {s.universe} vertices used with a graph on {g.n}"
        )
    acc = 0
    for v in bits_of(s.bits):
        acc ^= g.adj[v]
    return VertexSet(g.n, acc)


def are_duplicates(g: Graph, u: int, v: int) -> bool:
    """True iff ``u`` and ``v`` are non-adjacent with identical neighborhoods."""
    if u == v:
        raise ArgumentError("duplicate test needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ArgumentError(f"vertex out of range for n={g.n}")
    return not g.has_edge(u, v) and g.adj[u] == g.adj[v]


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ArgumentError("path requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ArgumentError("cycle requires n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ArgumentError("complete requires n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ArgumentError("complete_bipartite requires m, n >= 1")
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    return Graph(m + n, tuple(right for _ in range(m)) + tuple(left for _ in range(n)))


def star(n: int) -> Graph:
    """K_{1,n}, centered at vertex 1 (0 internally)."""
    if n < 1:
        raise ArgumentError("star requires n >= 1 leaves")
    return complete_bipartite(1, n)


def wheel(n: int) -> Graph:
    """W_n on n vertices: a hub (vertex 1) joined to an (n-1)-cycle."""
    if n < 4:
        raise ArgumentError("wheel requires n >= 4")
    return join(complete(1), cycle(n - 1))


def petersen() -> Graph:
    """Outer 5-cycle 1..5, spokes to 6..10, inner pentagram; N(1) = {2,5,6}."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def m_copies_complete(m: int, k: int) -> Graph:
    """m disjoint copies of K_k (e.g. 2K4, or mK1 for empty graphs with k=1)."""
    if m < 1 or k < 1:
        raise ArgumentError("m_copies_complete requires m, k >= 1")
    g = complete(k)
    out = g
    for _ in range(m - 1):
        out = disjoint_union(out, g)
    return out


_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "wheel": 1,
    "petersen": 0,
    "m_copies_complete": 2,
}

# convenience spellings accepted on the command line
_FAMILY_ALIASES = {"k1": ("complete", (1,))}


def family(kind: str, *params: int) -> Graph:
    """Named-family dispatcher; see ``_FAMILY_ARITY`` for the catalogue."""
    kind = kind.lower().replace("-", "_")
    if kind in _FAMILY_ALIASES:
        base, fixed = _FAMILY_ALIASES[kind]
        return family(base, *fixed, *params)
    if kind not in _FAMILY_ARITY:
        known = ", ".join(sorted(_FAMILY_ARITY))
        raise ArgumentError(f"unknown family {kind!r}; known: {known}")
    arity = _FAMILY_ARITY[kind]
    if len(params) != arity:
        raise ArgumentError(
            f"family {kind!r} takes {arity} parameter(s), got {len(params)}"
        )
    builder = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "star": star,
        "wheel": wheel,
        "petersen": petersen,
        "m_copies_complete": m_copies_complete,
    }[kind]
    return builder(*params)


# ---------------------------------------------------------------------------
# graph operations
# ---------------------------------------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """All of g1 and g2 plus every edge between them; g1's vertices first."""
    n1, n2 = g1.n, g2.n
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    adj = [g1.adj[v] | right for v in range(n1)]
    adj += [(g2.adj[w] << n1) | left for w in range(n2)]
    return Graph(n1 + n2, tuple(adj))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Block-diagonal union; g1's vertices first, no cross edges."""
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: old vertex v becomes perm[v].

    The result's adjacency matrix is P A P^T for the permutation matrix P
    that sends v to perm[v].
    """
    if sorted(perm) != list(range(g.n)):
        raise ArgumentError("perm is not a permutation of the vertices")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in bits_of(g.adj[v]):
            row |= 1 << perm[w]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


@dataclass(frozen=True)
class SrgParams:
    """Strongly-regular parameters (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if not (0 <= self.k < self.n):
            raise ArgumentError("srg requires 0 <= k < n")
        if self.lam > self.k or self.mu > self.k:
            raise ArgumentError("srg requires lam <= k and mu <= k")


def check_srg(g: Graph) -> SrgParams | None:
    """Strongly-regular parameters of ``g``, or None.

    Complete and empty graphs return None: without a non-adjacent
    (resp. adjacent) pair there is no witness for mu (resp. lam).
    """
    if g.n < 2:
        raise ArgumentError("srg test needs at least 2 vertices")
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(1, g.n)):
        return None
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        return None
    return SrgParams(g.n, k, lam, mu)


# ---------------------------------------------------------------------------
# graph6 encoding
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_char(value: int, offset: int) -> int:
    if not 63 <= value <= 126:
        raise ParseError(
            f"invalid graph6 byte {value} at offset {offset}", offset
        )
    return value - 63


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string (optionally ``>>graph6<<``-prefixed)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", 0)

    pos = 0
    first = _g6_char(ord(s[0]), 0)
    if first < 63:
        n = first
        pos = 1
    else:
        # long form: '~' then 18 bits of n in three bytes
        if len(s) >= 2 and s[1] == "~":
            raise ParseError(
                "graph6 inputs beyond 258047 vertices are not supported", 1
            )
        if len(s) < 4:
            raise ParseError("truncated graph6 vertex count", len(s))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _g6_char(ord(s[i]), i)
        pos = 4

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(s) - pos < nchars:
        raise ParseError(
            f"truncated graph6 payload: need {nchars} bytes, got {len(s) - pos}",
            len(s),
        )
    if len(s) - pos > nchars:
        raise ParseError("trailing bytes after graph6 payload", pos + nchars)

    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    bits = 0
    for k in range(nchars):
        bits = (bits << 6) | _g6_char(ord(s[pos + k]), pos + k)
    bits >>= nchars * 6 - nbits  # drop padding
    adj = [0] * n
    shift = nbits
    for j in range(1, n):
        for i in range(j):
            shift -= 1
            if (bits >> shift) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    """Encode in graph6 (short form for n <= 62, long form above)."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + "".join(
            chr(63 + ((n >> shift) & 0x3F)) for shift in (12, 6, 0)
        )
    else:
        raise ArgumentError("graph6 output limited to 258047 vertices")
    out = [head]
    chunk = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            chunk = (chunk << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + chunk))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr(63 + (chunk << (6 - filled))))
    return "".join(out)


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header ``n <count>``, then 1-based ``u v`` lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(
                    f"line {lineno}: expected header 'n <count>'", lineno
                )
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(
                    f"line {lineno}: vertex count {tokens[1]!r} is not an integer",
                    lineno,
                ) from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(
                f"line {lineno}: non-integer endpoint", lineno
            ) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(
                f"line {lineno}: edge ({u}, {v}) outside 1..{n}", lineno
            )
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("missing 'n <count>' header", 0)
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
