"""Binary [2n, n] codes generated by [I_n | A] for a graph adjacency matrix A.

Two independent routes to the minimum distance are provided:

* :func:`min_distance_formula` minimizes |S| + |von(S)| over nonempty
  vertex subsets S, enumerating by cardinality with XOR-incremental von
  maintenance and pruning whole cardinality levels once they cannot beat
  the incumbent (|S| alone lower-bounds the objective).
* :func:`min_distance_bruteforce` walks all nonzero codewords in Gray-code
  order, one row-XOR per step.

Codewords are bit-ints of length ``2n``: bit i (i < n) is the identity
half, bit n+i the adjacency half.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError, CapacityError, ShapeError
from .gf2 import Gf2Matrix, gf2_identity, gf2_rank, hstack
from .graph import Graph, VertexSet, von

__all__ = [
    "DEFAULT_EXACT_SEARCH_CAP",
    "DEFAULT_ORACLE_CAP",
    "DistanceResult",
    "LinearCode",
    "code_from_graph",
    "encode_subset",
    "is_minimally_dependent",
    "iter_codewords",
    "min_distance_bruteforce",
    "min_distance_formula",
    "parity_check",
    "rank_bound",
    "weight_enumerator",
]

# Desk-scale defaults; every search below takes an explicit cap argument.
DEFAULT_EXACT_SEARCH_CAP = 28
DEFAULT_ORACLE_CAP = 22


@dataclass(frozen=True)
class LinearCode:
    """Binary linear code given by a full-row-rank generator matrix."""

    length: int
    dim: int
    gen: Gf2Matrix

    def __post_init__(self):
        if (self.gen.nrows, self.gen.ncols) != (self.dim, self.length):
            raise ShapeError(
                f"generator is {self.gen.nrows}x{self.gen.ncols}, "
                f"expected {self.dim}x{self.length}"
            )
        if gf2_rank(self.gen) != self.dim:
            raise ShapeError("generator rows are not linearly independent")


@dataclass(frozen=True)
class DistanceResult:
    """Minimum distance plus the subset that realizes it.

    For ``method == "formula-search"`` the witness S satisfies
    ``d == |S| + |von(S)|``; for the brute-force oracle it is the message
    (row-selection) of a minimum-weight codeword.  ``all_minimizers`` is
    populated only when requested, sorted by their vertex tuples.
    """

    d: int
    witness: VertexSet
    all_minimizers: tuple[VertexSet, ...] | None
    method: str


def code_from_graph(g: Graph) -> LinearCode:
    """The [2n, n] code generated by [I_n | A]."""
    if g.n < 1:
        raise ArgumentError("code construction needs at least one vertex")
    gen = hstack(gf2_identity(g.n), g.adjacency_matrix())
    return LinearCode(2 * g.n, g.n, gen)


def _split_graph_gen(gen: Gf2Matrix) -> tuple[int, tuple[int, ...]]:
    """Recover (n, adjacency rows) from a [I_n | A] generator, or raise."""
    n = gen.nrows
    if gen.ncols != 2 * n:
        raise ShapeError("not a graph code: length != 2 * dim")
    mask = (1 << n) - 1
    adj = []
    for i, row in enumerate(gen.rows):
        if row & mask != 1 << i:
            raise ShapeError("not a graph code: left block is not the identity")
        adj.append(row >> n)
    for i in range(n):
        if (adj[i] >> i) & 1:
            raise ShapeError("not a graph code: adjacency diagonal is nonzero")
        for j in range(i + 1, n):
            if ((adj[i] >> j) ^ (adj[j] >> i)) & 1:
                raise ShapeError("not a graph code: adjacency block is asymmetric")
    return n, tuple(adj)


def parity_check(c: LinearCode) -> Gf2Matrix:
    """H = [A | I_n] for a code built by :func:`code_from_graph`.

    Satisfies gen . H^T = 0 over GF(2); A is symmetric, so no transpose
    is needed on the adjacency block.
    """
    n, adj = _split_graph_gen(c.gen)
    return hstack(Gf2Matrix(n, n, adj), gf2_identity(n))


def encode_subset(g: Graph, s: VertexSet) -> int:
    """Sum of the [I_n | A] rows indexed by ``s``.

    The support is exactly S on the identity half and von(S) on the
    adjacency half, so the weight is |S| + |von(S)|.
    """
    if len(s) == 0:
        raise ArgumentError("encode_subset needs a nonempty subset")
    v = von(g, s)
    return s.bits | (v.bits << g.n)


def rank_bound(g: Graph) -> int:
    """Upper bound rk2(A) + 1 on the minimum distance."""
    return gf2_rank(g.adjacency_matrix()) + 1


def min_distance_formula(
    g: Graph,
    collect_all: bool = False,
    cap: int = DEFAULT_EXACT_SEARCH_CAP,
) -> DistanceResult:
    """Exact minimum of |S| + |von(S)| over nonempty vertex subsets.

    Subsets are enumerated by increasing cardinality, lexicographically
    within each cardinality, with von maintained by XOR as vertices are
    added.  A cardinality level k only runs while k <= best, since every
    subset there scores at least k.  The reported witness is the
    lexicographically smallest minimizing set (compared as sorted vertex
    tuples); with ``collect_all`` every minimizing set is returned.
    """
    if g.n < 1:
        raise ArgumentError("minimum-distance search needs at least one vertex")
    if g.n > cap:
        raise CapacityError(
            f"n={g.n} exceeds the exact-search cap {cap}; "
            "raise the cap to search anyway"
        )
    n, adj = g.n, g.adj
    best = n + 1  # beaten at level 1: 1 + deg(v) <= n
    best_witness: tuple[int, ...] | None = None
    minimizers: list[tuple[int, ...]] = []
    members: list[int] = []

    def record(value: int, witness: tuple[int, ...]) -> None:
        nonlocal best, best_witness
        if value < best:
            best = value
            best_witness = witness
            if collect_all:
                minimizers.clear()
                minimizers.append(witness)
        else:
            if witness < best_witness:
                best_witness = witness
            if collect_all:
                minimizers.append(witness)

    bit_count = int.bit_count

    def descend(start: int, size_left: int, von_bits: int) -> None:
        if size_left == 1:
            # the leaf level is the bulk of the tree; run it inline
            k = len(members) + 1
            cutoff = best - k
            for v, row in enumerate(adj[start:], start):
                if bit_count(von_bits ^ row) <= cutoff:
                    value = k + bit_count(von_bits ^ row)
                    record(value, tuple(members) + (v,))
                    cutoff = best - k
            return
        for v in range(start, n - size_left + 1):
            members.append(v)
            descend(v + 1, size_left - 1, von_bits ^ adj[v])
            members.pop()

    for k in range(1, n + 1):
        if k > best:
            break
        descend(0, k, 0)

    assert best_witness is not None
    all_min = None
    if collect_all:
        all_min = tuple(
            VertexSet.from_vertices(n, m) for m in sorted(minimizers)
        )
    return DistanceResult(
        d=best,
        witness=VertexSet.from_vertices(n, best_witness),
        all_minimizers=all_min,
        method="formula-search",
    )


def _check_oracle_cap(dim: int, cap: int) -> None:
    if dim > cap:
        raise CapacityError(
            f"dimension {dim} exceeds the codeword-enumeration cap {cap}; "
            "raise the cap to enumerate anyway"
        )


def iter_codewords(c: LinearCode):
    """All 2^dim codewords as bit-ints, starting from zero, Gray-code order."""
    word = 0
    yield word
    prev = 0
    for m in range(1, 1 << c.dim):
        gray = m ^ (m >> 1)
        word ^= c.gen.rows[(gray ^ prev).bit_length() - 1]
        prev = gray
        yield word


def min_distance_bruteforce(
    c: LinearCode, cap: int = DEFAULT_ORACLE_CAP
) -> DistanceResult:
    """Minimum weight over all nonzero codewords, by Gray-code enumeration.

    Independent of the subset-search route: it never looks at von, only at
    row sums of the generator.  The witness is the lexicographically
    smallest minimum-weight message, as a subset of row indices.
    """
    _check_oracle_cap(c.dim, cap)
    best = c.length + 1
    best_msg: tuple[int, ...] | None = None
    word = 0
    prev = 0
    for m in range(1, 1 << c.dim):
        gray = m ^ (m >> 1)
        word ^= c.gen.rows[(gray ^ prev).bit_length() - 1]
        prev = gray
        w = word.bit_count()
        if w < best:
            best = w
            best_msg = tuple(i for i in range(c.dim) if (gray >> i) & 1)
        elif w == best:
            msg = tuple(i for i in range(c.dim) if (gray >> i) & 1)
            if msg < best_msg:
                best_msg = msg
    assert best_msg is not None
    return DistanceResult(
        d=best,
        witness=VertexSet.from_vertices(c.dim, best_msg),
        all_minimizers=None,
        method="brute-force",
    )


def weight_enumerator(c: LinearCode, cap: int = DEFAULT_ORACLE_CAP) -> list[int]:
    """Counts of codewords by Hamming weight; entry w is the number of weight w."""
    _check_oracle_cap(c.dim, cap)
    counts = [0] * (c.length + 1)
    for word in iter_codewords(c):
        counts[word.bit_count()] += 1
    return counts


def is_minimally_dependent(
    g: Graph, s: VertexSet, cap: int = 20
) -> bool:
    """Whether the adjacency columns indexed by ``s`` are minimally dependent.

    The columns sum to zero exactly when von(S) is empty.  Minimality is
    equivalent to the column submatrix having rank |S| - 1: then the
    dependency space is one-dimensional, so no proper nonempty subset can
    also sum to zero.
    """
    if len(s) == 0:
        raise ArgumentError("minimal-dependence test needs a nonempty subset")
    if len(s) > cap:
        raise CapacityError(
            f"|S|={len(s)} exceeds the minimal-dependence cap {cap}"
        )
    if von(g, s).bits != 0:
        return False
    # A is symmetric: columns of A indexed by S are the rows indexed by S.
    sub = Gf2Matrix(len(s), g.n, tuple(g.adj[v] for v in s.members()))
    return gf2_rank(sub) == len(s) - 1
