"""Self-duality, Type I/II, and extremality of graph codes.

A graph code C([I_n | A]) is self-dual exactly when A^2 = I_n over GF(2),
equivalently when every degree is odd and every pairwise common
neighborhood has even size.  Self-dual codes are Type II when all weights
are divisible by 4 (for graph codes: every degree is 3 mod 4) and Type I
otherwise.  Extremal means the minimum distance meets the applicable
upper bound for the code's length and type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .code import (
    DEFAULT_EXACT_SEARCH_CAP,
    DEFAULT_ORACLE_CAP,
    LinearCode,
    code_from_graph,
    min_distance_formula,
    weight_enumerator,
)
from .errors import ArgumentError
from .gf2 import gf2_is_identity, gf2_mul
from .graph import Graph, SrgParams, VertexSet

__all__ = [
    "CodeReport",
    "CodeType",
    "analyze",
    "classify_type",
    "extremal_bound",
    "is_self_dual",
    "is_self_orthogonal",
    "self_dual_conditions",
    "srg_self_dual",
]


class CodeType(enum.Enum):
    NONE = "none"
    TYPE_I = "type-I"
    TYPE_II = "type-II"


def is_self_dual(g: Graph) -> bool:
    """True iff A^2 = I over GF(2), i.e. C([I|A]) equals its dual."""
    a = g.adjacency_matrix()
    return gf2_is_identity(gf2_mul(a, a))


def self_dual_conditions(g: Graph) -> tuple[bool, bool]:
    """(all degrees odd, all pairwise common neighborhoods even).

    Computed combinatorially from neighbor sets, independent of the matrix
    product used by :func:`is_self_dual`; the two must agree.
    """
    degrees_all_odd = all(g.degree(v) % 2 == 1 for v in range(g.n))
    common_all_even = all(
        (g.adj[u] & g.adj[v]).bit_count() % 2 == 0
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )
    return degrees_all_odd, common_all_even


def is_self_orthogonal(c: LinearCode) -> bool:
    """True iff gen . gen^T = 0 over GF(2) (every pair of rows orthogonal)."""
    rows = c.gen.rows
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(c.dim)
        for j in range(i, c.dim)
    )


def classify_type(
    g: Graph,
    verify: bool = False,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> CodeType:
    """Type of the graph code: NONE unless self-dual, else Type I or II.

    The degree criterion (all degrees 3 mod 4 gives Type II) is the
    primary test.  With ``verify`` the weight enumerator re-derives the
    type for cross-checking; skipped when n exceeds ``oracle_cap``.
    """
    if not is_self_dual(g):
        return CodeType.NONE
    type_ii = all(g.degree(v) % 4 == 3 for v in range(g.n))
    result = CodeType.TYPE_II if type_ii else CodeType.TYPE_I
    if verify and g.n <= oracle_cap:
        counts = weight_enumerator(code_from_graph(g), cap=oracle_cap)
        doubly_even = all(
            count == 0 for w, count in enumerate(counts) if w % 4
        )
        derived = CodeType.TYPE_II if doubly_even else CodeType.TYPE_I
        if derived is not result:
            raise AssertionError(
                f"degree criterion says {result.value} but the weight "
                f"enumerator says {derived.value}"
            )
    return result


def extremal_bound(length: int, t: CodeType) -> int:
    """Largest minimum distance a self-dual code of this length/type may have.

    Type II: 4*floor(length/24) + 4.  Type I: the same, except
    4*floor(length/24) + 6 when length = 22 (mod 24).
    """
    if length % 2:
        raise ArgumentError("self-dual codes have even length")
    if t is CodeType.TYPE_II:
        if length % 8:
            raise ArgumentError(
                "Type II codes exist only for lengths divisible by 8"
            )
        return 4 * (length // 24) + 4
    if t is CodeType.TYPE_I:
        if length % 24 == 22:
            return 4 * (length // 24) + 6
        return 4 * (length // 24) + 4
    raise ArgumentError("extremal bound applies to Type I or Type II only")


def srg_self_dual(p: SrgParams) -> bool:
    """Parity test: the code of an srg(n,k,lam,mu) is self-dual iff
    k is odd and n, lam, mu are all even."""
    return (
        p.k % 2 == 1 and p.n % 2 == 0 and p.lam % 2 == 0 and p.mu % 2 == 0
    )


@dataclass(frozen=True)
class CodeReport:
    """Full classification of one graph code."""

    n_vertices: int
    length: int
    dim: int
    d: int
    self_dual: bool
    self_orthogonal: bool
    code_type: CodeType
    extremal: bool
    witness: VertexSet
    degree_profile: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "length": self.length,
            "dim": self.dim,
            "d": self.d,
            "self_dual": self.self_dual,
            "self_orthogonal": self.self_orthogonal,
            "code_type": self.code_type.value,
            "extremal": self.extremal,
            "witness": list(self.witness.labels()),
            "degree_profile": list(self.degree_profile),
        }


def analyze(g: Graph, exact_cap: int = DEFAULT_EXACT_SEARCH_CAP) -> CodeReport:
    """Compute parameters, duality flags, type, and extremality for one graph."""
    c = code_from_graph(g)
    dist = min_distance_formula(g, cap=exact_cap)
    self_dual = is_self_dual(g)
    code_type = classify_type(g)
    extremal = self_dual and dist.d == extremal_bound(c.length, code_type)
    return CodeReport(
        n_vertices=g.n,
        length=c.length,
        dim=c.dim,
        d=dist.d,
        self_dual=self_dual,
        self_orthogonal=is_self_orthogonal(c),
        code_type=code_type,
        extremal=extremal,
        witness=dist.witness,
        degree_profile=tuple(sorted(g.degrees())),
    )
