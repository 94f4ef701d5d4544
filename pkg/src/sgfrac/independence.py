"""Signed independent sets: validation, exhaustive enumeration, alpha^s.

A signed independent set over a host graph is an ordered pair (A, B) of
vertex sets such that A and B are each independent in the positive
subgraph and no negative edge joins A to B. The sets may overlap; the size
|A| + |B| counts overlap vertices twice, and the incidence of a vertex is
0, 1/2 or 1 according to how many of A, B contain it.

Enumeration uses a slot encoding: vertex v yields slot v ("v in A") and
slot n+v ("v in B"), and the forbidden combinations are exactly the edges
of a conflict graph on the 2n slots. Inclusion-maximal pairs are then the
maximal independent sets of the conflict graph, enumerated as maximal
cliques of its complement with the pivoting Bron-Kerbosch algorithm over
bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import SizeLimitExceeded, VertexOutOfRange
from .graphs import SignedGraph, _check_vertex
from .limits import vertex_limit
from .rationals import HALF, ONE, ZERO


def mask_from(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SignedIndependentSet:
    """Ordered pair (A, B) of vertex sets; equality is pairwise, so (A, B)
    and (B, A) are distinct objects even though their incidence vectors
    coincide."""

    a: frozenset[int]
    b: frozenset[int]

    @classmethod
    def from_masks(cls, amask: int, bmask: int) -> "SignedIndependentSet":
        return cls(frozenset(bits(amask)), frozenset(bits(bmask)))

    @property
    def size(self) -> int:
        return len(self.a) + len(self.b)

    def masks(self) -> tuple[int, int]:
        return mask_from(self.a), mask_from(self.b)

    def swap(self) -> "SignedIndependentSet":
        return SignedIndependentSet(self.b, self.a)

    def label(self) -> str:
        fa = ",".join(str(v) for v in sorted(self.a))
        fb = ",".join(str(v) for v in sorted(self.b))
        return f"A={fa};B={fb};size={self.size}"


def incidence(j: SignedIndependentSet, v: int):
    """Coverage d of vertex v by the pair: (1 if v in A) + (1 if v in B),
    halved. Exactly 0, 1/2 or 1."""
    hits = (v in j.a) + (v in j.b)
    return (ZERO, HALF, ONE)[hits]


def is_signed_independent(graph: SignedGraph, a: Iterable[int], b: Iterable[int]) -> bool:
    """Whether (A, B) satisfies all three defining constraints."""
    aset, bset = set(a), set(b)
    for v in aset | bset:
        _check_vertex(v, graph.n)
    amask, bmask = mask_from(aset), mask_from(bset)
    for v in aset:
        if graph.pos_adj[v] & amask:
            return False
    for v in bset:
        if graph.pos_adj[v] & bmask:
            return False
    for v in aset:
        if graph.neg_adj[v] & bmask:
            return False
    return True


# -- enumeration -----------------------------------------------------------


def _complement_slot_adj(graph: SignedGraph) -> list[int]:
    """Per-slot bitmask of non-conflicting other slots."""
    n = graph.n
    full = (1 << (2 * n)) - 1
    adj = []
    for v in range(n):  # slot v: "v in A"
        conflict = graph.pos_adj[v] | (graph.neg_adj[v] << n)
        adj.append(full & ~conflict & ~(1 << v))
    for v in range(n):  # slot n+v: "v in B"
        conflict = (graph.pos_adj[v] << n) | graph.neg_adj[v]
        adj.append(full & ~conflict & ~(1 << (n + v)))
    return adj


def _maximal_cliques(adj: list[int], universe: int) -> list[int]:
    """Maximal cliques of the graph given by adjacency bitmasks, as masks.

    Bron-Kerbosch with pivoting; the pivot is the vertex of P | X with the
    most candidates among P.
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot_cover = -1
        pivot = -1
        m = px
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cover = (p & adj[u]).bit_count()
            if cover > pivot_cover:
                pivot_cover = cover
                pivot = u
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low

    expand(0, universe, 0)
    return out


@lru_cache(maxsize=64)
def _maximal_pair_masks(graph: SignedGraph) -> tuple[tuple[int, int], ...]:
    """All inclusion-maximal valid pairs as (amask, bmask), sorted."""
    n = graph.n
    adj = _complement_slot_adj(graph)
    full = (1 << (2 * n)) - 1
    lowmask = (1 << n) - 1
    pairs = [(r & lowmask, r >> n) for r in _maximal_cliques(adj, full)]
    pairs.sort()
    return tuple(pairs)


def _check_limit(graph: SignedGraph, limit: int | None) -> None:
    cap = vertex_limit(limit)
    if graph.n > cap:
        raise SizeLimitExceeded(f"{graph.n} vertices exceeds limit {cap}")


def enumerate_maximal(
    graph: SignedGraph, limit: int | None = None
) -> list[SignedIndependentSet]:
    """Every inclusion-maximal signed independent set, exactly once, in
    lexicographic order of the (A, B) bit encodings. Both (A, B) and
    (B, A) appear whenever A != B."""
    _check_limit(graph, limit)
    return [
        SignedIndependentSet.from_masks(am, bm)
        for am, bm in _maximal_pair_masks(graph)
    ]


def distinct_columns(
    graph: SignedGraph, limit: int | None = None
) -> list[tuple[int, int, SignedIndependentSet]]:
    """Maximal pairs deduplicated by incidence vector.

    Two pairs cover vertices identically iff they agree on (A | B, A & B);
    the lexicographically smallest representative pair is kept. Returned
    as (union_mask, overlap_mask, representative), sorted by masks.
    """
    _check_limit(graph, limit)
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for am, bm in _maximal_pair_masks(graph):  # already sorted, first wins
        key = (am | bm, am & bm)
        if key not in seen:
            seen[key] = (am, bm)
    return [
        (u, i, SignedIndependentSet.from_masks(*seen[(u, i)]))
        for u, i in sorted(seen)
    ]


def alpha_s(graph: SignedGraph, limit: int | None = None) -> int:
    """Signed independence number: the largest |A| + |B| over valid pairs."""
    _check_limit(graph, limit)
    pairs = _maximal_pair_masks(graph)
    if not pairs:
        return 0
    return max(am.bit_count() + bm.bit_count() for am, bm in pairs)


def fiber(
    j: SignedIndependentSet, u: int, h_order: int, g_order: int | None = None
) -> SignedIndependentSet:
    """Slice of a product-graph pair above vertex u of the left factor,
    under the u * |V(H)| + x index convention. The slice need not itself be
    signed independent in H."""
    if u < 0 or (g_order is not None and u >= g_order):
        raise VertexOutOfRange(f"vertex {u} not in the left factor")
    base = u * h_order
    a = frozenset(x - base for x in j.a if base <= x < base + h_order)
    b = frozenset(x - base for x in j.b if base <= x < base + h_order)
    return SignedIndependentSet(a, b)


# -- text export ------------------------------------------------------------


def export_sets(sets: Iterable[SignedIndependentSet]) -> str:
    """One line per set: ``A=<sorted>;B=<sorted>;size=<k>``."""
    return "".join(j.label() + "\n" for j in sets)


def incidence_csv(graph: SignedGraph, sets: list[SignedIndependentSet]) -> str:
    """Incidence matrix as CSV: rows are vertices, columns are sets,
    entries 0, 1/2 or 1."""
    render = {ZERO: "0", HALF: "1/2", ONE: "1"}
    lines = ["vertex," + ",".join(f"J{i}" for i in range(len(sets)))]
    for v in range(graph.n):
        row = [str(v)] + [render[incidence(j, v)] for j in sets]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
