"""Signed graphs: construction, switching, products, and the SG v1 format.

Vertices are the integers 0..n-1. Each edge carries a sign (+1 or -1); the
underlying graph is simple and loop-free, so a vertex pair holds at most
one edge and exactly one sign. All values are immutable and every
operation is a pure function returning a new graph, so concurrent use
needs no synchronization.

Product graphs flatten vertex pairs with the fixed convention
(u, v) -> u * |V(H)| + v so that serialized output is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    FormatError,
    GraphError,
    LoopEdge,
    NTooSmall,
    OverlappingDistanceSets,
    VertexOutOfRange,
    ZeroK,
)

Edge = tuple[int, int, int]  # (u, v, sign) with u < v and sign in {+1, -1}


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")


@dataclass(frozen=True)
class SignedGraph:
    """A simple loop-free graph on 0..n-1 with +1/-1 edge signs."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen = set()
        for u, v, sign in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not u < v:
                raise GraphError(f"edge ({u},{v}) must satisfy u < v")
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if sign not in (1, -1):
                raise GraphError(f"edge sign must be +1 or -1, got {sign}")
            if (u, v) in seen:
                raise DuplicateEdge(f"pair ({u},{v}) occurs more than once")
            seen.add((u, v))

    # -- adjacency bitmasks (vertex v is bit 1 << v) --------------------

    @cached_property
    def pos_adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v, sign in self.edges:
            if sign == 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neg_adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v, sign in self.edges:
            if sign == -1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        return tuple(p | m for p, m in zip(self.pos_adj, self.neg_adj))

    # -- queries ---------------------------------------------------------

    def sign(self, u: int, v: int) -> int:
        """Sign of edge uv, or 0 if the pair is not an edge."""
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        if self.pos_adj[u] >> v & 1:
            return 1
        if self.neg_adj[u] >> v & 1:
            return -1
        return 0

    def has_edge(self, u: int, v: int) -> bool:
        return self.sign(u, v) != 0

    def sorted_edges(self) -> list[Edge]:
        """Edges in ascending (u, v) order; the canonical serialization order."""
        return sorted(self.edges, key=lambda e: (e[0], e[1]))

    def positive_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, s in self.sorted_edges() if s == 1]

    def negative_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, s in self.sorted_edges() if s == -1]

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CirculantSpec:
    """Distance sets for a signed circulant graph on Z_n.

    S holds the circular distances of positive edges, T those of negative
    edges; both live in 1..floor(n/2) and must be disjoint, since a pair of
    vertices can carry only one signed edge.
    """

    n: int
    s: frozenset[int]
    t: frozenset[int]

    def __init__(self, n: int, s: Iterable[int] = (), t: Iterable[int] = ()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "s", frozenset(s))
        object.__setattr__(self, "t", frozenset(t))
        if n < 3:
            raise NTooSmall(f"circulant needs n >= 3, got {n}")
        half = n // 2
        for d in self.s | self.t:
            if not 1 <= d <= half:
                raise GraphError(f"distance {d} not in 1..{half}")
        if self.s & self.t:
            raise OverlappingDistanceSets(
                f"distance sets overlap on {sorted(self.s & self.t)}"
            )

    def label(self) -> str:
        fmt = lambda xs: "{" + ",".join(str(x) for x in sorted(xs)) + "}"
        return f"G({self.n},{fmt(self.s)},{fmt(self.t)})"


@dataclass(frozen=True)
class VertexMap:
    """A total assignment of domain vertices to codomain vertices."""

    domain: int
    codomain: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.domain:
            raise GraphError("map must assign every domain vertex")
        for w in self.images:
            _check_vertex(w, self.codomain)

    def __call__(self, v: int) -> int:
        return self.images[v]


# -- construction ---------------------------------------------------------


def build(
    n: int,
    positive_edges: Sequence[tuple[int, int]] = (),
    negative_edges: Sequence[tuple[int, int]] = (),
) -> SignedGraph:
    """Signed graph with exactly the given signed vertex pairs."""
    seen: set[tuple[int, int]] = set()
    edges: list[Edge] = []
    for sign, pairs in ((1, positive_edges), (-1, negative_edges)):
        for u, v in pairs:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            _check_vertex(u, n)
            _check_vertex(v, n)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"pair {key} listed twice or with both signs")
            seen.add(key)
            edges.append((key[0], key[1], sign))
    return SignedGraph(n, frozenset(edges))


def circulant(spec: CirculantSpec) -> SignedGraph:
    """Signed circulant graph: uv is positive iff the circular distance
    |u - v|_n lies in S, negative iff it lies in T."""
    n = spec.n
    edges: list[Edge] = []
    for u in range(n):
        for v in range(u + 1, n):
            d = min(v - u, n - (v - u))
            if d in spec.s:
                edges.append((u, v, 1))
            elif d in spec.t:
                edges.append((u, v, -1))
    return SignedGraph(n, frozenset(edges))


def complete_positive(k: int) -> SignedGraph:
    """All-positive complete graph on k vertices."""
    return build(k, list(itertools.combinations(range(k), 2)), [])


# -- transformations ------------------------------------------------------


def switch(graph: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Resign at X: flip the sign of every edge with exactly one end in X."""
    xs = set(x)
    for v in xs:
        _check_vertex(v, graph.n)
    edges = frozenset(
        (u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in graph.edges
    )
    return SignedGraph(graph.n, edges)


def direct_product(g: SignedGraph, h: SignedGraph) -> SignedGraph:
    """Direct (tensor) product: (u,x)~(u',x') iff uu' in E(G) and xx' in
    E(H); the edge sign is the product of the factor signs."""
    nh = h.n
    edges: list[Edge] = []
    for gu, gv, gs in g.edges:
        for hu, hv, hs in h.edges:
            sign = gs * hs
            for a, b in ((gu * nh + hu, gv * nh + hv), (gu * nh + hv, gv * nh + hu)):
                if a > b:
                    a, b = b, a
                edges.append((a, b, sign))
    return SignedGraph(g.n * nh, frozenset(edges))


def lex_product(g: SignedGraph, h: SignedGraph) -> SignedGraph:
    """Lexicographic product g[h]: between distinct g-fibers every pair is
    an edge carrying the g sign; inside a fiber edges copy h."""
    nh = h.n
    edges: list[Edge] = []
    for gu, gv, gs in g.edges:  # gu < gv, so flattened endpoints stay ordered
        for hx in range(nh):
            for hy in range(nh):
                edges.append((gu * nh + hx, gv * nh + hy, gs))
    for gu in range(g.n):
        base = gu * nh
        for hx, hy, hs in h.edges:
            edges.append((base + hx, base + hy, hs))
    return SignedGraph(g.n * nh, frozenset(edges))


def blowup_complete(g: SignedGraph, k: int) -> SignedGraph:
    """Replace each vertex by an all-positive K_k fiber: g[K_k]."""
    if k < 1:
        raise ZeroK(f"blow-up size must be >= 1, got {k}")
    return lex_product(g, complete_positive(k))


def neighborhood(graph: SignedGraph, k: Iterable[int]) -> set[int]:
    """N(K): vertices adjacent (either sign) to some vertex of K. Members
    of K appear only if adjacent to another member."""
    mask = 0
    for v in k:
        _check_vertex(v, graph.n)
        mask |= graph.adj[v]
    return {v for v in range(graph.n) if mask >> v & 1}


def closed_neighborhood(graph: SignedGraph, k: Iterable[int]) -> set[int]:
    """N[K] = N(K) united with K."""
    ks = set(k)
    return neighborhood(graph, ks) | ks


# -- SG v1 text format ----------------------------------------------------


def format_sg(graph: SignedGraph) -> str:
    """Canonical SG v1 serialization: edges ascending by (u, v)."""
    lines = ["sg 1", f"n {graph.n}"]
    for u, v, s in graph.sorted_edges():
        lines.append(f"{'+' if s == 1 else '-'} {u} {v}")
    return "\n".join(lines) + "\n"


def parse_sg(text: str) -> SignedGraph:
    """Parse SG v1 text. Edge lines may appear in any order; '#' starts a
    comment; blank lines are ignored."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if len(rows) < 2:
        raise FormatError("missing header lines")
    if rows[0].split() != ["sg", "1"]:
        raise FormatError(f"bad version line: {rows[0]!r}")
    head = rows[1].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise FormatError(f"bad vertex-count line: {rows[1]!r}")
    n = int(head[1])
    positive, negative = [], []
    for line in rows[2:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in "+-":
            raise FormatError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"bad edge line: {line!r}") from None
        (positive if parts[0] == "+" else negative).append((u, v))
    return build(n, positive, negative)


def write_sg(graph: SignedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_sg(graph))


def read_sg(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sg(fh.read())
