"""Exhaustive catalogs of small instances for verification sweeps.

Signed graphs are generated by assigning absent/positive/negative to every
vertex pair and deduplicated up to signed isomorphism (a vertex permutation
preserving adjacency and signs) by brute-force canonical forms; this is
only meant for very small vertex counts. Circulant specs enumerate in a
fixed documented order: n ascending, then S, then T by lexicographic
tuple order.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .graphs import CirculantSpec, SignedGraph, build

Encoding = tuple[tuple[int, int, int], ...]


def canonical_encoding(graph: SignedGraph) -> Encoding:
    """Smallest edge-triple tuple over all vertex relabelings."""
    best: Encoding | None = None
    edges = list(graph.edges)
    for perm in itertools.permutations(range(graph.n)):
        enc = tuple(
            sorted(
                (min(perm[u], perm[v]), max(perm[u], perm[v]), s)
                for u, v, s in edges
            )
        )
        if best is None or enc < best:
            best = enc
    return best if best is not None else ()


def are_signed_isomorphic(g: SignedGraph, h: SignedGraph) -> bool:
    return g.n == h.n and canonical_encoding(g) == canonical_encoding(h)


def signed_graphs_exactly(n: int) -> list[SignedGraph]:
    """All signed graphs on n vertices up to signed isomorphism, in
    canonical-encoding order."""
    pairs = list(itertools.combinations(range(n), 2))
    seen: dict[Encoding, SignedGraph] = {}
    for signs in itertools.product((0, 1, -1), repeat=len(pairs)):
        edges = frozenset(
            (u, v, s) for (u, v), s in zip(pairs, signs) if s != 0
        )
        graph = SignedGraph(n, edges)
        enc = canonical_encoding(graph)
        if enc not in seen:
            seen[enc] = graph
    return [seen[enc] for enc in sorted(seen)]


def signed_graphs_up_to(n: int) -> list[SignedGraph]:
    out: list[SignedGraph] = []
    for k in range(1, n + 1):
        out.extend(signed_graphs_exactly(k))
    return out


def subsets_lex(universe: Iterable[int]) -> list[tuple[int, ...]]:
    """All subsets as sorted tuples, in lexicographic tuple order."""
    items = sorted(universe)
    all_subsets = [
        combo for r in range(len(items) + 1) for combo in itertools.combinations(items, r)
    ]
    return sorted(all_subsets)


def circulant_specs(n: int, max_terms: int | None = None) -> list[CirculantSpec]:
    """Every disjoint (S, T) pair over 1..floor(n/2), S then T in
    lexicographic order, optionally capped at |S| + |T| <= max_terms."""
    universe = range(1, n // 2 + 1)
    out: list[CirculantSpec] = []
    for s in subsets_lex(universe):
        rest = [d for d in universe if d not in s]
        for t in subsets_lex(rest):
            if max_terms is not None and len(s) + len(t) > max_terms:
                continue
            out.append(CirculantSpec(n, s, t))
    return out


def circulant_sweep(
    min_n: int, max_n: int, max_terms: int | None = None
) -> Iterator[CirculantSpec]:
    for n in range(min_n, max_n + 1):
        yield from circulant_specs(n, max_terms)
