"""Signed-graph homomorphisms: sign-preserving maps, switching variants,
and the blow-up comparison harness for products.

Two notions are implemented. A sign-preserving homomorphism sends every
edge to an edge of the same sign. A switching homomorphism allows resigning
the source at some vertex set first; since chi_f is invariant under
switching, the switching variant is the natural one for monotonicity
arguments, while the sign-preserving check is the primitive both build on.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .errors import SizeLimitExceeded
from .fractional import chi_signed
from .graphs import (
    SignedGraph,
    VertexMap,
    blowup_complete,
    direct_product,
    switch,
)
from .report import Case, Report

SEARCH_LIMIT = 10


def is_sign_hom(g: SignedGraph, h: SignedGraph, vmap: VertexMap) -> bool:
    """Every edge of g must land on an h-edge of the same sign (so no edge
    may collapse to a single vertex)."""
    if vmap.domain != g.n or vmap.codomain != h.n:
        return False
    for u, v, sign in g.edges:
        iu, iv = vmap(u), vmap(v)
        if iu == iv or h.sign(iu, iv) != sign:
            return False
    return True


def _map_search(g: SignedGraph, h: SignedGraph) -> Optional[VertexMap]:
    """First sign-preserving homomorphism in lexicographic image order."""
    images: list[int] = []

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for w in range(h.n):
            ok = True
            for u in range(v):
                sign = g.sign(u, v)
                if sign != 0 and (images[u] == w or h.sign(images[u], w) != sign):
                    ok = False
                    break
            if ok:
                images.append(w)
                if place(v + 1):
                    return True
                images.pop()
        return False

    if not place(0):
        return None
    return VertexMap(g.n, h.n, tuple(images))


def find_switching_hom(
    g: SignedGraph, h: SignedGraph
) -> Optional[tuple[frozenset[int], VertexMap]]:
    """Search all switchings of g (smallest bitmask first, vertex 0 never
    switched since X and its complement resign identically) and, per
    switching, all maps in lexicographic order. Deterministic."""
    if g.n > SEARCH_LIMIT or h.n > SEARCH_LIMIT:
        raise SizeLimitExceeded(
            f"switching-homomorphism search capped at {SEARCH_LIMIT} vertices"
        )
    if g.n == 0:
        return frozenset(), VertexMap(0, h.n, ())
    free = range(1, g.n)
    for xmask in range(1 << (g.n - 1)):
        xset = frozenset(v for i, v in enumerate(free) if xmask >> i & 1)
        vmap = _map_search(switch(g, xset), h)
        if vmap is not None:
            return xset, vmap
    return None


def format_hom_witness(xset: frozenset[int], vmap: VertexMap) -> str:
    arrows = " ".join(f"{v}->{vmap(v)}" for v in range(vmap.domain))
    inner = ", ".join(str(v) for v in sorted(xset))
    return f"map: {arrows}\nswitch: {{{inner}}}"


def lex_lemma_map(ng: int, nh: int, k: int) -> VertexMap:
    """The triple-to-quadruple embedding (g, h, i) -> (g, i, h, i) between
    the two blown-up products, under the flat index convention."""
    images = []
    for gv in range(ng):
        for hv in range(nh):
            for i in range(k):
                images.append((gv * k + i) * (nh * k) + hv * k + i)
    return VertexMap(ng * nh * k, ng * k * nh * k, tuple(images))


def verify_lex_lemma_map(
    g: SignedGraph,
    h: SignedGraph,
    k: int,
    chi_limit: int = 10,
    label: str = "",
) -> Report:
    """Build (GxH)[K_k] and G[K_k] x H[K_k], check the explicit map is a
    sign-preserving homomorphism, and when both sides are small enough
    compare their signed chromatic numbers."""
    left = blowup_complete(direct_product(g, h), k)
    right = direct_product(blowup_complete(g, k), blowup_complete(h, k))
    vmap = lex_lemma_map(g.n, h.n, k)
    hom_ok = is_sign_hom(left, right, vmap)
    values = {
        "left_vertices": str(left.n),
        "right_vertices": str(right.n),
        "hom": "yes" if hom_ok else "no",
    }
    passed = hom_ok
    if left.n <= chi_limit and right.n <= chi_limit:
        chi_left = chi_signed(left)
        chi_right = chi_signed(right)
        values["chi_left"] = str(chi_left)
        values["chi_right"] = str(chi_right)
        values["chi_le"] = "yes" if chi_left <= chi_right else "no"
        passed = passed and chi_left <= chi_right
    name = label or f"lex-lemma |G|={g.n} |H|={h.n} k={k}"
    return Report([Case(name, values, passed)])
