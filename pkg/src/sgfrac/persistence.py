"""Persistence machinery for fractional cliques on product graphs.

The center of the module is the pairing value f(J) of a product signed
independent set J against cliques phi (left factor) and psi (right
factor):

    f(J) = sum over product vertices (u, x) of d((u,x), J) * phi(u) * psi(x)

with d the 0/0.5/1 incidence of the vertex in J. A vertex lying in both
components of J therefore contributes twice at half weight, matching the
size convention |J| = |A| + |B|. With this weighting, f(J) <= m for every
J is exactly the statement that phi*psi/m is a feasible fractional clique
of the product, which is what the persistence arguments need. The raw pair
sum (twice f) and the plain member sum over A | B are available as
alternative modes for sensitivity checks.
"""

from __future__ import annotations

from typing import Sequence

from .errors import HostMismatch, InfeasibleClique, SizeLimitExceeded, UnknownSet
from .fractional import FractionalClique, validate_clique, w_f
from .graphs import SignedGraph, direct_product, neighborhood
from .independence import (
    SignedIndependentSet,
    _maximal_pair_masks,
    is_signed_independent,
)
from .limits import vertex_limit
from .rationals import HALF, ZERO, format_rational
from .report import Case, Report

SUPPORT_LIMIT = 16


def _pair_sum(j: SignedIndependentSet, phi: FractionalClique, psi: FractionalClique):
    nh = psi.host.n
    total = ZERO
    for part in (j.a, j.b):
        for w in part:
            total += phi.values[w // nh] * psi.values[w % nh]
    return total


def f_phi_psi(
    j: SignedIndependentSet,
    phi: FractionalClique,
    psi: FractionalClique,
    mode: str = "incidence",
):
    """Pairing value of a product pair J against factor cliques.

    mode "incidence" (default) weights each product vertex by its 0/0.5/1
    incidence in J; "pair" sums phi*psi once per occurrence in A and in B
    (twice the default); "members" sums once per vertex of A | B.
    """
    n_product = phi.host.n * psi.host.n
    for w in j.a | j.b:
        if not 0 <= w < n_product:
            raise HostMismatch(f"vertex {w} outside the product of the hosts")
    if mode == "incidence":
        return _pair_sum(j, phi, psi) * HALF
    if mode == "pair":
        return _pair_sum(j, phi, psi)
    if mode == "members":
        nh = psi.host.n
        return sum(
            (phi.values[w // nh] * psi.values[w % nh] for w in j.a | j.b), ZERO
        )
    raise ValueError(f"unknown mode {mode!r}")


def _require_feasible(h: SignedGraph, psi: FractionalClique) -> None:
    if psi.host != h:
        raise HostMismatch("clique belongs to a different host graph")
    if not validate_clique(h, psi):
        raise InfeasibleClique("vertex weighting is not a feasible clique")


def is_local_clique(h: SignedGraph, psi: FractionalClique) -> bool:
    """Every supported vertex sees exactly the rest of the weight:
    psi(N(u)) = s - psi(u) whenever psi(u) > 0."""
    _require_feasible(h, psi)
    s = psi.weight
    for u in psi.support():
        if psi.set_weight(neighborhood(h, [u])) != s - psi.values[u]:
            return False
    return True


def is_restricted_clique(h: SignedGraph, psi: FractionalClique) -> bool:
    """psi(N(K)) >= min(s, s - 2 + psi(K)) for every K with psi(K) > 0.

    Only subsets of the support need checking: vertices outside the
    support add nothing to psi(K) and can only enlarge N(K)."""
    _require_feasible(h, psi)
    support = psi.support()
    if len(support) > SUPPORT_LIMIT:
        raise SizeLimitExceeded(
            f"support of size {len(support)} exceeds {SUPPORT_LIMIT}"
        )
    s = psi.weight
    for mask in range(1, 1 << len(support)):
        k = [support[i] for i in range(len(support)) if mask >> i & 1]
        pk = psi.set_weight(k)
        bound = min(s, s - 2 + pk)
        if psi.set_weight(neighborhood(h, k)) < bound:
            return False
    return True


def fiber_weights(
    g: SignedGraph, h: SignedGraph, j: SignedIndependentSet, psi: FractionalClique
) -> list:
    """Incidence-weighted psi mass of every fiber J_u of the product pair."""
    totals = [ZERO] * g.n
    for part in (j.a, j.b):
        for w in part:
            totals[w // h.n] += psi.values[w % h.n] * HALF
    return totals


def check_fiber_condition(
    g: SignedGraph,
    h: SignedGraph,
    j: SignedIndependentSet,
    psi: FractionalClique,
) -> list[tuple[int, int]]:
    """Ordered pairs (u, u') adjacent in g whose fibers jointly carry psi
    mass above 2; an empty list means the adjacency bound is respected."""
    if psi.host != h:
        raise HostMismatch("clique belongs to a different host graph")
    product = direct_product(g, h)
    if not is_signed_independent(product, j.a, j.b):
        raise UnknownSet("pair is not signed independent in the product")
    weights = fiber_weights(g, h, j, psi)
    violations = []
    for u in range(g.n):
        for v in range(g.n):
            if u != v and g.adj[u] >> v & 1 and weights[u] + weights[v] > 2:
                violations.append((u, v))
    return violations


def _scan_product(
    g: SignedGraph,
    h: SignedGraph,
    phi: FractionalClique,
    psi: FractionalClique,
    limit: int | None,
):
    """One pass over all maximal pairs of g x h: the largest pairing value
    with its witness masks, plus the count of fiber adjacency violations.

    Works on the cached mask representation; for each pair the per-fiber
    psi masses determine both quantities (f is their phi-weighted sum).
    """
    product = direct_product(g, h)
    cap = vertex_limit(limit)
    if product.n > cap:
        raise SizeLimitExceeded(f"product has {product.n} vertices, limit {cap}")
    nh = h.n
    psi_half = [v * HALF for v in psi.values]
    phi_vals = phi.values
    adjacent = [
        (u, v) for u in range(g.n) for v in range(g.n) if u != v and g.adj[u] >> v & 1
    ]
    worst = ZERO
    worst_masks = None
    violations = 0
    for amask, bmask in _maximal_pair_masks(product):
        fw = [ZERO] * g.n
        for mask in (amask, bmask):
            while mask:
                low = mask & -mask
                w = low.bit_length() - 1
                mask ^= low
                fw[w // nh] += psi_half[w % nh]
        value = ZERO
        for u in range(g.n):
            if fw[u]:
                value += phi_vals[u] * fw[u]
        if worst_masks is None or value > worst:
            worst = value
            worst_masks = (amask, bmask)
        for u, v in adjacent:
            if fw[u] + fw[v] > 2:
                violations += 1
    return worst, worst_masks, violations


def verify_persistence(
    h: SignedGraph,
    psi: FractionalClique,
    family: Sequence[SignedGraph],
    limit: int | None = None,
) -> Report:
    """Desk-scale persistence check of psi against a family of left
    factors: with phi the optimal dual clique of each G, the pairing value
    of every maximal product pair must stay within max(w_f(G), w_f(H)).
    Fiber adjacency violations from the same sweep are surfaced in the
    case values (informational; the verdict is the pairing bound)."""
    _require_feasible(h, psi)
    wh = w_f(h, limit)[0]
    report = Report()
    for idx, g in enumerate(family):
        wg, phi = w_f(g, limit)
        bound = max(wg, wh)
        worst, worst_masks, fiber_bad = _scan_product(g, h, phi, psi, limit)
        worst_label = (
            SignedIndependentSet.from_masks(*worst_masks).label()
            if worst_masks is not None
            else "-"
        )
        values = {
            "w_f_left": format_rational(wg),
            "w_f_right": format_rational(wh),
            "bound": format_rational(bound),
            "worst_f": format_rational(worst),
            "worst_set": worst_label,
            "fiber_violations": str(fiber_bad),
        }
        label = f"persistence G#{idx}(n={g.n},m={g.edge_count}) vs H(n={h.n})"
        report.add(Case(label, values, worst <= bound))
    return report
