"""Fractional chromatic and clique numbers of signed graphs.

chi_f is the optimum of the exact covering LP over signed independent
sets: minimize the total weight w over maximal pairs subject to, for every
vertex v, sum_J d(v, J) * w(J) >= 1, where d is the 0/0.5/1 incidence of v
in the pair. The dual of the same solve maximizes the vertex weighting
theta subject to sum_v d(v, J) * theta(v) <= 1 for every pair, which is
the fractional clique number w_f; the two optima agree exactly by strong
duality and both certificates are returned.

Set colorings give the combinatorial side: a (p/q)-coloring assigns
q-subsets of {0..p-1} (p even, p >= 2q) so that sets on a positive edge
are disjoint and sets on a negative edge avoid each other's antipodal
shift by p/2. Each coloring witnesses chi_f <= p/q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .errors import BadParameters, SizeLimitExceeded, UnknownSet
from .graphs import CirculantSpec, SignedGraph, circulant, direct_product
from .independence import (
    SignedIndependentSet,
    alpha_s,
    distinct_columns,
    enumerate_maximal,
    is_signed_independent,
    mask_from,
)
from .limits import vertex_limit
from .lp import LpProblem, LpStatus, Sense, solve, verify_certificate
from .rationals import HALF, ONE, ZERO, Rational, format_rational
from .report import Case, Report


@dataclass(frozen=True)
class FractionalColoring:
    """Nonnegative weighting of signed independent sets of a host graph."""

    host: SignedGraph
    weights: Mapping[SignedIndependentSet, object]

    def total_weight(self):
        return sum(self.weights.values(), ZERO)

    def support(self) -> list[SignedIndependentSet]:
        return sorted(self.weights, key=lambda j: j.masks())


@dataclass(frozen=True)
class FractionalClique:
    """Vertex weighting theta of a host graph, one value per vertex."""

    host: SignedGraph
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.host.n:
            raise BadParameters("one value per vertex required")

    def __call__(self, v: int):
        return self.values[v]

    @property
    def weight(self):
        return sum(self.values, ZERO)

    def set_weight(self, vertices: Iterable[int]):
        """Plain sum of theta over a vertex subset."""
        return sum((self.values[v] for v in vertices), ZERO)

    def support(self) -> list[int]:
        return [v for v in range(self.host.n) if self.values[v] > 0]


@dataclass(frozen=True)
class SetColoring:
    """Assignment of q-subsets of {0..p-1} to vertices, p even, p >= 2q."""

    p: int
    q: int
    assignment: tuple

    def __post_init__(self):
        if self.p % 2 != 0 or self.q < 1 or self.p < 2 * self.q:
            raise BadParameters(f"need even p >= 2q >= 2, got p={self.p} q={self.q}")
        for colors in self.assignment:
            if len(colors) != self.q:
                raise BadParameters("every vertex needs exactly q colors")
            for c in colors:
                if not 0 <= c < self.p:
                    raise BadParameters(f"color {c} not in 0..{self.p - 1}")

    def antipode(self, v: int) -> frozenset[int]:
        half = self.p // 2
        return frozenset((c + half) % self.p for c in self.assignment[v])


# -- the covering LP --------------------------------------------------------


@lru_cache(maxsize=4096)
def _cover_lp(graph: SignedGraph, limit: int | None):
    """Solve the covering LP once per graph; share primal and dual."""
    cols = distinct_columns(graph, limit)
    n = graph.n
    constraints = []
    for v in range(n):
        bit = 1 << v
        row = []
        for umask, imask, _ in cols:
            if imask & bit:
                row.append(ONE)
            elif umask & bit:
                row.append(HALF)
            else:
                row.append(ZERO)
        constraints.append((row, Sense.GE, ONE))
    problem = LpProblem.minimize([ONE] * len(cols), constraints)
    solution = solve(problem)
    if solution.status is not LpStatus.OPTIMAL:  # pragma: no cover
        raise ArithmeticError(f"covering LP ended {solution.status}")
    if not verify_certificate(problem, solution):  # pragma: no cover
        raise ArithmeticError("covering LP certificate failed self-check")
    weights = {
        rep: w for (_, _, rep), w in zip(cols, solution.primal) if w != 0
    }
    coloring = FractionalColoring(graph, weights)
    clique = FractionalClique(graph, tuple(solution.dual))
    return solution.objective, coloring, clique


def chi_f(graph: SignedGraph, limit: int | None = None):
    """Fractional chromatic number with an optimal weighting witness."""
    value, coloring, _ = _cover_lp(graph, limit)
    return value, coloring


def w_f(graph: SignedGraph, limit: int | None = None):
    """Fractional clique number with an optimal vertex weighting; equals
    chi_f exactly (read from the dual of the same solve)."""
    value, _, clique = _cover_lp(graph, limit)
    return value, clique


def validate_coloring(graph: SignedGraph, coloring: FractionalColoring) -> bool:
    """Exact feasibility check; raises UnknownSet if any support pair is
    not signed independent in the graph."""
    totals = [ZERO] * graph.n
    for j, w in coloring.weights.items():
        if not is_signed_independent(graph, j.a, j.b):
            raise UnknownSet(f"{j.label()} is not signed independent here")
        if w < 0:
            return False
        for v in j.a:
            totals[v] += w * HALF
        for v in j.b:
            totals[v] += w * HALF
    return all(t >= 1 for t in totals)


def validate_clique(
    graph: SignedGraph, clique: FractionalClique, limit: int | None = None
) -> bool:
    """theta lies in [0,1] and no signed independent set is overweighted;
    checking maximal pairs suffices since coverage only grows with the pair."""
    if any(t < 0 or t > 1 for t in clique.values):
        return False
    for umask, imask, _ in distinct_columns(graph, limit):
        load = ZERO
        for v in range(graph.n):
            bit = 1 << v
            if imask & bit:
                load += clique.values[v]
            elif umask & bit:
                load += clique.values[v] * HALF
        if load > 1:
            return False
    return True


def chi_f_circulant(spec: CirculantSpec, limit: int | None = None):
    """Closed form for circulants: 2n over the signed independence number.
    Independent of the LP code path."""
    graph = circulant(spec)
    return Rational(2 * spec.n, alpha_s(graph, limit))


# -- (p/q) set colorings -----------------------------------------------------


def _degeneracy_order(graph: SignedGraph) -> list[int]:
    """Smallest-last elimination order, reversed, so each vertex is placed
    after most of its neighbors; ties broken by vertex index."""
    remaining = set(range(graph.n))
    degree = {v: graph.adj[v].bit_count() for v in remaining}
    removed = []
    while remaining:
        v = min(remaining, key=lambda u: (degree[u], u))
        remaining.discard(v)
        removed.append(v)
        for u in remaining:
            if graph.adj[v] >> u & 1:
                degree[u] -= 1
    removed.reverse()
    return removed


def find_pq_coloring(
    graph: SignedGraph, p: int, q: int
) -> Optional[SetColoring]:
    """Deterministic backtracking search for a (p/q)-coloring: vertices in
    degeneracy order, candidate q-subsets in lexicographic order."""
    if p % 2 != 0 or q < 1 or p < 2 * q:
        raise BadParameters(f"need even p >= 2q >= 2, got p={p} q={q}")
    order = _degeneracy_order(graph)
    candidates = [frozenset(c) for c in itertools.combinations(range(p), q)]
    half = p // 2
    shifted = {c: frozenset((x + half) % p for x in c) for c in candidates}
    assigned: dict[int, frozenset[int]] = {}

    def compatible(v: int, colors: frozenset[int]) -> bool:
        for u, f_u in assigned.items():
            sign = graph.sign(u, v)
            if sign == 1 and colors & f_u:
                return False
            if sign == -1 and colors & shifted[f_u]:
                return False
        return True

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for colors in candidates:
            if compatible(v, colors):
                assigned[v] = colors
                if place(idx + 1):
                    return True
                del assigned[v]
        return False

    if not place(0):
        return None
    return SetColoring(p, q, tuple(assigned[v] for v in range(graph.n)))


def validate_pq(graph: SignedGraph, coloring: SetColoring) -> bool:
    """Both edge clauses, checked exactly on every edge."""
    if len(coloring.assignment) != graph.n:
        return False
    for u, v, sign in graph.edges:
        fu, fv = coloring.assignment[u], coloring.assignment[v]
        if sign == 1 and fu & fv:
            return False
        if sign == -1 and fu & coloring.antipode(v):
            return False
    return True


def is_circular(coloring: SetColoring) -> bool:
    """Whether every image set is a cyclic interval {i, .., i+q-1} mod p."""
    p, q = coloring.p, coloring.q
    intervals = {frozenset((i + k) % p for k in range(q)) for i in range(p)}
    return all(colors in intervals for colors in coloring.assignment)


def evenized_optimum(value) -> tuple[int, int]:
    """Reduce a rational chi_f to (p, q) with p even: double when the
    reduced numerator is odd."""
    p, q = value.numerator, value.denominator
    if p % 2 != 0:
        p, q = 2 * p, 2 * q
    return int(p), int(q)


def chi_signed(graph: SignedGraph, limit: int | None = None) -> int:
    """Least even p admitting a (p/1)-coloring. A spread-out assignment
    always succeeds by p = 4n, so the search is bounded."""
    cap = vertex_limit(limit)
    if graph.n > cap:
        raise SizeLimitExceeded(f"{graph.n} vertices exceeds limit {cap}")
    bound = max(2, 4 * graph.n)
    for p in range(2, bound + 2, 2):
        if find_pq_coloring(graph, p, 1) is not None:
            return p
    raise ArithmeticError("no (p/1)-coloring up to the constructive bound")  # pragma: no cover


# -- theorem verification ----------------------------------------------------


def _witness_lines(coloring: FractionalColoring) -> str:
    return " | ".join(
        f"{j.label()};w={format_rational(w)}"
        for j, w in sorted(coloring.weights.items(), key=lambda kv: kv[0].masks())
    )


def verify_product_theorem(
    graph: SignedGraph,
    spec: CirculantSpec,
    limit: int | None = None,
    label: str = "",
    witnesses: bool = False,
) -> Report:
    """Compare chi_f of a direct product with a circulant against the
    smaller factor value, all three computed exactly."""
    right = circulant(spec)
    product = direct_product(graph, right)
    cap = vertex_limit(limit)
    if product.n > cap:
        raise SizeLimitExceeded(f"product has {product.n} vertices, limit {cap}")
    left_value, left_col = chi_f(graph, limit)
    right_value, right_col = chi_f(right, limit)
    product_value, product_col = chi_f(product, limit)
    expected = min(left_value, right_value)
    values = {
        "chi_f_left": format_rational(left_value),
        "chi_f_right": format_rational(right_value),
        "chi_f_product": format_rational(product_value),
        "min_factors": format_rational(expected),
    }
    if witnesses:
        values["witness_product"] = _witness_lines(product_col)
        values["witness_min_factor"] = _witness_lines(
            left_col if left_value <= right_value else right_col
        )
    name = label or f"theorem left=n{graph.n}/{graph.edge_count}e right={spec.label()}"
    return Report([Case(name, values, product_value == expected)])


def verify_alpha_product(
    spec_g: CirculantSpec, spec_h: CirculantSpec, limit: int | None = None
) -> Report:
    """Check alpha^s of a circulant direct product against the closed form
    max(alpha^s(G) * |V(H)|, alpha^s(H) * |V(G)|) by brute enumeration."""
    g, h = circulant(spec_g), circulant(spec_h)
    product = direct_product(g, h)
    cap = vertex_limit(limit)
    if product.n > cap:
        raise SizeLimitExceeded(f"product has {product.n} vertices, limit {cap}")
    ag, ah = alpha_s(g, limit), alpha_s(h, limit)
    formula = max(ag * h.n, ah * g.n)
    actual = alpha_s(product, limit)
    values = {
        "alpha_left": str(ag),
        "alpha_right": str(ah),
        "formula": str(formula),
        "alpha_product": str(actual),
    }
    name = f"alpha-product {spec_g.label()} x {spec_h.label()}"
    return Report([Case(name, values, actual == formula)])
