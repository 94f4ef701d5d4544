"""Batch verification sweeps over small-instance catalogs.

Each suite runs one family of checks over a canonical instance order and
returns a Report; the CLI and the acceptance tests both drive these.
"""

from __future__ import annotations

from typing import Sequence

from .catalog import circulant_sweep, signed_graphs_up_to
from .fractional import (
    chi_f,
    chi_f_circulant,
    validate_clique,
    validate_coloring,
    verify_alpha_product,
    verify_product_theorem,
    w_f,
)
from .graphs import SignedGraph, circulant
from .homomorphism import verify_lex_lemma_map
from .persistence import verify_persistence
from .rationals import format_rational
from .report import Case, Report


def _graph_tag(graph: SignedGraph, idx: int) -> str:
    return f"g{idx}(n={graph.n},+{len(graph.positive_edges())},-{len(graph.negative_edges())})"


def duality_case(graph: SignedGraph, label: str, limit: int | None = None) -> Case:
    chi, coloring = chi_f(graph, limit)
    weight, clique = w_f(graph, limit)
    ok = (
        chi == weight
        and validate_coloring(graph, coloring)
        and validate_clique(graph, clique, limit)
        and coloring.total_weight() == chi
        and clique.weight == weight
    )
    values = {"chi_f": format_rational(chi), "w_f": format_rational(weight)}
    return Case(label, values, ok)


def duality_suite(
    circ_max_n: int = 8, catalog_max: int = 4, limit: int | None = None
) -> Report:
    """chi_f equals w_f exactly, with both certificates validating."""
    report = Report()
    for spec in circulant_sweep(3, circ_max_n):
        report.add(duality_case(circulant(spec), f"duality {spec.label()}", limit))
    for idx, graph in enumerate(signed_graphs_up_to(catalog_max)):
        report.add(duality_case(graph, f"duality {_graph_tag(graph, idx)}", limit))
    return report


def lemma1_suite(
    max_n: int = 8, max_terms: int | None = None, limit: int | None = None
) -> Report:
    """LP chi_f of every circulant equals the 2n/alpha^s closed form."""
    report = Report()
    for spec in circulant_sweep(3, max_n, max_terms):
        formula = chi_f_circulant(spec, limit)
        lp_value = chi_f(circulant(spec), limit)[0]
        values = {
            "formula": format_rational(formula),
            "lp": format_rational(lp_value),
        }
        report.add(Case(f"lemma1 {spec.label()}", values, formula == lp_value))
    return report


def theorem_suite(
    catalog_max: int = 4,
    circ_max_n: int = 5,
    max_product: int = 20,
    limit: int | None = None,
) -> Report:
    """Product chi_f equals the minimum factor chi_f for every catalog
    graph against every circulant, products capped by vertex count."""
    report = Report()
    graphs = signed_graphs_up_to(catalog_max)
    specs = [s for n in range(3, circ_max_n + 1) for s in circulant_sweep(n, n)]
    for spec in specs:
        for idx, graph in enumerate(graphs):
            if graph.n * spec.n > max_product:
                continue
            label = f"theorem {_graph_tag(graph, idx)} x {spec.label()}"
            report.extend(verify_product_theorem(graph, spec, limit, label=label))
    return report


def alpha_product_suite(max_nm: int = 20, limit: int | None = None) -> Report:
    """Closed-form alpha^s of circulant products against brute force."""
    report = Report()
    specs = list(circulant_sweep(3, max_nm // 3))
    for spec_g in specs:
        for spec_h in specs:
            if spec_g.n * spec_h.n > max_nm:
                continue
            report.extend(verify_alpha_product(spec_g, spec_h, limit))
    return report


def lex_lemma_suite(max_vertices: int = 3, max_k: int = 2) -> Report:
    """The explicit blow-up map is a sign-preserving homomorphism for all
    catalog pairs and blow-up sizes."""
    report = Report()
    graphs = signed_graphs_up_to(max_vertices)
    for k in range(1, max_k + 1):
        for i, g in enumerate(graphs):
            for j, h in enumerate(graphs):
                label = f"lex-lemma {_graph_tag(g, i)} x {_graph_tag(h, j)} k={k}"
                report.extend(verify_lex_lemma_map(g, h, k, chi_limit=0, label=label))
    return report


def persistence_suite(
    circ_max_n: int = 6,
    family_max: int = 3,
    limit: int | None = None,
) -> Report:
    """Optimal dual cliques of circulants against the small-graph family:
    the persistence bound and the fiber adjacency bound, checked over
    every maximal product pair."""
    family = signed_graphs_up_to(family_max)
    report = Report()
    for spec in circulant_sweep(3, circ_max_n):
        h = circulant(spec)
        psi = w_f(h, limit)[1]
        sub = verify_persistence(h, psi, family, limit)
        for idx, case in enumerate(sub.cases):
            label = f"persistence {spec.label()} vs g{idx}(n={family[idx].n})"
            fiber_clean = case.values["fiber_violations"] == "0"
            report.add(Case(label, case.values, case.passed and fiber_clean))
    return report
