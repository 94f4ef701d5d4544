"""Command-line front end.

Exit codes: 0 on success, 2 on unreadable or malformed input (argparse
uses 2 for usage errors as well), 3 when an instance exceeds the
enumeration size limit. The SGFRAC_MAX_VERTICES environment variable
overrides the default limit of 20 vertices.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    BadParameters,
    FormatError,
    GraphError,
    SgfracError,
    SizeLimitExceeded,
)
from .fractional import chi_f, find_pq_coloring
from .graphs import (
    CirculantSpec,
    SignedGraph,
    circulant,
    direct_product,
    format_sg,
    lex_product,
    read_sg,
)
from .independence import alpha_s
from .rationals import format_rational
from . import suites
from .fractional import verify_product_theorem
from .report import Report


def _spec_from_args(args) -> CirculantSpec:
    return CirculantSpec(args.circulant, args.pos or (), args.neg or ())


def _load_graph(args) -> SignedGraph:
    if getattr(args, "circulant", None) is not None:
        return circulant(_spec_from_args(args))
    if getattr(args, "path", None):
        return read_sg(args.path)
    raise FormatError("provide a graph file or --circulant arguments")


def _add_graph_source(sub, positional_optional=True):
    sub.add_argument(
        "path", nargs="?" if positional_optional else None, help="SG v1 graph file"
    )
    sub.add_argument("--circulant", type=int, metavar="N", help="circulant order")
    sub.add_argument(
        "--pos", type=int, nargs="*", metavar="D", help="positive distances"
    )
    sub.add_argument(
        "--neg", type=int, nargs="*", metavar="D", help="negative distances"
    )


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_chi_f(args) -> int:
    graph = _load_graph(args)
    value, coloring = chi_f(graph, args.limit)
    print(f"chi_f={format_rational(value)}")
    if args.witness:
        for j in coloring.support():
            print(f"{j.label()};w={format_rational(coloring.weights[j])}")
    return 0


def cmd_alpha_s(args) -> int:
    graph = _load_graph(args)
    print(f"alpha_s={alpha_s(graph, args.limit)}")
    return 0


def cmd_circulant(args) -> int:
    graph = circulant(_spec_from_args(args))
    _emit(format_sg(graph), args.output)
    return 0


def cmd_product(args) -> int:
    left = read_sg(args.left)
    right = read_sg(args.right)
    combine = direct_product if args.kind == "direct" else lex_product
    _emit(format_sg(combine(left, right)), args.output)
    return 0


def cmd_coloring(args) -> int:
    graph = read_sg(args.path)
    witness = find_pq_coloring(graph, args.p, args.q)
    if witness is None:
        print("NONE")
        return 0
    print(f"p={witness.p} q={witness.q}")
    for v in range(graph.n):
        colors = ",".join(str(c) for c in sorted(witness.assignment[v]))
        print(f"{v}: {colors}")
    return 0


def cmd_verify(args) -> int:
    report: Report
    if args.suite == "duality":
        if args.graph_file:
            graph = read_sg(args.graph_file)
            report = Report([suites.duality_case(graph, f"duality {args.graph_file}", args.limit)])
        else:
            report = suites.duality_suite(args.circ_max_n, args.catalog_max, args.limit)
    elif args.suite == "lemma1":
        report = suites.lemma1_suite(args.max_n, args.max_terms, args.limit)
    elif args.suite == "theorem":
        if args.left_file:
            graph = read_sg(args.left_file)
            spec = CirculantSpec(args.n, args.pos or (), args.neg or ())
            report = verify_product_theorem(
                graph, spec, args.limit, witnesses=args.witness
            )
        else:
            report = suites.theorem_suite(
                args.catalog_max, args.circ_max_n, args.max_product, args.limit
            )
    elif args.suite == "alpha-product":
        report = suites.alpha_product_suite(args.max_nm, args.limit)
    elif args.suite == "lex-lemma":
        report = suites.lex_lemma_suite(args.max_vertices, args.max_k)
    elif args.suite == "persistence":
        report = suites.persistence_suite(args.circ_max_n, args.family_max, args.limit)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.suite)
    sys.stdout.write(report.render())
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgfrac",
        description="Exact fractional coloring computations for signed graphs.",
    )
    parser.add_argument(
        "--limit",
        type=int,
        default=None,
        help="override the enumeration vertex limit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi-f", help="fractional chromatic number of a graph")
    _add_graph_source(p)
    p.add_argument("--witness", action="store_true", help="print the optimal weighting")
    p.set_defaults(func=cmd_chi_f)

    p = sub.add_parser("alpha-s", help="signed independence number")
    _add_graph_source(p)
    p.set_defaults(func=cmd_alpha_s)

    p = sub.add_parser("circulant", help="write a circulant graph as SG v1")
    p.add_argument("circulant", type=int, metavar="N", help="order")
    p.add_argument("--pos", type=int, nargs="*", metavar="D")
    p.add_argument("--neg", type=int, nargs="*", metavar="D")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_circulant)

    p = sub.add_parser("product", help="direct or lexicographic product")
    p.add_argument("--kind", choices=("direct", "lex"), default="direct")
    p.add_argument("left", help="left factor SG v1 file")
    p.add_argument("right", help="right factor SG v1 file")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coloring", help="search for a (p/q)-coloring")
    p.add_argument("path", help="SG v1 graph file")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(func=cmd_coloring)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "suite",
        choices=(
            "theorem",
            "lemma1",
            "alpha-product",
            "duality",
            "lex-lemma",
            "persistence",
        ),
    )
    p.add_argument("--graph-file", help="single graph for the duality suite")
    p.add_argument("--left-file", help="left factor for a single theorem case")
    p.add_argument("--n", type=int, help="circulant order for a single theorem case")
    p.add_argument("--pos", type=int, nargs="*", metavar="D")
    p.add_argument("--neg", type=int, nargs="*", metavar="D")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--circ-max-n", type=int, default=None)
    p.add_argument("--catalog-max", type=int, default=4)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--max-product", type=int, default=20)
    p.add_argument("--max-nm", type=int, default=20)
    p.add_argument("--max-vertices", type=int, default=3)
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--family-max", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "circ_max_n", None) is None and hasattr(args, "circ_max_n"):
        args.circ_max_n = {"duality": 8, "persistence": 6}.get(args.suite, 5)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (FormatError, GraphError, BadParameters, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SgfracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
