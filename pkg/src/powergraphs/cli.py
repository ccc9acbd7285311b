"""Command-line interface.

Exit codes: 0 success or verified, 1 semantic negative (graphs not
isomorphic, verification failure), 2 usage or input error.  Results go to
standard output, diagnostics to standard error.
"""

import argparse
import sys
from math import lcm
from pathlib import Path

from .graphs import EXPORT_FORMATS, are_isomorphic, export, graph_from_json, has_universal_vertex
from .groupspec import parse_group_spec
from .power import PowerGraphBundle, power_graph_bundle
from .products import (
    PRODUCT_KINDS,
    cartesian_product_graph,
    direct_product_graph,
    generalized_product_graph,
    normal_product_graph,
)
from .progressions import SENTINEL
from .verify import (
    DEFAULT_MAX_ORDER,
    DEFAULT_SEED,
    check_power_product_pair,
    format_reports,
    verify_all,
)

GROUP_SPEC_HELP = (
    "Group specs: C<n> cyclic, D<n> dihedral of order 2n, S<n> symmetric "
    "(n <= 5), Q8 quaternion, cayley:<path> a Cayley table file; atoms "
    "joined by 'x' denote direct products, e.g. C2xC2 or D4xQ8."
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powergraphs",
        description="Power graphs of finite groups and their products.",
        epilog=GROUP_SPEC_HELP)
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="print the power graph of a group",
                             epilog=GROUP_SPEC_HELP)
    p_build.add_argument("spec", help="group spec, e.g. C6 or C2xC2")
    _add_format(p_build)
    _add_dump_weights(p_build)
    p_build.set_defaults(func=_cmd_build)

    p_product = sub.add_parser(
        "product",
        help="print a product of two power graphs",
        epilog="The generalized product uses the factor groups' power weights. "
               + GROUP_SPEC_HELP)
    p_product.add_argument("kind", choices=PRODUCT_KINDS)
    p_product.add_argument("spec1")
    p_product.add_argument("spec2")
    _add_format(p_product)
    _add_dump_weights(p_product)
    p_product.set_defaults(func=_cmd_product)

    p_theorem = sub.add_parser(
        "verify-theorem",
        help="check that the power graph of a direct product equals the "
             "weighted product of the factor power graphs")
    p_theorem.add_argument("spec1")
    p_theorem.add_argument("spec2")
    p_theorem.set_defaults(func=_cmd_verify_theorem)

    p_all = sub.add_parser("verify-all",
                           help="run every verification sweep over the built-in family")
    p_all.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                       help="cap on group and product orders (default %(default)s)")
    p_all.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help="seed for the random-graph suites (default %(default)s)")
    p_all.set_defaults(func=_cmd_verify_all)

    p_iso = sub.add_parser("iso", help="test two json graph files for isomorphism")
    p_iso.add_argument("file1")
    p_iso.add_argument("file2")
    p_iso.set_defaults(func=_cmd_iso)

    p_stats = sub.add_parser("stats", help="print group and power graph statistics")
    p_stats.add_argument("spec")
    p_stats.set_defaults(func=_cmd_stats)

    return parser


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=EXPORT_FORMATS, default="edgelist",
                        help="output format (default %(default)s)")


def _add_dump_weights(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dump-weights", action="store_true",
                        help="print the exponent weight table(s) instead of the graph")


def _format_weights(bundle: PowerGraphBundle) -> str:
    lines = []
    for u in range(bundle.group.order):
        for v in range(bundle.group.order):
            start, step = bundle.weights[u][v]
            lines.append(f"{u} {v} : ({start},{step})")
    return "\n".join(lines)


def _cmd_build(args: argparse.Namespace) -> int:
    bundle = power_graph_bundle(parse_group_spec(args.spec))
    if args.dump_weights:
        print(_format_weights(bundle))
    else:
        print(export(bundle.graph, args.format))
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    b1 = power_graph_bundle(parse_group_spec(args.spec1))
    b2 = power_graph_bundle(parse_group_spec(args.spec2))
    if args.dump_weights:
        print(f"# weights of P({b1.group.name})")
        print(_format_weights(b1))
        print(f"# weights of P({b2.group.name})")
        print(_format_weights(b2))
        return 0
    if args.kind == "generalized":
        result = generalized_product_graph(b1.graph, b1.weights, b2.graph, b2.weights)
    else:
        build = {"direct": direct_product_graph,
                 "cartesian": cartesian_product_graph,
                 "normal": normal_product_graph}[args.kind]
        result = build(b1.graph, b2.graph)
    print(export(result, args.format))
    return 0


def _cmd_verify_theorem(args: argparse.Namespace) -> int:
    g1 = parse_group_spec(args.spec1)
    g2 = parse_group_spec(args.spec2)
    result = check_power_product_pair(g1, g2)
    status = "PASS" if result.passed else "FAIL"
    print(f"power-product-identity [{result.subject}]: {status} ({result.detail})")
    return 0 if result.passed else 1


def _cmd_verify_all(args: argparse.Namespace) -> int:
    reports = verify_all(max_order=args.max_order, seed=args.seed)
    print(format_reports(reports, args.max_order, args.seed))
    for report in reports:
        print(f"# {report.claim}: {report.wall_time:.3f}s", file=sys.stderr)
    return 0 if all(report.passed for report in reports) else 1


def _cmd_iso(args: argparse.Namespace) -> int:
    a = graph_from_json(Path(args.file1).read_text())
    b = graph_from_json(Path(args.file2).read_text())
    iso, witness = are_isomorphic(a, b)
    if iso:
        print(" ".join(str(w) for w in witness))
        return 0
    print("not isomorphic")
    return 1


def _cmd_stats(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.spec)
    bundle = power_graph_bundle(group)
    graph = bundle.graph
    order_counts: dict[int, int] = {}
    for o in group.element_orders:
        order_counts[o] = order_counts.get(o, 0) + 1
    universal = sum(1 for v in range(graph.vertex_count)
                    if graph.degree(v) == graph.vertex_count - 1)
    print(f"group: {group.name}")
    print(f"order: {group.order}")
    print(f"identity: {group.element_names[group.identity]}")
    print(f"abelian: {'yes' if group.is_abelian() else 'no'}")
    print(f"exponent: {lcm(*group.element_orders)}")
    print("element orders: " + " ".join(f"{o}^{order_counts[o]}" for o in sorted(order_counts)))
    print(f"power graph edges: {graph.edge_count}")
    degrees = graph.degree_sequence()
    print(f"power graph degrees: min {degrees[0]}, max {degrees[-1]}")
    print(f"universal vertices: {universal}")
    print(f"has universal vertex: {'yes' if has_universal_vertex(graph) else 'no'}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
