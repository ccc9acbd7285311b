"""Verification sweeps over built-in group families and random graphs.

Each claim checks one exact statement about power graphs and products:

  power-product-identity   the power graph of G1 x G2 is labeled-equal to
                           the weighted product of P(G1) and P(G2) under
                           power weights
  cartesian-obstruction    for nontrivial factors the cartesian product is
                           never isomorphic to the power graph of the
                           product group (the power graph has a universal
                           vertex, the cartesian product cannot)
  exponent-window          brute-force exponent sets match progression
                           membership on the window [1, 3*o(a)]
  classical-weights-*      the weighted product reproduces the direct,
                           cartesian, and normal products under the
                           classical weight tables, on seeded random graphs

Failures never raise; they land in the report with a counterexample dump.
"""

import random
import time
from dataclasses import dataclass, field

from .graphs import SimpleGraph, are_isomorphic, graphs_equal_labeled, has_universal_vertex
from .groups import FiniteGroup, direct_product
from .groupspec import parse_group_spec
from .power import power_graph, power_graph_bundle, power_weights, exponent_set_window
from .products import (
    cartesian_product_graph,
    classical_weights,
    direct_product_graph,
    generalized_product_graph,
    normal_product_graph,
)
from .progressions import ap_contains

DEFAULT_MAX_ORDER = 36
DEFAULT_SEED = 0
RANDOM_TRIALS = 50
RANDOM_MAX_VERTICES = 8

FAMILY_SPECS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10",
                "C11", "C12", "C2xC2", "C2xC4", "D3", "D4", "D5", "Q8", "S3", "S4")


@dataclass
class InstanceResult:
    subject: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    claim: str
    instances: list[InstanceResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    def failures(self) -> list[InstanceResult]:
        return [inst for inst in self.instances if not inst.passed]


def family_groups(max_order: int = DEFAULT_MAX_ORDER) -> list[FiniteGroup]:
    """Built-in sweep family, restricted to groups of order <= max_order."""
    groups = [parse_group_spec(spec) for spec in FAMILY_SPECS]
    return [g for g in groups if g.order <= max_order]


def edge_set_difference(left: SimpleGraph, right: SimpleGraph) -> str:
    """Counterexample dump: the symmetric difference of the edge sets, labeled."""
    edges_left = set(left.edges())
    edges_right = set(right.edges())

    def fmt(graph: SimpleGraph, pairs: set[tuple[int, int]]) -> str:
        return "{" + ", ".join(f"{graph.labels[u]}--{graph.labels[v]}"
                               for u, v in sorted(pairs)) + "}"

    return (f"only in left: {fmt(left, edges_left - edges_right)}; "
            f"only in right: {fmt(right, edges_right - edges_left)}")


def check_power_product_pair(g1: FiniteGroup, g2: FiniteGroup) -> InstanceResult:
    """Power graph of the product group vs weighted product of the factor power graphs."""
    subject = f"{g1.name} x {g2.name}"
    left = power_graph(direct_product(g1, g2))
    b1 = power_graph_bundle(g1)
    b2 = power_graph_bundle(g2)
    right = generalized_product_graph(b1.graph, b1.weights, b2.graph, b2.weights)
    if graphs_equal_labeled(left, right):
        return InstanceResult(subject, True, f"{left.edge_count} edges on each side")
    return InstanceResult(
        subject, False,
        f"left has {left.edge_count} edges, right has {right.edge_count}; "
        + edge_set_difference(left, right))


def check_cartesian_obstruction(g1: FiniteGroup, g2: FiniteGroup) -> InstanceResult:
    """Non-isomorphism of P(G1 x G2) and the cartesian product, with certificates."""
    subject = f"{g1.name} x {g2.name}"
    pg = power_graph(direct_product(g1, g2))
    cart = cartesian_product_graph(power_graph(g1), power_graph(g2))
    iso, witness = are_isomorphic(pg, cart)
    problems = []
    if iso:
        problems.append(f"graphs are isomorphic via {witness}")
    if not has_universal_vertex(pg):
        problems.append("power graph lacks a universal vertex")
    if has_universal_vertex(cart):
        problems.append("cartesian product has a universal vertex")
    if problems:
        return InstanceResult(subject, False, "; ".join(problems))
    return InstanceResult(
        subject, True,
        f"power graph {pg.edge_count} edges with universal vertex, "
        f"cartesian {cart.edge_count} edges without")


def check_exponent_windows(g: FiniteGroup) -> InstanceResult:
    """Brute-force exponent sets vs progression membership, all ordered pairs."""
    weights = power_weights(g)
    for a in range(g.order):
        bound = 3 * g.element_orders[a]
        for b in range(g.order):
            brute = exponent_set_window(g, a, b, bound)
            via_ap = {m for m in range(1, bound + 1) if ap_contains(weights[a][b], m)}
            if brute != via_ap:
                return InstanceResult(
                    g.name, False,
                    f"pair ({g.element_names[a]}, {g.element_names[b]}): "
                    f"iteration gives {sorted(brute)}, progression gives {sorted(via_ap)}")
    return InstanceResult(g.name, True, f"{g.order * g.order} ordered pairs checked")


def random_graph(rng: random.Random, n: int, edge_probability: float = 0.5) -> SimpleGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_probability]
    return SimpleGraph([str(v) for v in range(n)], edges)


def check_classical_weights(kind: str, seed: int = DEFAULT_SEED,
                            trials: int = RANDOM_TRIALS) -> list[InstanceResult]:
    """Weighted product vs one classical product on seeded random graph pairs."""
    classical = {"direct": direct_product_graph,
                 "cartesian": cartesian_product_graph,
                 "normal": normal_product_graph}[kind]
    weight_kinds = {"direct": ("direct", "direct"),
                    "cartesian": ("cartesian-left", "cartesian-right"),
                    "normal": ("normal", "normal")}[kind]
    rng = random.Random(f"{seed}:{kind}")
    results = []
    for trial in range(trials):
        a = random_graph(rng, rng.randint(1, RANDOM_MAX_VERTICES))
        b = random_graph(rng, rng.randint(1, RANDOM_MAX_VERTICES))
        subject = (f"trial {trial:02d}: {a.vertex_count}x{b.vertex_count} vertices, "
                   f"{a.edge_count}+{b.edge_count} edges")
        expected = classical(a, b)
        got = generalized_product_graph(a, classical_weights(weight_kinds[0], a),
                                        b, classical_weights(weight_kinds[1], b))
        if graphs_equal_labeled(expected, got):
            results.append(InstanceResult(subject, True, f"{expected.edge_count} edges"))
        else:
            results.append(InstanceResult(subject, False, edge_set_difference(expected, got)))
    return results


def verify_all(max_order: int = DEFAULT_MAX_ORDER,
               seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    """Run every claim over the family and return one report per claim."""
    family = family_groups(max_order)
    pairs = [(g1, g2) for g1 in family for g2 in family
             if g1.order * g2.order <= max_order]
    reports = []

    start = time.perf_counter()
    instances = [check_power_product_pair(g1, g2) for g1, g2 in pairs]
    reports.append(VerificationReport("power-product-identity", instances,
                                      time.perf_counter() - start))

    start = time.perf_counter()
    instances = [check_cartesian_obstruction(g1, g2) for g1, g2 in pairs
                 if g1.order > 1 and g2.order > 1]
    reports.append(VerificationReport("cartesian-obstruction", instances,
                                      time.perf_counter() - start))

    start = time.perf_counter()
    instances = [check_exponent_windows(g) for g in family]
    reports.append(VerificationReport("exponent-window", instances,
                                      time.perf_counter() - start))

    for kind in ("direct", "cartesian", "normal"):
        start = time.perf_counter()
        instances = check_classical_weights(kind, seed=seed)
        reports.append(VerificationReport(f"classical-weights-{kind}", instances,
                                          time.perf_counter() - start))

    return reports


def format_reports(reports: list[VerificationReport], max_order: int, seed: int) -> str:
    """Deterministic summary table plus a block per failing instance."""
    reports = sorted(reports, key=lambda r: r.claim)
    width = max(len(r.claim) for r in reports)
    lines = [f"verification summary (max-order={max_order}, seed={seed})", ""]
    lines.append(f"{'claim'.ljust(width)}  total  pass  fail")
    for report in reports:
        n_fail = len(report.failures())
        n_total = len(report.instances)
        lines.append(f"{report.claim.ljust(width)}  {n_total:5d}  {n_total - n_fail:4d}  {n_fail:4d}")
    lines.append("")
    for report in reports:
        for inst in report.failures():
            lines.append(f"FAIL {report.claim} [{inst.subject}]: {inst.detail}")
    overall = all(report.passed for report in reports)
    lines.append(f"result: {'PASS' if overall else 'FAIL'}")
    return "\n".join(lines)
