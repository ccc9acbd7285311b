"""Products of simple graphs on the vertex set V(a) x V(b).

All four constructions share the pair encoding (i, j) -> i*|V(b)| + j used
by group direct products, so a product of power graphs can be compared to
the power graph of a product group by labeled equality.

Terminology note: "cartesian" here moves along one coordinate with the
other fixed (the box product) and "normal" is the union of direct and
cartesian adjacency (elsewhere called the strong product).
"""

from .graphs import SimpleGraph
from .groups import pair_index, pair_of_index
from .power import WeightTable
from .progressions import APPair, SENTINEL, aps_intersect_positively

DEFAULT_SIZE_CAP = 10000

PRODUCT_KINDS = ("direct", "cartesian", "normal", "generalized")
WEIGHT_KINDS = ("direct", "cartesian-left", "cartesian-right", "normal")

# classical_weights: (arc value, diagonal value) per kind.
_WEIGHT_CASES = {
    "direct": (APPair(1, 1), SENTINEL),
    "cartesian-left": (APPair(1, 0), APPair(1, 1)),
    "cartesian-right": (APPair(2, 0), APPair(1, 1)),
    "normal": (APPair(1, 0), APPair(1, 1)),
}


class SizeCap(ValueError):
    pass


def _product_labels(a: SimpleGraph, b: SimpleGraph, cap: int) -> list[str]:
    n = a.vertex_count * b.vertex_count
    if n > cap:
        raise SizeCap(f"product on {n} vertices exceeds cap {cap}")
    return [f"({la},{lb})" for la in a.labels for lb in b.labels]


def direct_product_graph(a: SimpleGraph, b: SimpleGraph,
                         cap: int = DEFAULT_SIZE_CAP) -> SimpleGraph:
    """(g1, g2) ~ (h1, h2) iff g1 ~ h1 and g2 ~ h2."""
    labels = _product_labels(a, b, cap)
    nb = b.vertex_count
    edges = []
    for u1, v1 in a.edges():
        for u2, v2 in b.edges():
            edges.append((pair_index(u1, u2, nb), pair_index(v1, v2, nb)))
            edges.append((pair_index(u1, v2, nb), pair_index(v1, u2, nb)))
    return SimpleGraph(labels, edges)


def cartesian_product_graph(a: SimpleGraph, b: SimpleGraph,
                            cap: int = DEFAULT_SIZE_CAP) -> SimpleGraph:
    """(g1, g2) ~ (h1, h2) iff the pairs agree in one slot and are adjacent in the other."""
    labels = _product_labels(a, b, cap)
    nb = b.vertex_count
    edges = []
    for v1 in range(a.vertex_count):
        for u2, v2 in b.edges():
            edges.append((pair_index(v1, u2, nb), pair_index(v1, v2, nb)))
    for u1, v1 in a.edges():
        for v2 in range(b.vertex_count):
            edges.append((pair_index(u1, v2, nb), pair_index(v1, v2, nb)))
    return SimpleGraph(labels, edges)


def normal_product_graph(a: SimpleGraph, b: SimpleGraph,
                         cap: int = DEFAULT_SIZE_CAP) -> SimpleGraph:
    """Union of direct and cartesian adjacency."""
    direct = direct_product_graph(a, b, cap=cap)
    cartesian = cartesian_product_graph(a, b, cap=cap)
    return SimpleGraph(direct.labels, direct.edges() + cartesian.edges())


def generalized_product_graph(a: SimpleGraph, wa: WeightTable,
                              b: SimpleGraph, wb: WeightTable,
                              cap: int = DEFAULT_SIZE_CAP) -> SimpleGraph:
    """Weighted product: distinct pairs are adjacent iff the two factors'
    progressions meet in a common positive integer, in either consistent
    orientation.  The factor edge sets themselves are not consulted; the
    weight tables alone decide adjacency.
    """
    _check_weights(a, wa, "left")
    _check_weights(b, wb, "right")
    labels = _product_labels(a, b, cap)
    n = len(labels)
    nb = b.vertex_count
    edges = []
    for x in range(n):
        g1, g2 = pair_of_index(x, nb)
        for y in range(x + 1, n):
            h1, h2 = pair_of_index(y, nb)
            if aps_intersect_positively(wa[g1][h1], wb[g2][h2]) or \
               aps_intersect_positively(wa[h1][g1], wb[h2][g2]):
                edges.append((x, y))
    return SimpleGraph(labels, edges)


def classical_weights(kind: str, g: SimpleGraph) -> WeightTable:
    """Weight tables under which the weighted product reproduces a classical one.

    kind        arc (u ~ v)   diagonal
    direct          (1,1)       (0,0)
    cartesian-left  (1,0)       (1,1)
    cartesian-right (2,0)       (1,1)
    normal          (1,0)       (1,1)

    The direct kind on both factors yields the direct product; the
    cartesian-left/-right pair yields the cartesian product (the disjoint
    singletons {1} and {2} kill the both-coordinates-adjacent case); the
    normal kind on both factors yields the normal product.  Non-adjacent
    distinct pairs always carry the sentinel.
    """
    if kind not in _WEIGHT_CASES:
        raise ValueError(f"unknown weight kind {kind!r}; expected one of {', '.join(WEIGHT_KINDS)}")
    arc, diagonal = _WEIGHT_CASES[kind]
    n = g.vertex_count
    return [[arc if g.adjacent(u, v) else diagonal if u == v else SENTINEL
             for v in range(n)]
            for u in range(n)]


def _check_weights(g: SimpleGraph, w: WeightTable, side: str) -> None:
    n = g.vertex_count
    if len(w) != n or any(len(row) != n for row in w):
        raise ValueError(f"{side} weight table does not cover all ordered vertex pairs")
