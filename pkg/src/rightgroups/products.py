"""Graph products and checks of the Cay-functor product identities.

Cross products are taken on color digraphs so that loops survive until the
final suppression; ``Cay(R_r, R_r)`` is the complete graph with a loop at
every vertex, and dropping those loops first breaks the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import GeneratingSet, MulTable, direct_product, is_right_group, product_set
from .cayley import ColorDigraph, SimpleGraph, cayley_color_graph, cayley_graph, empty_graph


def cross_product(x: ColorDigraph, y: ColorDigraph) -> ColorDigraph:
    """Tensor product: one arc per pair of arcs, color ``cx * ky + cy``.

    Vertex ``(u1, u2)`` has index ``u1 * |V(y)| + u2``; ``ky`` is the number
    of colors of ``y``.
    """
    ny = y.vertex_count
    ky = 1 + max((c for _, _, c in y.arcs), default=-1)
    arcs = tuple(
        (u1 * ny + u2, v1 * ny + v2, c1 * ky + c2)
        for u1, v1, c1 in x.arcs for u2, v2, c2 in y.arcs
    )
    labels = None
    if x.labels and y.labels:
        labels = tuple(f"({a},{b})" for a in x.labels for b in y.labels)
    return ColorDigraph(x.vertex_count * ny, arcs, labels)


def lexicographic(x: SimpleGraph, y: SimpleGraph) -> SimpleGraph:
    """``X[Y]``: adjacent in X, or equal in X and adjacent in Y."""
    ny = y.n
    es = []
    for u1, v1 in x.edges:
        es += [(u1 * ny + a, v1 * ny + b) for a in range(ny) for b in range(ny)]
    for u in range(x.n):
        es += [(u * ny + a, u * ny + b) for a, b in y.edges]
    return SimpleGraph.from_edges(x.n * ny, es)


def blowup(x: SimpleGraph, r: int) -> SimpleGraph:
    """``X[empty_r]``: each vertex becomes r twins, each edge a K_{r,r}."""
    if r < 1:
        raise ValueError("blow-up factor must be >= 1")
    return lexicographic(x, empty_graph(r))


def box_product(x: SimpleGraph, y: SimpleGraph) -> SimpleGraph:
    ny = y.n
    es = [(u * ny + b, v * ny + b) for u, v in x.edges for b in range(ny)]
    es += [(a * ny + u, a * ny + v) for a in range(x.n) for u, v in y.edges]
    return SimpleGraph.from_edges(x.n * ny, es)


@dataclass
class ProductWitness:
    left: str
    right: str
    kind: str
    isomorphism: dict[int, int] | None
    counterexample: tuple | None = None
    right_group: bool | None = None
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.isomorphism is not None


def verify_cross_identity(s: MulTable, cs: GeneratingSet, t: MulTable, dt: GeneratingSet) -> ProductWitness:
    """Compare ``Cay(SxT, CxD)`` with ``Cay(S,C) x Cay(T,D)`` arc for arc."""
    direct = cayley_color_graph(direct_product(s, t), product_set(s, cs, t, dt))
    via = cross_product(cayley_color_graph(s, sorted(set(cs))), cayley_color_graph(t, sorted(set(dt))))
    a, b = sorted(direct.arcs), sorted(via.arcs)
    if direct.vertex_count == via.vertex_count and a == b:
        iso = {v: v for v in range(direct.vertex_count)}
        return ProductWitness(s.label, t.label, "cross", iso, details={"arcs": len(a)})
    missing = sorted(set(a) ^ set(b))
    bad = missing[0] if missing else ("multiplicity", len(a), len(b))
    return ProductWitness(s.label, t.label, "cross", None, counterexample=bad)


def verify_lex_identity(s: MulTable, cs: GeneratingSet, t: MulTable, dt: GeneratingSet) -> ProductWitness:
    """Compare ``Cay(SxT, (CxT) u ({1}xD))`` with ``Cay(S,C)[Cay(T,D)]``.

    Also reports whether ``tT = T`` for all ``t``, which decides the outcome.
    """
    if s.identity is None:
        raise ValueError(f"{s.label} must be a monoid")
    gens = set(product_set(s, cs, t, range(t.order))) | set(product_set(s, [s.identity], t, dt))
    direct = cayley_graph(direct_product(s, t), tuple(sorted(gens)))
    lex = lexicographic(cayley_graph(s, tuple(cs)), cayley_graph(t, tuple(dt)))
    rg = is_right_group(t)
    if direct == lex:
        iso = {v: v for v in range(direct.n)}
        return ProductWitness(s.label, t.label, "lexicographic", iso, right_group=rg)
    diff = sorted(lex.edges - direct.edges) or sorted(direct.edges - lex.edges)
    side = "missing" if lex.edges - direct.edges else "extra"
    return ProductWitness(s.label, t.label, "lexicographic", None, counterexample=diff[0],
                          right_group=rg, details={"edge": side})
