import pytest

from rightgroups.algebra import (
    direct_product,
    involutions,
    make_cyclic,
    make_dihedral,
    make_right_zero,
    product_set,
)
from rightgroups.cayley import (
    ColorDigraph,
    SimpleGraph,
    cayley_color_graph,
    cayley_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph_isomorphic,
    read_edge_list,
    suppress,
    to_dot,
    to_edge_list,
)
from rightgroups.products import box_product


def test_color_graph_of_right_zero_keeps_loops():
    d = cayley_color_graph(make_right_zero(3), (0, 1, 2))
    assert len(d.arcs) == 9
    for v in range(3):
        out = {t for s, t, _ in d.arcs if s == v}
        assert out == {0, 1, 2}
    assert suppress(d) == complete_graph(3)


def test_color_graph_small_cases():
    d = cayley_color_graph(make_cyclic(2), (1,))
    assert sorted(d.arcs) == [(0, 1, 0), (1, 0, 0)]
    assert suppress(d) == complete_graph(2)
    d = cayley_color_graph(make_cyclic(6), (2, 3))
    assert len(d.arcs) == 12 and all(s != t for s, t, _ in d.arcs)


def test_arc_invariant():
    g = make_dihedral(4)
    c = (1, 4)
    d = cayley_color_graph(g, c)
    assert len(d.arcs) == g.order * len(c)
    assert set(d.arcs) == {(x, g.table[x][y], k) for x in range(g.order) for k, y in enumerate(c)}


def test_remark_examples():
    z6 = make_cyclic(6)
    assert cayley_graph(z6, (1,)) == cycle_graph(6)
    assert cayley_graph(z6, (1, 2, 3)) == complete_graph(6)
    prism = box_product(cycle_graph(3), complete_graph(2))
    assert graph_isomorphic(cayley_graph(z6, (2, 3)), prism) is not None


def test_krr_from_z2():
    z2, r3 = make_cyclic(2), make_right_zero(3)
    g = cayley_graph(direct_product(z2, r3), product_set(z2, (1,), r3, range(3)))
    assert g == complete_bipartite(3, 3)


def test_isomorphism_examples():
    d3 = make_dihedral(3)
    assert graph_isomorphic(cayley_graph(d3, (3, 4)), cycle_graph(6)) is not None
    g = direct_product(make_cyclic(2), make_dihedral(3))
    # (1, s0) and (0, s1)
    c = (4, 9)
    assert graph_isomorphic(cayley_graph(g, c), cycle_graph(12)) is not None
    assert graph_isomorphic(complete_graph(3), cycle_graph(4)) is None
    with pytest.raises(ValueError):
        graph_isomorphic(cycle_graph(501), cycle_graph(501))


def test_degree_formula():
    for g in (make_dihedral(4), make_cyclic(8), make_dihedral(5)):
        inv = set(involutions(g))
        for c in ((1,), (1, g.order - 1), tuple(sorted(inv))[:2]):
            h = cayley_graph(g, c)
            # the neighbours of v are v*c and v*c^-1 over C, i.e. |C u C^-1| of them
            want = len(set(c) | {g.inverse[x] for x in c})
            assert want == sum(1 if x in inv else 2 for x in set(c)) - sum(
                1 for x in c for y in c if x != y and g.table[x][y] == g.identity and x not in inv)
            assert all(h.degree(v) == want for v in range(h.n))
            assert all(h.degree(v) <= 2 * len(c) for v in range(h.n))


def test_vertex_transitive():
    g = make_dihedral(4)
    h = cayley_graph(g, (1, 4))
    for v in range(h.n):
        assert graph_isomorphic(h, h, roots=(0, v)) is not None


def test_suppress_idempotent():
    g = box_product(cycle_graph(4), complete_graph(2))
    assert suppress(ColorDigraph.from_simple(g)) == g


def test_simple_graph_rejects_loops():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 1)])


def test_exports_round_trip():
    g = cayley_graph(make_cyclic(6), (2, 3))
    text = to_edge_list(g)
    assert text.startswith("# 6 vertices, 9 edges")
    assert read_edge_list(text) == g
    dot = to_dot(cayley_color_graph(make_cyclic(3), (1,)))
    assert "digraph" in dot and "->" in dot and 'color' in dot
    assert "graph" in to_dot(g) and "--" in to_dot(g)


def test_edge_list_keeps_isolated_vertices():
    assert read_edge_list("# 5 vertices, 1 edges\n0 1\n").n == 5
