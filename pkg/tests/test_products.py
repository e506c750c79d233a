from rightgroups.algebra import (
    direct_product,
    make_cyclic,
    make_dihedral,
    make_left_zero,
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
    complete_multipartite,
    cycle_graph,
    empty_graph,
    graph_isomorphic,
    suppress,
)
from rightgroups.products import (
    blowup,
    box_product,
    cross_product,
    lexicographic,
    verify_cross_identity,
    verify_lex_identity,
)


def test_tensor_of_two_k2():
    k2 = ColorDigraph.from_simple(complete_graph(2))
    prod = cross_product(k2, k2)
    assert len(prod.arcs) == 4
    # two antiparallel arc pairs: two disjoint edges
    assert suppress(prod) == SimpleGraph.from_edges(4, [(0, 3), (1, 2)])


def test_cross_gives_krr():
    x = cayley_color_graph(make_cyclic(2), (1,))
    y = cayley_color_graph(make_right_zero(3), (0, 1, 2))
    assert suppress(cross_product(x, y)) == complete_bipartite(3, 3)


def test_cross_with_looped_point_is_identity():
    x = cayley_color_graph(make_dihedral(3), (1, 3))
    point = ColorDigraph(1, ((0, 0, 0),))
    assert cross_product(x, point) == x
    # dropping the loop first kills every arc
    assert cross_product(x, ColorDigraph(1, ())).arcs == ()


def test_lexicographic_examples():
    assert lexicographic(complete_bipartite(2, 2), empty_graph(3)) == complete_bipartite(6, 6)
    octa = lexicographic(cycle_graph(3), empty_graph(2))
    assert (octa.n, octa.m) == (6, 12)
    assert octa == complete_multipartite(2, 2, 2)
    x = cayley_graph(make_cyclic(5), (1, 2))
    assert lexicographic(x, empty_graph(1)) == x


def test_blowup():
    direct = cayley_graph(direct_product(make_cyclic(6), make_right_zero(2)),
                          product_set(make_cyclic(6), (1,), make_right_zero(2), range(2)))
    assert graph_isomorphic(blowup(cycle_graph(6), 2), direct) is not None
    assert direct == blowup(cycle_graph(6), 2)
    for r in range(1, 5):
        assert blowup(complete_graph(2), r) == complete_bipartite(r, r)
    x = cycle_graph(5)
    assert blowup(x, 1) == x
    b = blowup(x, 3)
    assert (b.n, b.m) == (15, 45)


def test_box_product():
    prism = box_product(cycle_graph(3), complete_graph(2))
    assert (prism.n, prism.m) == (6, 9)
    assert box_product(cycle_graph(5), complete_graph(1)) == cycle_graph(5)
    cube = box_product(cycle_graph(4), complete_graph(2))
    assert (cube.n, cube.m) == (8, 12)
    assert all(cube.degree(v) == 3 for v in range(8))


def test_cross_identity_examples():
    z2, z3, r2, r3 = make_cyclic(2), make_cyclic(3), make_right_zero(2), make_right_zero(3)
    assert verify_cross_identity(z2, (1,), r2, (0, 1)).holds
    assert verify_cross_identity(z3, (1,), z2, (1,)).holds
    assert verify_cross_identity(r2, (0, 1), r3, (0, 1, 2)).holds
    # arbitrary subsets, not only generating sets
    assert verify_cross_identity(make_cyclic(6), (2,), r2, (1,)).holds


def test_lex_identity_examples():
    z2 = make_cyclic(2)
    w = verify_lex_identity(z2, (1,), make_right_zero(2), (0, 1))
    assert w.holds and w.right_group
    w = verify_lex_identity(z2, (1,), make_cyclic(3), (1,))
    assert w.holds and w.right_group
    w = verify_lex_identity(z2, (1,), make_left_zero(2), (0, 1))
    assert not w.holds and w.right_group is False
    assert w.counterexample is not None and w.details["edge"] == "missing"


def test_lex_identity_iff_right_group():
    family = [make_right_zero(2), make_left_zero(2), make_left_zero(3), make_cyclic(2),
              direct_product(make_cyclic(2), make_right_zero(2)),
              direct_product(make_right_zero(2), make_left_zero(2))]
    s = make_cyclic(3)
    for t in family:
        w = verify_lex_identity(s, (1,), t, tuple(range(t.order)))
        assert w.holds == w.right_group
