import itertools

import pytest

from rightgroups.algebra import (
    MulTable,
    SpecError,
    closure,
    direct_product,
    element_order,
    generates,
    involutions,
    is_right_group,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_left_zero,
    make_right_zero,
    make_symmetric,
    minimal_generating_sets,
    minimum_generating_sets,
    parse_generators,
    parse_group_spec,
    two_involutions_generate,
)
from rightgroups.cayley import cayley_graph, graph_isomorphic


def test_cyclic_tables():
    assert make_cyclic(1).order == 1
    z6 = make_cyclic(6)
    assert z6.table[2][3] == 5 and z6.table[3][3] == 0
    assert z6.identity == 0 and z6.names[4] == "4"
    assert element_order(make_cyclic(4), 1) == 4


def test_dihedral():
    d2 = make_dihedral(2)
    assert d2.order == 4 and len(involutions(d2)) == 3
    assert len(involutions(make_dihedral(3))) == 3
    assert make_dihedral(5).order == 10
    with pytest.raises(ValueError):
        make_dihedral(1)


def test_permutation_groups():
    assert make_alternating(4).order == 12
    assert make_symmetric(4).order == 24
    with pytest.raises(ValueError):
        make_symmetric(6)


def _normal_subgroups(g: MulTable):
    """Brute force: subgroups generated by one or two elements that are normal."""
    inv = g.inverse
    found = set()
    for a, b in itertools.combinations_with_replacement(range(g.order), 2):
        h = closure(g, (a, b))
        if all(g.table[g.table[x][y]][inv[x]] in h for x in range(g.order) for y in h):
            found.add(h)
    return found


def test_a5_is_simple():
    a5 = make_alternating(5)
    assert a5.order == 60
    # every normal subgroup is normally generated by one element, so pairs cover them all
    assert {len(h) for h in _normal_subgroups(a5)} == {1, 60}


def test_right_zero():
    assert make_right_zero(1).identity == 0
    r3 = make_right_zero(3)
    assert r3.table[0][2] == 2 and r3.table[2][0] == 0
    assert r3.identity is None
    assert all(r3.table[i][j] == j for i in range(3) for j in range(3))
    assert is_right_group(make_right_zero(2))
    assert not is_right_group(make_left_zero(2))


def test_direct_product():
    z2, z3 = make_cyclic(2), make_cyclic(3)
    z2z3 = direct_product(z2, z3)
    # cyclic: the element (1,1) generates, and the Cayley graphs match
    assert generates(z2z3, (4,))
    assert graph_isomorphic(cayley_graph(z2z3, (4,)), cayley_graph(make_cyclic(6), (1,)))
    g = direct_product(z3, make_right_zero(2))
    assert g.order == 6 and g.identity is None and is_right_group(g)
    assert direct_product(z2, make_dihedral(3)).order == 12


def test_product_index_and_projections():
    a, b = make_dihedral(3), make_cyclic(4)
    p = direct_product(a, b)
    assert p.order == 24
    for x, y in itertools.product(range(p.order), repeat=2):
        xy = p.table[x][y]
        assert xy // 4 == a.table[x // 4][y // 4]
        assert xy % 4 == b.table[x % 4][y % 4]


def test_element_orders():
    z6 = make_cyclic(6)
    assert [element_order(z6, x) for x in (1, 2, 3)] == [6, 3, 2]
    d4 = make_dihedral(4)
    assert all(element_order(d4, d4.index(f"s{k}")) == 2 for k in range(4))
    with pytest.raises(ValueError):
        element_order(make_right_zero(2), 0)


def test_generates():
    z6 = make_cyclic(6)
    assert generates(z6, (1,))
    assert generates(z6, (2, 3)) and not generates(z6, (2,))
    assert not generates(make_cyclic(4), (2,))


def test_minimal_generating_sets():
    sets = minimal_generating_sets(make_cyclic(6))
    assert {(1,), (5,), (2, 3)} <= set(sets) and (1, 2) not in sets
    assert sets == sorted(sets)
    assert minimal_generating_sets(make_cyclic(2)) == [(1,)]
    d3 = make_dihedral(3)
    inv = set(involutions(d3))
    assert any(len(c) == 2 and set(c) <= inv for c in minimal_generating_sets(d3))
    assert minimum_generating_sets(make_cyclic(6)) == [(1,), (5,)]


def test_minimal_generating_sets_against_subset_oracle():
    for g in (make_cyclic(6), make_dihedral(4), make_cyclic(12)):
        oracle = []
        for k in range(1, 5):
            for c in itertools.combinations(range(g.order), k):
                if generates(g, c) and not any(generates(g, c[:i] + c[i + 1:]) for i in range(k)):
                    oracle.append(c)
        assert minimal_generating_sets(g) == sorted(oracle)


def test_generation_cap():
    with pytest.raises(ValueError):
        minimal_generating_sets(make_alternating(5), cap=50)


def test_two_involutions():
    assert two_involutions_generate(make_dihedral(5))
    assert not two_involutions_generate(make_alternating(4))
    assert not two_involutions_generate(direct_product(make_cyclic(2), make_cyclic(4)))


def test_spec_grammar():
    g = parse_group_spec("Z2xD5xR2")
    assert g.order == 40 and g.identity is None
    assert parse_generators("Z6", "2,3") == (2, 3)
    assert parse_generators("Z2xR3", "(1,*)") == (3, 4, 5)
    assert parse_generators("Z2xD3", "(1,r1),(0,s0)") == (3, 7)
    for bad in ("Q6", "Z", "Z2x", ""):
        with pytest.raises(SpecError):
            parse_group_spec(bad)
    with pytest.raises(ValueError):
        parse_generators("Z6", "7")


def test_bad_tables_rejected():
    with pytest.raises(ValueError):
        MulTable(((0, 1), (1, 1)), ("a", "b"), identity=1)
    with pytest.raises(ValueError):
        MulTable(((0, 2), (1, 0)), ("a", "b"))
    with pytest.raises(ValueError):
        # a*(a*b) != (a*a)*b
        MulTable(((1, 0), (0, 0)), ("a", "b"))
