import pytest

from rightgroups.cayley import complete_bipartite, graph_isomorphic
from rightgroups.embeddings import (
    cyclic_right_group_graph,
    example_graph,
    prism_blowup,
    torus_Krr,
    torus_square_grid,
    torus_triangular_grid_Z3R3,
    triple_torus_example,
)
from rightgroups.topology import edge_triangle_profile, face_trace, is_planar


@pytest.mark.parametrize("n", range(4, 11))
def test_square_grid(n):
    cert = torus_square_grid(n)
    assert cert.graph == cyclic_right_group_graph(n, 2)
    assert cert.genus == 1
    assert sorted(cert.face_lengths) == [4] * (2 * n)


def test_square_grid_needs_four():
    with pytest.raises(ValueError):
        torus_square_grid(3)


def test_triangular_grid():
    cert = torus_triangular_grid_Z3R3()
    assert cert.genus == 1 and len(cert.faces) == 18
    assert set(cert.face_lengths) == {3}
    assert not is_planar(cert.graph)


def test_Krr_certificates():
    k3, k4 = torus_Krr(3), torus_Krr(4)
    assert k3.graph == complete_bipartite(3, 3) and sorted(k3.face_lengths) == [6, 6, 6]
    assert k4.graph == complete_bipartite(4, 4) and sorted(k4.face_lengths) == [4] * 8
    assert k3.genus == k4.genus == 1
    with pytest.raises(ValueError):
        torus_Krr(5)


def test_certificates_retrace():
    for cert in (torus_square_grid(5), torus_triangular_grid_Z3R3(), torus_Krr(4)):
        again = face_trace(cert.graph, cert.rotation)
        assert again.genus == cert.genus and sorted(again.face_lengths) == sorted(cert.face_lengths)


def test_triple_torus_fixture():
    cert = triple_torus_example()
    assert cert.graph == example_graph()
    assert (cert.graph.n, cert.graph.m) == (12, 36)
    assert cert.genus == 3 and len(cert.faces) == 20


def test_example_graph_is_the_blown_up_prism():
    assert graph_isomorphic(example_graph(), prism_blowup()) is not None


def test_example_graph_has_an_edge_in_no_triangle():
    profile = edge_triangle_profile(example_graph())
    # (0, r1) - (3, r1): generator 3 has order 2 and lies in no triangle
    assert profile[(0, 6)] == 0
    assert min(profile.values()) == 0
