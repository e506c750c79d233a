import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rightgroups.cayley import (
    SimpleGraph,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    path_graph,
)
from rightgroups.embeddings import cyclic_right_group_graph, example_graph, prism_blowup
from rightgroups.products import blowup
from rightgroups.topology import (
    EXHAUSTED_SEARCH,
    MalformedRotation,
    RotationSystem,
    dumps_certificate,
    edge_triangle_profile,
    euler_lower_bound,
    euler_only_bound,
    exact_genus,
    face_trace,
    find_subdivision,
    girth,
    heuristic_upper,
    is_outer_planar,
    is_planar,
    loads_certificate,
)


def random_rotation(g: SimpleGraph, rng: random.Random) -> RotationSystem:
    rot = []
    for v in range(g.n):
        nb = g.neighbors(v)
        rng.shuffle(nb)
        rot.append(tuple(nb))
    return RotationSystem(tuple(rot))


def disjoint_union(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    return SimpleGraph.from_edges(a.n + b.n, list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges])


# planarity ------------------------------------------------------------------

def test_planarity_examples():
    octa = blowup(cycle_graph(3), 2)
    res = is_planar(octa)
    assert res and res.certificate.genus == 0 and res.certificate.recheck().genus == 0
    assert is_planar(complete_graph(4))
    k44 = cyclic_right_group_graph(4, 2)
    res = is_planar(k44)
    assert not res
    # {0, 0', 2} against {1, 1', 3}
    assert res.witness.pattern == "K33"
    assert res.witness.parts == ((0, 1, 4), (2, 3, 6))
    assert res.witness.check(k44)


def test_large_witness_is_valid():
    g = blowup(cycle_graph(9), 2)
    res = is_planar(g)
    assert not res and res.witness.check(g)


def test_outer_planarity_examples():
    res = is_outer_planar(complete_bipartite(2, 3))
    assert not res and res.witness.pattern == "K23"
    res = is_outer_planar(cycle_graph(5))
    assert res and len(res.outer_faces[0]) == 5
    res = is_outer_planar(complete_graph(4))
    assert not res and res.witness.pattern == "K4"


def test_outer_witness_on_larger_graph():
    g = blowup(cycle_graph(8), 2)
    res = is_outer_planar(g)
    assert not res and res.witness.check(g)


def test_find_subdivision_examples():
    for n in range(4, 9):
        w = find_subdivision(cycle_graph(n), "K22")
        assert w is not None and w.check(cycle_graph(n))
    assert find_subdivision(cycle_graph(3), "K22") is None
    g = cyclic_right_group_graph(5, 2)
    w = find_subdivision(g, "K33")
    assert w is not None and w.check(g)
    with pytest.raises(ValueError):
        find_subdivision(cycle_graph(101), "K22")


def test_witness_check_rejects_tampering():
    g = complete_graph(5)
    w = is_planar(g).witness
    bad = type(w)(w.pattern, w.branch, w.paths[:-1] + ((w.branch[0], w.branch[0]),))
    assert not bad.check(g)


# counting ---------------------------------------------------------------------

def test_girth():
    assert girth(cycle_graph(6)) == 6
    assert girth(complete_bipartite(4, 4)) == 4
    assert girth(prism_blowup()) == 3
    assert girth(path_graph(5)) == math.inf


def test_euler_bounds():
    assert euler_lower_bound(complete_bipartite(6, 6)) == 4
    assert euler_lower_bound(complete_bipartite(5, 5)) == 3
    # 10 vertices, 40 edges, girth 3: at most 26 faces, so genus >= 3
    assert euler_lower_bound(blowup(complete_graph(5), 2)) == 3
    assert euler_lower_bound(complete_bipartite(3, 3)) == 1
    assert euler_only_bound(complete_bipartite(3, 3)) == 1
    assert euler_only_bound(complete_graph(5)) == 1
    assert euler_only_bound(complete_graph(4)) == 0
    assert euler_lower_bound(cycle_graph(7)) == 0


def test_edge_triangle_profile():
    assert edge_triangle_profile(prism_blowup())[(0, 3)] == 0
    assert edge_triangle_profile(example_graph())[(0, 6)] == 0
    assert set(edge_triangle_profile(complete_graph(4)).values()) == {2}
    assert set(edge_triangle_profile(complete_multipartite(2, 2, 2)).values()) == {2}


# face tracing -----------------------------------------------------------------

def test_face_trace_cycle():
    cert = face_trace(cycle_graph(6), RotationSystem(tuple((v - 1) % 6 for v in range(6)) and
                                                     tuple(((v - 1) % 6, (v + 1) % 6) for v in range(6))))
    assert len(cert.faces) == 2 and cert.genus == 0


def test_face_trace_rejects_bad_rotation():
    with pytest.raises(MalformedRotation):
        face_trace(cycle_graph(4), RotationSystem(((1,), (0, 2), (1, 3), (2, 0))))


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 10), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_euler_accounting_on_random_rotations(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g = SimpleGraph.from_edges(n, edges)
    cert = face_trace(g, random_rotation(g, rng))
    assert sum(cert.face_lengths) == 2 * g.m
    assert cert.genus >= 0
    comps = len(g.components())
    assert g.n - g.m + max(len(cert.faces), 0) + sum(1 for c in g.components() if len(c) == 1) \
        == 2 * comps - 2 * cert.genus


# certificates -----------------------------------------------------------------

def test_certificate_round_trip():
    cert = heuristic_upper(complete_graph(5), effort=2000, seed=1)
    text = dumps_certificate(cert)
    back = loads_certificate("# comment\n" + text)
    assert back.graph == cert.graph and back.genus == cert.genus
    assert back.rotation == cert.rotation


def test_certificate_genus_is_recomputed():
    cert = heuristic_upper(complete_graph(5), effort=2000, seed=1)
    text = dumps_certificate(cert).replace(f"genus {cert.genus}", f"genus {cert.genus + 1}")
    with pytest.raises(MalformedRotation):
        loads_certificate(text)
    with pytest.raises(MalformedRotation):
        loads_certificate("not a certificate\n0: 1\n1: 0\n")
    with pytest.raises(MalformedRotation):
        loads_certificate("rotation-certificate v1\nvertices 3\n0: 1\n1: 0\n")


# genus ------------------------------------------------------------------------

@pytest.mark.parametrize("g, value", [
    (complete_bipartite(3, 3), 1),
    (complete_graph(5), 1),
    (complete_graph(4), 0),
    (complete_bipartite(1, 1), 0),
    (complete_bipartite(2, 2), 0),
    (complete_bipartite(4, 4), 1),
    (complete_graph(6), 1),
    (complete_graph(7), 1),
    (complete_multipartite(3, 3, 3), 1),
])
def test_exact_genus_values(g, value):
    b = exact_genus(g, budget=10**6)
    assert b.exact and b.value == value
    assert b.certificate.recheck().genus == value


def test_exact_genus_by_search_alone():
    # heuristic effort 1 leaves the deepening search to close the gap
    b = exact_genus(complete_multipartite(3, 3, 3), budget=10**6, effort=1)
    assert b.value == 1


EXHAUSTED_EXAMPLE = [(0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 9), (1, 2), (1, 6), (1, 8), (1, 9), (2, 3),
                     (2, 6), (2, 7), (2, 8), (3, 4), (3, 7), (3, 8), (3, 9), (4, 5), (4, 6), (4, 8), (5, 6),
                     (5, 9), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9)]


def test_exhausted_search_raises_lower_bound():
    # found by random sampling: the counting bound says 1, the search proves 2
    g = SimpleGraph.from_edges(10, EXHAUSTED_EXAMPLE)
    assert euler_lower_bound(g) == 1
    b = exact_genus(g, budget=10**6)
    assert b.value == 2 and b.lower_reason == EXHAUSTED_SEARCH


def brute_force_genus(g: SimpleGraph) -> int:
    """Minimum traced genus over every rotation system."""
    choices = []
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) <= 2:
            choices.append([tuple(nb)])
        else:
            choices.append([(nb[0],) + p for p in itertools.permutations(nb[1:])])
    return min(face_trace(g, RotationSystem(rot)).genus for rot in itertools.product(*choices))


def test_search_matches_brute_force():
    rng = random.Random(7)
    checked = 0
    while checked < 25:
        n = rng.randint(5, 8)
        g = SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.55])
        count = math.prod(math.factorial(max(d - 1, 1)) for d in map(len, g.adj))
        if not g.is_connected() or count > 3000:
            continue
        b = exact_genus(g, budget=10**6, effort=1)
        assert b.value == brute_force_genus(g)
        checked += 1


def test_budget_exhaustion_gives_bounds():
    b = exact_genus(complete_bipartite(6, 6), budget=1000, effort=200)
    assert not b.exact and b.lower == 4 and b.upper >= 4 and b.notes


def test_disconnected_genus_adds():
    g = disjoint_union(complete_graph(5), complete_bipartite(3, 3))
    b = exact_genus(g)
    assert b.value == 2 and b.certificate.genus == 2


def test_heuristic_examples():
    assert heuristic_upper(complete_bipartite(4, 4), effort=5000, seed=0).genus <= 1
    assert heuristic_upper(cycle_graph(5)).genus == 0
    assert heuristic_upper(example_graph(), effort=20_000, seed=0).genus <= 3


@pytest.mark.parametrize("g", [complete_graph(5), complete_bipartite(3, 4), blowup(cycle_graph(4), 2),
                               cyclic_right_group_graph(3, 3), complete_graph(6)])
def test_bounds_are_consistent(g):
    b1 = exact_genus(g, budget=10**6)
    b2 = exact_genus(g, budget=10**6)
    assert b1.exact and b1.value == b2.value
    assert euler_lower_bound(g) <= b1.value <= heuristic_upper(g, effort=500, seed=3).genus
