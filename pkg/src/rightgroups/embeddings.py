"""Explicit rotation-system certificates for the toroidal families.

Every constructor re-traces its faces before returning, so a certificate is
never trusted on construction.  Vertex ``(g, i)`` of ``G x R_r`` is index
``g*r + i`` throughout.
"""

from __future__ import annotations

from importlib import resources

from .algebra import make_cyclic, make_right_zero, direct_product, product_set
from .cayley import SimpleGraph, cayley_graph, complete_bipartite, complete_graph, cycle_graph
from .products import blowup, box_product
from .topology import (
    EmbeddingCertificate,
    RotationSystem,
    dumps_certificate,
    face_trace,
    heuristic_upper,
    loads_certificate,
)

TRIPLE_TORUS_FIXTURE = "triple_torus.cert"
TRIPLE_TORUS_SEED = 0
TRIPLE_TORUS_EFFORT = 20_000


def cyclic_right_group_graph(n: int, r: int) -> SimpleGraph:
    """``Cay(Z_n x R_r, {1} x R_r)`` built from the tables."""
    z, rz = make_cyclic(n), make_right_zero(r)
    return cayley_graph(direct_product(z, rz), product_set(z, [1 % n], rz, range(r)))


def _expect(cert: EmbeddingCertificate, genus: int, faces: int) -> EmbeddingCertificate:
    if cert.genus != genus or len(cert.faces) != faces:
        raise AssertionError(f"{cert.name}: traced genus {cert.genus} with {len(cert.faces)} faces")
    return cert


def torus_square_grid(n: int) -> EmbeddingCertificate:
    """Quadrangulation of the torus by ``Cay(Z_n x R_2, {1} x R_2)``, n >= 4."""
    if n < 4:
        raise ValueError("the square grid needs n >= 4")

    def v(g, i):
        return 2 * (g % n) + i

    rot = []
    for g in range(n):
        rot.append((v(g + 1, 0), v(g + 1, 1), v(g - 1, 0), v(g - 1, 1)))
        rot.append((v(g + 1, 0), v(g - 1, 1), v(g - 1, 0), v(g + 1, 1)))
    cert = face_trace(cyclic_right_group_graph(n, 2), RotationSystem(tuple(rot)), f"square-grid-Z{n}xR2")
    if set(cert.face_lengths) != {4}:
        raise AssertionError("square grid produced a non-quadrilateral face")
    return _expect(cert, 1, 2 * n)


def torus_triangular_grid_Z3R3() -> EmbeddingCertificate:
    """The 3x3 triangulated torus grid, which is ``Cay(Z_3 x R_3, {1} x R_3)``.

    Grid point ``(x, y)`` is the element ``(x + y mod 3, r_x)``.
    """
    def v(x, y):
        x, y = x % 3, y % 3
        return 3 * ((x + y) % 3) + x

    steps = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    rot: list[tuple[int, ...]] = [()] * 9
    for x in range(3):
        for y in range(3):
            rot[v(x, y)] = tuple(v(x + dx, y + dy) for dx, dy in steps)
    cert = face_trace(cyclic_right_group_graph(3, 3), RotationSystem(tuple(rot)), "triangular-grid-Z3xR3")
    if set(cert.face_lengths) != {3}:
        raise AssertionError("triangular grid produced a non-triangular face")
    return _expect(cert, 1, 18)


def torus_Krr(r: int) -> EmbeddingCertificate:
    """Toroidal ``K_{r,r}`` for r in {3, 4}, labelled as ``Cay(Z_2 x R_r, {1} x R_r)``."""
    if r == 3:
        rot = [(3, 4, 5)] * 3 + [(0, 1, 2)] * 3
        cert = face_trace(complete_bipartite(3, 3), RotationSystem(tuple(rot)), "torus-K33")
        return _expect(cert, 1, 3)
    if r == 4:
        # K_{4,4} = Cay(Z_4 x R_2): (g, i) goes to side g mod 2, slot 2*(g // 2) + i
        grid = torus_square_grid(4)
        phi = {2 * g + i: 4 * (g % 2) + 2 * (g // 2) + i for g in range(4) for i in range(2)}
        cert = grid.relabel(phi, complete_bipartite(4, 4))
        return _expect(face_trace(cert.graph, cert.rotation, "torus-K44"), 1, 8)
    raise ValueError("K_{r,r} is toroidal only for r = 3 and r = 4")


def example_graph() -> SimpleGraph:
    """``Cay(Z_6 x R_2, {2,3} x R_2)``, i.e. ``(C_3 box K_2)[K2-bar]``."""
    z, rz = make_cyclic(6), make_right_zero(2)
    return cayley_graph(direct_product(z, rz), product_set(z, [2, 3], rz, range(2)))


def prism_blowup() -> SimpleGraph:
    return blowup(box_product(cycle_graph(3), complete_graph(2)), 2)


def search_triple_torus(seed: int = TRIPLE_TORUS_SEED, effort: int = TRIPLE_TORUS_EFFORT) -> EmbeddingCertificate:
    """Regenerate a genus-3 embedding of the example graph by seeded local search."""
    cert = heuristic_upper(example_graph(), effort=effort, seed=seed)
    return face_trace(cert.graph, cert.rotation, "triple-torus-Z6xR2")


def triple_torus_example(regenerate: bool = False) -> EmbeddingCertificate:
    """Genus-3 certificate for ``Cay(Z_6 x R_2, {2,3} x R_2)`` (12 vertices, 36 edges, 20 faces).

    Loaded from the shipped fixture and re-traced; ``regenerate=True`` runs
    the seeded search instead.
    """
    if regenerate:
        cert = search_triple_torus()
    else:
        text = resources.files("rightgroups.data").joinpath(TRIPLE_TORUS_FIXTURE).read_text()
        cert = loads_certificate(text)
    if cert.graph != example_graph():
        raise AssertionError("certificate is not on the example graph")
    if cert.genus > 3:
        raise RuntimeError(f"search only reached genus {cert.genus}; no genus-3 certificate")
    return _expect(cert, 3, 20)


def write_triple_torus_fixture(path) -> EmbeddingCertificate:
    cert = triple_torus_example(regenerate=True)
    with open(path, "w") as fh:
        fh.write("# seeded local search, seed %d, effort %d\n" % (TRIPLE_TORUS_SEED, TRIPLE_TORUS_EFFORT))
        fh.write(dumps_certificate(cert))
    return cert
