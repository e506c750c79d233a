"""Decide whether right groups ``G x R_r`` have a toroidal Cayley graph.

For each inclusion-minimal generating set ``C`` of ``G`` the graph
``Cay(G x R_r, C x R_r)`` is the blow-up of ``Cay(G, C)``.  Cheap
obstructions are tried first, then the cyclic table, then explicit search.
Every verdict carries evidence that is re-checked independently:
a traced certificate, a Kuratowski witness, or an :class:`Obstruction`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .algebra import (
    GeneratingSet,
    MulTable,
    direct_product,
    element_order,
    generates,
    involutions,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_right_zero,
    make_symmetric,
    minimal_generating_sets,
    product_set,
    two_involutions_generate,
)
from .cayley import (
    SimpleGraph,
    cayley_graph,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    graph_isomorphic,
)
from .embeddings import (
    cyclic_right_group_graph,
    example_graph,
    torus_Krr,
    torus_square_grid,
    torus_triangular_grid_Z3R3,
)
from .products import blowup
from .topology import (
    PATTERNS,
    EmbeddingCertificate,
    GenusBounds,
    KuratowskiWitness,
    edge_triangle_profile,
    exact_genus,
    find_subdivision,
    girth,
    is_outer_planar,
    is_planar,
)

PLANAR = "planar"
TOROIDAL = "toroidal"
HIGHER = "genus>=2"
UNDETERMINED = "undetermined"
_RANK = {PLANAR: 0, TOROIDAL: 1, HIGHER: 2, UNDETERMINED: 3}

RULE_NONPLANAR_BASE = "euler-obstruction"
RULE_R5 = "r>=5-K55"
RULE_K22 = "K22-blowup-K66"
RULE_THREEREG = "threereg"
RULE_CYCLIC = "cyclic-table"
RULE_CERTIFICATE = "explicit-certificate"
RULE_ORDER = (RULE_NONPLANAR_BASE, RULE_R5, RULE_K22, RULE_THREEREG, RULE_CYCLIC, RULE_CERTIFICATE)

MAX_ORDER = 120
MAX_R = 6


# --------------------------------------------------------------------------
# obstructions

def _faces_max(h: SimpleGraph) -> int:
    """Most faces any cellular embedding of ``h`` can have.

    Girth ``k`` gives ``k f <= 2m``; with girth 3, an edge in no triangle
    forces at least one longer face and so ``3f <= 2m - 1``.
    """
    gir = girth(h)
    if gir == math.inf:
        return h.m + 1
    if gir >= 4:
        return (2 * h.m) // int(gir)
    if any(t == 0 for t in edge_triangle_profile(h).values()):
        return (2 * h.m - 1) // 3
    return (2 * h.m) // 3


def _count_bound(h: SimpleGraph) -> tuple[int, int, int]:
    """``(faces a torus embedding needs, faces possible, genus lower bound)``."""
    fmax = _faces_max(h)
    lower = max(0, math.ceil((2 - h.n + h.m - fmax) / 2))
    return h.m - h.n, fmax, lower


def pattern_graph(name: str) -> SimpleGraph:
    parts = PATTERNS[name].parts
    return complete_graph(parts[0]) if len(parts) == 1 else complete_multipartite(*parts)


@dataclass(frozen=True)
class Obstruction:
    """A graph of genus >= 2 sitting inside ``blowup(base, r)``.

    ``relation`` says how: the blow-up itself, a subgraph (``embedding``
    lists the image of each vertex), or a minor obtained by blowing up the
    subdivided ``witness`` pattern by ``factor`` and contracting each
    subdivided path fibre by fibre.  Genus cannot grow under either.
    """

    rule: str
    graph: SimpleGraph
    relation: str
    base: SimpleGraph
    r: int
    faces_needed: int
    faces_max: int
    lower: int
    embedding: tuple[int, ...] = ()
    witness: KuratowskiWitness | None = None
    factor: int = 0
    note: str = ""

    def verify(self) -> bool:
        if self.relation == "blow-up":
            placed = self.graph == blowup(self.base, self.r)
        elif self.relation == "subgraph":
            host = blowup(self.base, self.r)
            emb = self.embedding
            placed = (len(emb) == self.graph.n and len(set(emb)) == len(emb)
                      and all(host.has_edge(emb[u], emb[v]) for u, v in self.graph.edges))
        elif self.relation == "minor":
            w = self.witness
            placed = (w is not None and w.check(self.base) and 2 <= self.factor <= self.r
                      and self.graph == blowup(pattern_graph(w.pattern), self.factor))
        else:
            return False
        if not placed or not self.graph.is_connected():
            return False
        needed, fmax, lower = _count_bound(self.graph)
        return (needed, fmax, lower) == (self.faces_needed, self.faces_max, self.lower) \
            and needed > fmax and lower >= 2

    def describe(self) -> str:
        g = self.graph
        return (f"{self.rule}: {self.relation} with {g.n} vertices, {g.m} edges; torus needs "
                f"{self.faces_needed} faces, at most {self.faces_max} fit; genus >= {self.lower}")


def _make(rule, graph, relation, base, r, **kw) -> Obstruction | None:
    needed, fmax, lower = _count_bound(graph)
    if needed <= fmax or lower < 2:
        return None
    ob = Obstruction(rule, graph, relation, base, r, needed, fmax, lower, **kw)
    if not ob.verify():
        raise AssertionError(f"{rule}: obstruction failed its own re-check")
    return ob


def rule_nonplanar_base(g_graph: SimpleGraph, r: int,
                        witness: KuratowskiWitness | None = None) -> Obstruction | None:
    """Non-planar base: the blown-up Kuratowski pattern is a minor of the blow-up."""
    if r < 2:
        raise ValueError("needs r >= 2")
    if witness is None:
        res = is_planar(g_graph)
        if res:
            return None
        witness = res.witness
    pat = blowup(pattern_graph(witness.pattern), 2)
    return _make(RULE_NONPLANAR_BASE, pat, "minor", g_graph, r, witness=witness, factor=2,
                 note=f"{witness.pattern}[K2-bar]")


def rule_r5(g_graph: SimpleGraph, r: int) -> Obstruction | None:
    """``r >= 5``: any base edge blows up to a ``K_{r,r}`` containing ``K_{5,5}``."""
    if r < 5 or g_graph.m == 0:
        return None
    u, v = g_graph.sorted_edges()[0]
    emb = tuple(u * r + i for i in range(5)) + tuple(v * r + i for i in range(5))
    return _make(RULE_R5, complete_bipartite(5, 5), "subgraph", g_graph, r, embedding=emb,
                 note=f"K55 over base edge {u}-{v}")


def rule_K22(g_graph: SimpleGraph, r: int) -> Obstruction | None:
    """``r >= 3`` and a subdivided 4-cycle: ``K_{2,2}[K3-bar] = K_{6,6}`` is a minor."""
    if r < 3:
        return None
    w = find_subdivision(g_graph, "K22")
    if w is None:
        return None
    return _make(RULE_K22, blowup(pattern_graph("K22"), 3), "minor", g_graph, r,
                 witness=w, factor=3, note="K22[K3-bar] = K66")


def rule_threereg(g_graph: SimpleGraph, c: GeneratingSet | None = None,
                  g: MulTable | None = None) -> Obstruction | None:
    """Planar base of minimum degree >= 3, ``r = 2``.

    Degree >= 4 makes the blow-up at least 8-regular, too dense for the torus.
    Degree 3 makes it 6-regular, so a torus embedding would be a
    triangulation; an edge of the base in no triangle gives blow-up edges in
    no triangle, which rules that out.  A degree-3 base with every edge in a
    triangle is left alone: ``K4 = Cay(Z_4, {1, 2})`` is one, and its
    blow-up is toroidal (that set is not inclusion-minimal).
    """
    if g_graph.n == 0 or min(map(len, g_graph.adj)) < 3:
        raise ValueError("needs minimum degree >= 3")
    if not is_planar(g_graph):
        raise ValueError("needs a planar base")
    profile = edge_triangle_profile(g_graph)
    free = [e for e, t in profile.items() if t == 0]
    note = f"edge {free[0]} lies in no triangle" if free else "minimum degree >= 4"
    if g is not None and c is not None:
        orders = sorted(element_order(g, x) for x in c)
        note += f"; generator orders {orders}"
    return _make(RULE_THREEREG, blowup(g_graph, 2), "blow-up", g_graph, 2, note=note)


# --------------------------------------------------------------------------
# the cyclic table

@dataclass(frozen=True)
class CyclicVerdict:
    n: int
    r: int
    verdict: str
    rule: str
    graph: SimpleGraph
    certificate: EmbeddingCertificate | None = None
    witness: KuratowskiWitness | None = None
    obstruction: Obstruction | None = None


def _toroidal_certificate(n: int, r: int) -> EmbeddingCertificate | None:
    if n == 2 and r in (3, 4):
        return torus_Krr(r)
    if (n, r) == (3, 3):
        return torus_triangular_grid_Z3R3()
    if r == 2 and n >= 4:
        return torus_square_grid(n)
    return None


def _k48_count(n: int, r: int, graph: SimpleGraph) -> Obstruction | None:
    """``(3, 4)``: drop the 16 edges between two parts of ``K_{4,4,4}``; the
    triangle-free remainder ``K_{4,8}`` needs 20 torus faces but fits 16."""
    if (n, r) != (3, 4):
        return None
    part = [[g * r + i for i in range(r)] for g in range(3)]
    emb = tuple(part[2] + part[0] + part[1])
    return _make(RULE_CYCLIC, complete_bipartite(4, 8), "subgraph", cycle_graph(3), r,
                 embedding=emb, note="K444 minus the 16 edges between two parts")


def cyclic_table(n: int, r: int, budget: int = 10**6) -> CyclicVerdict:
    """Genus class of ``Cay(Z_n x R_r, {1} x R_r)``, every branch re-proved."""
    if n < 1 or not 1 <= r <= 5:
        raise ValueError("cyclic table covers n >= 1 and 1 <= r <= 5")
    graph = cyclic_right_group_graph(n, r)
    planar = is_planar(graph)
    if planar:
        return CyclicVerdict(n, r, PLANAR, RULE_CYCLIC, graph, certificate=planar.certificate)
    cert = _toroidal_certificate(n, r)
    if cert is not None:
        if cert.graph != graph or cert.genus != 1:
            raise AssertionError(f"torus certificate for ({n},{r}) does not fit")
        return CyclicVerdict(n, r, TOROIDAL, RULE_CYCLIC, graph, certificate=cert, witness=planar.witness)
    base = complete_graph(min(n, 2)) if n < 3 else cycle_graph(n)
    ob = rule_r5(base, r) if n > 1 else None
    ob = ob or _k48_count(n, r, graph) or (rule_K22(base, r) if n >= 4 else None)
    if ob is not None:
        return CyclicVerdict(n, r, HIGHER, ob.rule, graph, witness=planar.witness, obstruction=ob)
    # n = 1 gives K_r, which no blow-up rule sees
    bounds = exact_genus(graph, budget=budget)
    if bounds.upper == 1:
        return CyclicVerdict(n, r, TOROIDAL, RULE_CERTIFICATE, graph,
                             certificate=bounds.certificate, witness=planar.witness)
    return CyclicVerdict(n, r, HIGHER if bounds.lower >= 2 else UNDETERMINED, RULE_CERTIFICATE,
                         graph, witness=planar.witness)


# --------------------------------------------------------------------------
# per generating set

@dataclass
class BaseInfo:
    graph: SimpleGraph
    planarity: object
    cycle_length: int | None
    to_model: dict[int, int] | None

    @property
    def min_degree(self) -> int:
        return min(map(len, self.graph.adj)) if self.graph.n else 0


_BASE_CACHE: dict[tuple, BaseInfo] = {}


def base_info(g: MulTable, c: GeneratingSet) -> BaseInfo:
    key = (g.table, tuple(c))
    info = _BASE_CACHE.get(key)
    if info is None:
        h = cayley_graph(g, tuple(c))
        k, phi = None, None
        if h.n <= 2:
            k, phi = h.n, {v: v for v in range(h.n)}
        elif max(map(len, h.adj)) == 2 and h.is_connected():
            phi = graph_isomorphic(h, cycle_graph(h.n))
            k = h.n if phi is not None else None
        info = BaseInfo(h, is_planar(h), k, phi)
        _BASE_CACHE[key] = info
    return info


@dataclass
class SetVerdict:
    gens: GeneratingSet
    verdict: str
    rule: str
    certificate: EmbeddingCertificate | None = None
    witness: KuratowskiWitness | None = None
    obstruction: Obstruction | None = None
    bounds: GenusBounds | None = None
    pending: bool = False


def _transport(cert: EmbeddingCertificate, info: BaseInfo, r: int, target: SimpleGraph) -> EmbeddingCertificate:
    """Move a certificate on the cyclic model to ``blowup(base, r)`` via ``(v, i) -> (phi(v), i)``."""
    psi = {info.to_model[v] * r + i: v * r + i for v in range(info.graph.n) for i in range(r)}
    return cert.relabel(psi, target)


def _cheap(info: BaseInfo, c: GeneratingSet, g: MulTable, r: int) -> SetVerdict:
    base = info.graph
    if r == 1:
        if info.planarity:
            return SetVerdict(c, PLANAR, RULE_CERTIFICATE, certificate=info.planarity.certificate)
        return SetVerdict(c, UNDETERMINED, RULE_CERTIFICATE, witness=info.planarity.witness, pending=True)
    if not info.planarity:
        ob = rule_nonplanar_base(base, r, info.planarity.witness)
        if ob is not None:
            return SetVerdict(c, HIGHER, ob.rule, witness=info.planarity.witness, obstruction=ob)
    ob = rule_r5(base, r)
    if ob is None and r >= 3:
        ob = rule_K22(base, r)
    if ob is None and r == 2 and info.planarity and info.min_degree >= 3:
        ob = rule_threereg(base, c, g)
    if ob is not None:
        return SetVerdict(c, HIGHER, ob.rule, obstruction=ob)
    if info.cycle_length is not None and info.cycle_length >= 2 and r <= 5:
        cv = cyclic_table(info.cycle_length, r)
        if cv.verdict == HIGHER and cv.obstruction.relation == "subgraph":
            back = {info.to_model[v] * r + i: v * r + i for v in range(base.n) for i in range(r)}
            ob = _make(cv.obstruction.rule, cv.obstruction.graph, "subgraph", base, r,
                       embedding=tuple(back[x] for x in cv.obstruction.embedding), note=cv.obstruction.note)
            return SetVerdict(c, HIGHER, RULE_CYCLIC, obstruction=ob)
        if cv.verdict in (PLANAR, TOROIDAL):
            target = blowup(base, r)
            cert = _transport(cv.certificate, info, r, target)
            witness = is_planar(target).witness if cv.verdict == TOROIDAL else None
            return SetVerdict(c, cv.verdict, RULE_CYCLIC, certificate=cert, witness=witness)
    return SetVerdict(c, UNDETERMINED, RULE_CERTIFICATE, pending=True)


def _settle(sv: SetVerdict, info: BaseInfo, r: int, budget: int, effort: int, seed: int) -> SetVerdict:
    """Explicit planarity test and genus search on the blow-up."""
    target = blowup(info.graph, r)
    pl = is_planar(target)
    if pl:
        return SetVerdict(sv.gens, PLANAR, RULE_CERTIFICATE, certificate=pl.certificate)
    bounds = exact_genus(target, budget=budget, effort=effort, seed=seed)
    if bounds.upper == 1:
        return SetVerdict(sv.gens, TOROIDAL, RULE_CERTIFICATE, certificate=bounds.certificate,
                          witness=pl.witness, bounds=bounds)
    verdict = HIGHER if bounds.lower >= 2 else UNDETERMINED
    return SetVerdict(sv.gens, verdict, RULE_CERTIFICATE, witness=pl.witness, bounds=bounds)


def evaluate_generating_set(g: MulTable, c: GeneratingSet, r: int, budget: int = 10**6,
                            effort: int = 5_000, seed: int = 0) -> SetVerdict:
    info = base_info(g, c)
    sv = _cheap(info, c, g, r)
    return _settle(sv, info, r, budget, effort, seed) if sv.pending else sv


# --------------------------------------------------------------------------
# records

@dataclass
class ClassificationRecord:
    group: str
    r: int
    verdict: str
    rule: str
    witness_gens: GeneratingSet | None
    certificate: EmbeddingCertificate | None
    nonplanarity: KuratowskiWitness | None
    obstructions: dict[GeneratingSet, Obstruction] = field(default_factory=dict)
    per_set: list[SetVerdict] = field(default_factory=list)
    verdict_minimum: str = UNDETERMINED
    expected_toroidal: bool | None = None

    @property
    def agrees(self) -> bool | None:
        if self.expected_toroidal is None:
            return None
        return (self.verdict == TOROIDAL) == self.expected_toroidal

    def sound(self) -> bool:
        """Re-check the evidence behind the verdict."""
        if self.verdict == PLANAR:
            return self.certificate is not None and self.certificate.recheck().genus == 0
        if self.verdict == TOROIDAL:
            return (self.certificate is not None and self.certificate.recheck().genus == 1
                    and self.nonplanarity is not None and self.nonplanarity.check(self.certificate.graph))
        if self.verdict == HIGHER:
            return all(sv.verdict == HIGHER for sv in self.per_set) and all(
                sv.obstruction.verify() if sv.obstruction is not None
                else sv.bounds is not None and sv.bounds.lower >= 2
                for sv in self.per_set)
        return False

    def row(self) -> dict:
        return {
            "group": self.group,
            "r": self.r,
            "verdict": self.verdict,
            "rule": self.rule,
            "witness": list(self.witness_gens) if self.witness_gens is not None else None,
            "verdict_minimum_sets": self.verdict_minimum,
            "generating_sets": len(self.per_set),
            "expected_toroidal": self.expected_toroidal,
            "agrees": self.agrees,
        }


def _aggregate(items: list[SetVerdict]) -> SetVerdict | None:
    if not items:
        return None
    return min(items, key=lambda sv: (_RANK[sv.verdict], RULE_ORDER.index(sv.rule), sv.gens))


def _summary(items: list[SetVerdict]) -> tuple[SetVerdict | None, str]:
    best = _aggregate(items)
    if best is None:
        return None, UNDETERMINED
    if best.verdict != PLANAR and any(sv.pending for sv in items):
        return best, UNDETERMINED
    return best, best.verdict


def classify_right_group(g: MulTable, r: int, budget: int = 10**6, effort: int = 5_000, seed: int = 0,
                         gensets: list[GeneratingSet] | None = None) -> ClassificationRecord:
    """Smallest genus class of ``Cay(G x R_r, C x R_r)`` over minimal ``C``."""
    if not g.is_group or g.order < 2:
        raise ValueError(f"{g.label} must be a non-trivial group")
    if g.order > MAX_ORDER or not 1 <= r <= MAX_R:
        raise ValueError(f"caps: order <= {MAX_ORDER}, 1 <= r <= {MAX_R}")
    sets = gensets if gensets is not None else minimal_generating_sets(g)
    per = [_cheap(base_info(g, c), c, g, r) for c in sets]
    if not any(sv.verdict == PLANAR for sv in per):
        per = [_settle(sv, base_info(g, sv.gens), r, budget, effort, seed) if sv.pending else sv
               for sv in per]
    best, verdict = _summary(per)
    smallest = min(len(c) for c in sets)
    _, verdict_min = _summary([sv for sv in per if len(sv.gens) == smallest])
    if verdict == HIGHER:
        return ClassificationRecord(
            g.label, r, HIGHER, best.rule, None, None, None,
            {sv.gens: sv.obstruction for sv in per if sv.obstruction is not None}, per, verdict_min)
    return ClassificationRecord(g.label, r, verdict, best.rule,
                                best.gens if verdict in (PLANAR, TOROIDAL) else None,
                                best.certificate, best.witness, {}, per, verdict_min)


# --------------------------------------------------------------------------
# the classification list and its checks

def expected_toroidal(family: str, n: int, r: int) -> bool:
    """Membership in the classification list of toroidal right groups."""
    if family == "Z":
        return (n, r) in {(2, 3), (2, 4), (3, 3)} or (n >= 4 and r == 2)
    if family == "Z2xZ":
        return n % 2 == 1 and r == 2
    if family in ("D", "Z2xD"):
        return n >= 2 and r == 2
    return False


@dataclass(frozen=True)
class Member:
    family: str
    n: int

    @property
    def spec(self) -> str:
        return {"Z": f"Z{self.n}", "D": f"D{self.n}", "A": f"A{self.n}", "S": f"S{self.n}",
                "Z2xZ": f"Z2xZ{self.n}", "Z2xD": f"Z2xD{self.n}", "Z2xA": f"Z2xA{self.n}",
                "Z2xS": f"Z2xS{self.n}"}[self.family]

    def build(self) -> MulTable:
        make = {"Z": make_cyclic, "D": make_dihedral, "A": make_alternating, "S": make_symmetric}
        fam = self.family.removeprefix("Z2x")
        g = make[fam](self.n)
        return direct_product(make_cyclic(2), g) if self.family.startswith("Z2x") else g


def family_grid(max_n: int = 10) -> list[Member]:
    grid = [Member("Z", n) for n in range(2, max_n + 1)]
    grid += [Member("D", n) for n in range(2, min(6, max_n) + 1)]
    grid += [Member("A", 4), Member("S", 4)] if max_n >= 4 else []
    grid += [Member("Z2xZ", n) for n in range(3, min(5, max_n) + 1)]
    grid += [Member("Z2xD", n) for n in range(2, min(5, max_n) + 1)]
    grid += [Member("Z2xA", 4)] if max_n >= 4 else []
    return grid


def theorem_report(max_n: int = 10, max_r: int = 5, budget: int = 10**6, effort: int = 5_000,
                   seed: int = 0) -> list[ClassificationRecord]:
    records = []
    for member in family_grid(max_n):
        g = member.build()
        sets = minimal_generating_sets(g)
        for r in range(1, max_r + 1):
            rec = classify_right_group(g, r, budget, effort, seed, gensets=sets)
            rec.group = member.spec
            rec.expected_toroidal = expected_toroidal(member.family, member.n, r)
            records.append(rec)
    return sorted(records, key=lambda rec: (rec.group, rec.r))


def degree_inequality_holds(g: MulTable) -> bool:
    """``#involutions + 2 #(order >= 3) >= 3`` for every minimal generating set.

    The sum is at most 2 only for a single generator or a pair of
    involutions, so it suffices that ``g`` is neither cyclic nor generated
    by two involutions.
    """
    cyclic = any(generates(g, (x,)) for x in range(g.order))
    return not cyclic and not two_involutions_generate(g)


def degree_inequality_by_enumeration(g: MulTable) -> bool:
    inv = set(involutions(g))
    return all(sum(1 if x in inv else 2 for x in c) >= 3 for c in minimal_generating_sets(g))


def involution_pair_checks(include_a5: bool = True) -> dict[str, bool]:
    z2 = make_cyclic(2)
    groups = [make_alternating(4), make_symmetric(4), direct_product(z2, make_alternating(4)),
              direct_product(z2, make_symmetric(4))]
    if include_a5:
        groups += [make_alternating(5), direct_product(z2, make_alternating(5))]
    groups += [direct_product(z2, make_cyclic(2 * n)) for n in range(2, 6)]
    groups += [make_dihedral(n) for n in range(2, 7)]
    return {g.label: two_involutions_generate(g) for g in groups}


def redundant_generator_spot_check(g: MulTable, c: GeneratingSet, r: int) -> bool:
    """Adding generators to ``C`` only adds edges to the blown-up Cayley graph."""
    rz = make_right_zero(r)
    gr = direct_product(g, rz)
    small = cayley_graph(gr, product_set(g, c, rz, range(r)))
    for x in range(g.order):
        if x in c:
            continue
        big = cayley_graph(gr, product_set(g, tuple(c) + (x,), rz, range(r)))
        if not small.edges <= big.edges:
            return False
    return True


# --------------------------------------------------------------------------
# the genus-3 example, step by step

@dataclass(frozen=True)
class Step:
    name: str
    claim: str
    passed: bool
    evidence: dict


def _v(label: str) -> int:
    """``"4"`` is ``(4, r_1)`` and ``"4'"`` is ``(4, r_2)``."""
    return 2 * int(label.rstrip("'")) + label.endswith("'")


def _vs(*labels: str) -> list[int]:
    return [_v(x) for x in labels]


def _name(v: int) -> str:
    return f"{v // 2}" + ("'" if v % 2 else "")


def four_cycles_through(h: SimpleGraph, a: int, b: int) -> list[tuple[int, ...]]:
    """Every 4-cycle of ``h`` through ``a`` and ``b``, by exhaustive enumeration."""
    found = []
    rest = [v for v in range(h.n) if v not in (a, b)]
    for x, y in itertools.combinations(rest, 2):
        quad = (a, b, x, y)
        for p in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)):
            cyc = tuple(quad[i] for i in p)
            if all(h.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                found.append(cyc)
    return sorted(found)


def replay_example38() -> list[Step]:
    g = example_graph()
    drop = [(u, v) for u in _vs("1", "1'") for v in _vs("5", "5'")]
    drop += [(u, v) for u in _vs("0", "0'") for v in _vs("4", "4'")]
    h = g.remove_edges(drop)
    steps = []

    tri = sum(edge_triangle_profile(h).values()) // 3
    steps.append(Step("a", "H has 28 edges and no triangle", h.m == 28 and tri == 0,
                      {"removed": len(drop), "edges": h.m, "triangles": tri}))

    def kxx(left, right):
        return {(min(u, v), max(u, v)) for u in _vs(*left) for v in _vs(*right)}

    a = kxx(("0", "0'", "5", "5'"), ("2", "2'", "3", "3'"))
    b = kxx(("0", "0'", "1", "1'"), ("3", "3'", "4", "4'"))
    a_in, b_in = a <= h.edges, b <= h.edges
    missing = sorted((a | b) - h.edges)
    uncovered = sorted(h.edges - (a | b))
    steps.append(Step("b", "H is two K44 copies A, B glued along four shared edges",
                      a_in and b_in and not uncovered and len(a & b) == 4,
                      {"A_in_H": a_in, "B_in_H": b_in, "shared": len(a & b),
                       "missing": [(_name(u), _name(v)) for u, v in missing],
                       "uncovered": [(_name(u), _name(v)) for u, v in uncovered]}))

    faces = h.m - h.n - 2  # n - m + f = -2
    steps.append(Step("c", "a double-torus embedding of H has 14 faces, all quadrilaterals",
                      faces == 14 and 4 * faces == 2 * h.m and girth(h) == 4,
                      {"faces": faces, "girth": girth(h), "face_sides": 2 * h.m}))

    c1 = four_cycles_through(h, _v("4"), _v("0"))
    c2 = four_cycles_through(h, _v("4"), _v("0'"))
    want1, want2 = set(_vs("2'", "4", "2", "0")), set(_vs("2'", "4", "2", "0'"))
    steps.append(Step("d", "the only 4-cycles through 4,0 and 4,0' are {2',4,2,0} and {2',4,2,0'}",
                      [set(c) for c in c1] == [want1] and [set(c) for c in c2] == [want2],
                      {"through_4_0": [[_name(v) for v in c] for c in c1],
                       "through_4_0'": [[_name(v) for v in c] for c in c2]}))

    left, right = _vs("2", "2'"), _vs("0", "0'", "4")
    present = all(h.has_edge(u, v) for u in left for v in right)
    k23 = complete_bipartite(2, 3)
    op = is_outer_planar(k23)
    steps.append(Step("e", "H contains K23 ({2,2'},{0,0',4}), which is not outer planar",
                      present and not op and op.witness is not None and op.witness.pattern == "K23",
                      {"edges_present": present, "outer_planar": bool(op),
                       "witness": op.witness.pattern if op.witness else None}))
    return steps
