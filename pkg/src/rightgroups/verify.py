"""Checkable claims about right-group Cayley graphs, grouped into suites.

Each suite returns :class:`Check` rows; the CLI prints them and the
acceptance tests assert on them.  Suites take range arguments so the CLI can
run a reduced table.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

import networkx as nx

from . import classify as cl
from .algebra import (
    MulTable,
    direct_product,
    element_order,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_left_zero,
    make_right_zero,
    make_symmetric,
    minimal_generating_sets,
    product_set,
)
from .cayley import SimpleGraph, cayley_graph, complete_bipartite, complete_graph
from .embeddings import (
    TRIPLE_TORUS_EFFORT,
    TRIPLE_TORUS_SEED,
    cyclic_right_group_graph,
    example_graph,
)
from .products import blowup, verify_cross_identity, verify_lex_identity
from .topology import (
    euler_lower_bound,
    exact_genus,
    find_subdivision,
    heuristic_upper,
    is_outer_planar,
    is_planar,
)


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  [{self.suite}] {self.name}: {self.detail}"


def _timed(suite: str, name: str, fn: Callable[[], tuple[bool, str, dict]]) -> Check:
    t0 = time.perf_counter()
    ok, detail, data = fn()
    return Check(suite, name, ok, detail, time.perf_counter() - t0, data)


# --------------------------------------------------------------------------
# product identities

def product_objects() -> list[MulTable]:
    objs = [make_cyclic(n) for n in range(1, 7)]
    objs += [make_dihedral(n) for n in range(2, 5)]
    objs += [make_right_zero(r) for r in range(1, 5)]
    return objs


def suite_products() -> list[Check]:
    objs = product_objects()
    sets = {id(s): minimal_generating_sets(s) for s in objs}

    def cross():
        bad, count = [], 0
        for s, t in itertools.product(objs, repeat=2):
            for cs in sets[id(s)]:
                for dt in sets[id(t)]:
                    count += 1
                    w = verify_cross_identity(s, cs, t, dt)
                    if not w.holds:
                        bad.append((s.label, cs, t.label, dt, w.counterexample))
        return not bad, f"{count} (S,C,T,D) combinations, {len(bad)} mismatches", {"failures": bad[:5]}

    def lex_right_groups():
        rights = [make_right_zero(1), make_right_zero(2), make_right_zero(3), make_cyclic(2), make_cyclic(3),
                  direct_product(make_cyclic(2), make_right_zero(2))]
        monoids = [make_cyclic(3), make_cyclic(4), make_dihedral(3)]
        bad, count = [], 0
        for t in rights:
            for s in monoids:
                for cs in minimal_generating_sets(s):
                    for dt in minimal_generating_sets(t):
                        count += 1
                        w = verify_lex_identity(s, cs, t, dt)
                        if not (w.holds and w.right_group):
                            bad.append((s.label, cs, t.label, dt))
        return not bad, f"{count} combinations over 6 right groups, {len(bad)} mismatches", {"failures": bad[:5]}

    def lex_left_zero():
        t = make_left_zero(2)
        out = []
        for s in (make_cyclic(3), make_cyclic(4), make_dihedral(3)):
            for cs in minimal_generating_sets(s):
                out.append(verify_lex_identity(s, cs, t, (0, 1)))
        ok = all(not w.holds and w.counterexample is not None and w.right_group is False for w in out)
        ce = out[0].counterexample
        return ok, f"{len(out)} combinations all fail; first counterexample edge {ce} ({out[0].details.get('edge')})", {}

    return [
        _timed("products", "cross identity over all minimal generating sets", cross),
        _timed("products", "lexicographic identity for right groups", lex_right_groups),
        _timed("products", "lexicographic identity fails for the left-zero semigroup", lex_left_zero),
    ]


# --------------------------------------------------------------------------
# blow-up identity

def suite_blowup() -> list[Check]:
    def groups():
        bad, count = [], 0
        for g in [make_cyclic(n) for n in range(3, 7)] + [make_dihedral(3)]:
            for c in minimal_generating_sets(g):
                for r in (2, 3):
                    rz = make_right_zero(r)
                    count += 1
                    direct = cayley_graph(direct_product(g, rz), product_set(g, c, rz, range(r)))
                    if direct != blowup(cayley_graph(g, c), r):
                        bad.append((g.label, c, r))
        return not bad, f"{count} (G,C,r) triples equal their blow-ups, {len(bad)} mismatches", {"failures": bad}

    def kkr():
        bad = [(k, r) for k in range(1, 4) for r in range(1, 4)
               if blowup(complete_bipartite(k, k), r) != complete_bipartite(k * r, k * r)]
        return not bad, f"K_(k,k)[K_r-bar] = K_(kr,kr) for k,r <= 3; mismatches {bad}", {}

    return [_timed("blowup", "Cay(GxR_r, CxR_r) = Cay(G,C)[K_r-bar]", groups),
            _timed("blowup", "complete bipartite blow-ups", kkr)]


# --------------------------------------------------------------------------
# cyclic table

def cyclic_expected(n: int, r: int) -> bool:
    return (n, r) in {(2, 3), (2, 4), (3, 3)} or (n >= 4 and r == 2)


def suite_cyclic(max_n: int = 8, max_r: int = 5) -> list[Check]:
    def table():
        wrong, unsound = [], []
        for n in range(2, max_n + 1):
            for r in range(1, min(max_r, 5) + 1):
                cv = cl.cyclic_table(n, r)
                if (cv.verdict == cl.TOROIDAL) != cyclic_expected(n, r):
                    wrong.append((n, r, cv.verdict))
                if cv.verdict == cl.TOROIDAL:
                    good = (cv.certificate.recheck().genus == 1 and cv.certificate.graph == cv.graph
                            and cv.witness is not None and cv.witness.check(cv.graph))
                elif cv.verdict == cl.PLANAR:
                    good = cv.certificate.recheck().genus == 0
                else:
                    good = cv.obstruction is not None and cv.obstruction.verify()
                if not good:
                    unsound.append((n, r))
        ok = not wrong and not unsound
        return ok, f"n <= {max_n}, r <= {min(max_r, 5)}: wrong {wrong}, unsound {unsound}", {}

    def count34():
        cv = cl.cyclic_table(3, 4)
        ob = cv.obstruction
        if ob is None:
            return False, f"(3,4) gave {cv.verdict} with no obstruction", {}
        g = ob.graph
        euler = g.n - g.m + ob.faces_needed
        ok = (cv.verdict == cl.HIGHER and (g.n, g.m) == (12, 32) and ob.faces_needed == 20
              and euler == 0 and 4 * ob.faces_needed > 2 * g.m and ob.faces_max == 16 and ob.verify())
        return ok, (f"{g.n} - {g.m} + {ob.faces_needed} = {euler}; 4*{ob.faces_needed} = "
                    f"{4 * ob.faces_needed} > {2 * g.m}; at most {ob.faces_max} faces"), {}

    return [_timed("cyclic", "toroidal exactly on the listed (n, r)", table),
            _timed("cyclic", "(3,4) excluded by the triangle-free face count", count34)]


# --------------------------------------------------------------------------
# Euler bounds

def suite_bounds() -> list[Check]:
    def k55():
        v = euler_lower_bound(complete_bipartite(5, 5))
        return v == 3, f"euler_lower_bound(K55) = {v}", {}

    def k66():
        v = euler_lower_bound(complete_bipartite(6, 6))
        return v == 4, f"euler_lower_bound(K66) = {v}", {}

    def k5blow():
        g = blowup(complete_graph(5), 2)
        v = euler_lower_bound(g)
        faces = g.m - g.n
        need = 3 * faces // 2
        ok = v >= 2 and faces == 30 and need == 45 and g.m == 40
        return ok, f"bound {v}; a torus embedding needs {faces} faces, i.e. {need} edges, but there are {g.m}", {}

    return [_timed("bounds", "K55 bound", k55), _timed("bounds", "K66 bound", k66),
            _timed("bounds", "K5[K2-bar] is not toroidal", k5blow)]


# --------------------------------------------------------------------------
# exact genus

def maschke_examples() -> list[tuple[str, SimpleGraph]]:
    """Planar Cayley graphs of the Maschke families with cycle-shaped bases."""
    out = []
    for n in range(3, 11):
        out.append((f"Cay(Z{n},{{1}})", cayley_graph(make_cyclic(n), (1,))))
    for n in range(2, 7):
        d = make_dihedral(n)
        a, b = 0 + n, 1 + n  # flips s0 and s1
        out.append((f"Cay(D{n},{{s0,s1}})", cayley_graph(d, (a, b))))
    for m in (3, 5):
        g = direct_product(make_cyclic(2), make_cyclic(m))
        out.append((f"Cay(Z2xZ{m},{{(1,1)}})", cayley_graph(g, (m + 1,))))
    for g in (make_alternating(4), make_symmetric(4), make_alternating(5),
              direct_product(make_cyclic(2), make_alternating(4))):
        c = planar_pair(g)
        out.append((f"Cay({g.label},{{{','.join(g.names[x] for x in c)}}})", cayley_graph(g, c)))
    return out


def planar_pair(g: MulTable) -> tuple[int, ...]:
    """First generating pair, by element order then index, with a planar Cayley graph."""
    elems = sorted(range(g.order), key=lambda x: (-element_order(g, x), x))
    for a, b in itertools.combinations(elems, 2):
        c = tuple(sorted((a, b)))
        if cl.generates(g, c) and is_planar(cayley_graph(g, c)):
            return c
    raise ValueError(f"{g.label} has no planar two-generator Cayley graph")


def suite_genus(budget: int = 10**7) -> list[Check]:
    checks = []
    targets = [("K5", complete_graph(5)), ("K33", complete_bipartite(3, 3)),
               ("K44", complete_bipartite(4, 4)), ("Cay(Z3xR3)", cyclic_right_group_graph(3, 3))]
    for name, g in targets:
        def run(g=g):
            b = exact_genus(g, budget=budget)
            ok = b.value == 1 and b.certificate.recheck().genus == 1
            return ok, str(b), {"expansions": b.expansions}
        checks.append(_timed("genus", f"exact genus of {name} is 1", run))

    def maschke():
        bad = []
        examples = maschke_examples()
        for name, g in examples:
            b = exact_genus(g, budget=budget)
            if b.value != 0:
                bad.append((name, str(b)))
        return not bad, f"{len(examples)} planar Cayley graphs, failures {bad}", {}

    checks.append(_timed("genus", "exact genus 0 on the Maschke examples", maschke))
    return checks


# --------------------------------------------------------------------------
# classification

def suite_theorem(max_n: int = 10, max_r: int = 5, budget: int = 10**6, effort: int = 5_000,
                  seed: int = 0, include_a5: bool = True) -> list[Check]:
    report: list[cl.ClassificationRecord] = []

    def agreement():
        report.extend(cl.theorem_report(max_n, max_r, budget, effort, seed))
        bad = [(rec.group, rec.r, rec.verdict) for rec in report if not rec.agrees]
        return not bad, f"{len(report)} records; disagreements {bad}", {"rows": [rec.row() for rec in report]}

    def soundness():
        bad = [(rec.group, rec.r) for rec in report if rec.verdict != cl.UNDETERMINED and not rec.sound()]
        open_ = [(rec.group, rec.r) for rec in report if rec.verdict == cl.UNDETERMINED]
        return not bad and not open_, f"unsound {bad}, undetermined {open_}", {}

    def involution_pairs():
        got = cl.involution_pair_checks(include_a5)
        want = {k: k.startswith("D") for k in got}
        bad = {k: v for k, v in got.items() if v != want[k]}
        return not bad, f"{len(got)} groups; mismatches {bad}", {"values": got}

    def degree_inequality():
        z2 = make_cyclic(2)
        groups = [make_alternating(4), make_symmetric(4), direct_product(z2, make_alternating(4)),
                  direct_product(z2, make_symmetric(4))]
        if include_a5:
            groups += [make_alternating(5), direct_product(z2, make_alternating(5))]
        groups += [direct_product(z2, make_cyclic(2 * n)) for n in range(2, 6)]
        bad = [g.label for g in groups if not cl.degree_inequality_holds(g)]
        small = [g for g in groups if g.order <= 24]
        cross = [g.label for g in small if cl.degree_inequality_by_enumeration(g) != cl.degree_inequality_holds(g)]
        return not bad and not cross, f"{len(groups)} groups; failing {bad}; enumeration disagrees on {cross}", {}

    def monotone():
        bad = []
        for g in (make_cyclic(6), make_dihedral(4), make_alternating(4)):
            for c in minimal_generating_sets(g)[:4]:
                if not cl.redundant_generator_spot_check(g, c, 2):
                    bad.append((g.label, c))
        return not bad, f"adding a generator never removes an edge; failures {bad}", {}

    return [_timed("theorem", "verdicts match the classification list", agreement),
            _timed("theorem", "every verdict re-checks", soundness),
            _timed("theorem", "two involutions generate exactly the dihedral groups", involution_pairs),
            _timed("theorem", "degree inequality on the excluded groups", degree_inequality),
            _timed("theorem", "redundant generators only add edges", monotone)]


# --------------------------------------------------------------------------
# the genus-3 example

def suite_example38(seed: int = TRIPLE_TORUS_SEED, effort: int = TRIPLE_TORUS_EFFORT) -> list[Check]:
    checks = []
    for step in cl.replay_example38():
        checks.append(Check("example38", f"step ({step.name}) {step.claim}", step.passed,
                            ", ".join(f"{k}={v}" for k, v in step.evidence.items()), data=step.evidence))

    def upper():
        cert = heuristic_upper(example_graph(), effort=effort, seed=seed)
        ok = cert.graph == example_graph() and cert.recheck().genus <= 3
        return ok, f"seed {seed}, effort {effort}: genus {cert.genus} with {len(cert.faces)} faces", {}

    def not_toroidal():
        base = cayley_graph(make_cyclic(6), (2, 3))
        ob = cl.rule_threereg(base, (2, 3), make_cyclic(6))
        ok = ob is not None and ob.verify()
        return ok, ob.describe() if ob else "no obstruction", {}

    checks.append(_timed("example38", "seeded search reaches genus <= 3", upper))
    checks.append(_timed("example38", "the torus is excluded by the degree-3 lemma", not_toroidal))
    return checks


# --------------------------------------------------------------------------
# planarity oracles

def connected_atlas(max_n: int = 7) -> list[SimpleGraph]:
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(h):
            out.append(SimpleGraph.from_edges(n, h.edges()))
    return out


def suite_oracle(max_n: int = 7) -> list[Check]:
    graphs = connected_atlas(max_n)

    def planar():
        bad = []
        for i, g in enumerate(graphs):
            res = is_planar(g)
            kura = any(find_subdivision(g, p) is not None for p in ("K5", "K33"))
            if bool(res) == kura or (not res and not res.witness.check(g)):
                bad.append(i)
        return not bad, f"{len(graphs)} connected graphs on <= {max_n} vertices; disagreements {len(bad)}", {}

    def outer():
        bad = []
        for i, g in enumerate(graphs):
            res = is_outer_planar(g)
            obst = any(find_subdivision(g, p) is not None for p in ("K4", "K23"))
            if bool(res) == obst or (not res and not res.witness.check(g)):
                bad.append(i)
        return not bad, f"{len(graphs)} connected graphs on <= {max_n} vertices; disagreements {len(bad)}", {}

    return [_timed("oracle", "is_planar agrees with K5/K33 subdivision search", planar),
            _timed("oracle", "is_outer_planar agrees with K4/K23 subdivision search", outer)]


SUITES = {
    "products": suite_products,
    "blowup": suite_blowup,
    "cyclic": suite_cyclic,
    "bounds": suite_bounds,
    "genus": suite_genus,
    "theorem": suite_theorem,
    "example38": suite_example38,
    "oracle": suite_oracle,
}
