"""Planarity and outer-planarity with Kuratowski-type witnesses.

The decision itself uses networkx's left-right planarity test.  A negative
answer always comes with a subdivision of K5/K3,3 (or K4/K2,3 for
outer-planarity), found by :func:`find_subdivision` on small graphs so the
lexicographically smallest branch set is reported, and otherwise extracted
from a block-deletion search for an edge-minimal non-planar subgraph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from ..cayley import SimpleGraph
from .embedding import EmbeddingCertificate, RotationSystem, face_trace

SUBDIVISION_CAP = 100
#: Up to this many vertices witnesses come from the exhaustive search.
CANONICAL_WITNESS_MAX_N = 12
CANONICAL_WITNESS_BUDGET = 200_000


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Pattern:
    name: str
    parts: tuple[int, ...]  # (k,) for complete graphs, (a, b) for bipartite

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def edges(self) -> list[tuple[int, int]]:
        if len(self.parts) == 1:
            return list(itertools.combinations(range(self.parts[0]), 2))
        a, b = self.parts
        return [(i, a + j) for i in range(a) for j in range(b)]

    def degree(self, i: int) -> int:
        if len(self.parts) == 1:
            return self.parts[0] - 1
        a, b = self.parts
        return b if i < a else a


PATTERNS = {
    "K5": Pattern("K5", (5,)),
    "K33": Pattern("K33", (3, 3)),
    "K4": Pattern("K4", (4,)),
    "K23": Pattern("K23", (2, 3)),
    "K22": Pattern("K22", (2, 2)),
}


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of ``pattern``: branch vertices in role order, one path per pattern edge."""

    pattern: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        p = PATTERNS[self.pattern].parts
        if len(p) == 1:
            return (self.branch,)
        return (self.branch[:p[0]], self.branch[p[0]:])

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.branch))

    def check(self, g: SimpleGraph) -> bool:
        pat = PATTERNS[self.pattern]
        if len(self.branch) != pat.size or len(set(self.branch)) != pat.size:
            return False
        if len(self.paths) != len(pat.edges):
            return False
        branch = set(self.branch)
        inner_seen: set[int] = set()
        for (i, j), path in zip(pat.edges, self.paths):
            if len(path) < 2 or {path[0], path[-1]} != {self.branch[i], self.branch[j]}:
                return False
            if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
                return False
            inner = path[1:-1]
            if len(set(inner)) != len(inner) or set(inner) & (branch | inner_seen):
                return False
            inner_seen |= set(inner)
        return True


# --------------------------------------------------------------------------
# subdivision search

def _role_assignments(pat: Pattern, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if len(pat.parts) == 1:
        yield chosen
        return
    a, b = pat.parts
    if a == b:
        first, rest = chosen[0], chosen[1:]
        for side in itertools.combinations(rest, a - 1):
            left = (first,) + side
            yield left + tuple(v for v in chosen if v not in left)
    else:
        for left in itertools.combinations(chosen, a):
            yield left + tuple(v for v in chosen if v not in left)


class _Router:
    def __init__(self, g: SimpleGraph, budget: int | None):
        self.g = g
        self.nbrs = [sorted(g.adj[v]) for v in range(g.n)]
        self.budget = budget
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise SearchBudgetExceeded(f"subdivision search exceeded {self.budget} steps")

    def _reachable(self, s: int, t: int, blocked: set[int]) -> bool:
        seen, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in self.nbrs[x]:
                if y == t:
                    return True
                if y not in seen and y not in blocked:
                    seen.add(y)
                    stack.append(y)
        return False

    def paths(self, s: int, t: int, blocked: set[int]) -> Iterator[tuple[int, ...]]:
        """Simple s-t paths of length >= 2 whose interior avoids ``blocked``."""
        path = [s]
        on_path = {s}

        def dfs(x):
            self.tick()
            for y in self.nbrs[x]:
                if y == t and len(path) > 1:
                    yield tuple(path) + (t,)
                elif y != t and y not in blocked and y not in on_path:
                    if not self._reachable(y, t, blocked | on_path):
                        continue
                    path.append(y)
                    on_path.add(y)
                    yield from dfs(y)
                    path.pop()
                    on_path.discard(y)

        yield from dfs(s)

    def route(self, jobs: list[tuple[int, int]], branch: set[int]) -> list[tuple[int, ...]] | None:
        g = self.g
        direct = [(s, t) for s, t in jobs if g.has_edge(s, t)]
        todo = [(s, t) for s, t in jobs if not g.has_edge(s, t)]
        found: dict[tuple[int, int], tuple[int, ...]] = {e: e for e in direct}
        used: set[int] = set()

        def rec(k):
            if k == len(todo):
                return True
            s, t = todo[k]
            for p in self.paths(s, t, branch | used):
                inner = p[1:-1]
                used.update(inner)
                found[(s, t)] = p
                if rec(k + 1):
                    return True
                used.difference_update(inner)
            return False

        if not rec(0):
            return None
        return [found[j] for j in jobs]


def find_subdivision(g: SimpleGraph, pattern: str, budget: int | None = None) -> KuratowskiWitness | None:
    """Subdivision of ``pattern`` in ``g`` with lexicographically smallest branch set.

    ``None`` certifies absence (the search is exhaustive).  Raises
    :class:`SearchBudgetExceeded` when ``budget`` path-search steps run out.
    """
    if g.n > SUBDIVISION_CAP:
        raise ValueError(f"subdivision search is capped at {SUBDIVISION_CAP} vertices")
    pat = PATTERNS[pattern]
    need = min(pat.degree(i) for i in range(pat.size))
    cands = [v for v in range(g.n) if g.degree(v) >= need]
    router = _Router(g, budget)
    for chosen in itertools.combinations(cands, pat.size):
        for roles in _role_assignments(pat, chosen):
            if any(g.degree(v) < pat.degree(i) for i, v in enumerate(roles)):
                continue
            router.tick()
            jobs = [(roles[i], roles[j]) for i, j in pat.edges]
            paths = router.route(jobs, set(roles))
            if paths is not None:
                w = KuratowskiWitness(pattern, roles, tuple(paths))
                assert w.check(g)
                return w
    return None


def _smallest_witness(g: SimpleGraph, patterns: tuple[str, ...]) -> KuratowskiWitness | None:
    best = None
    for p in patterns:
        w = find_subdivision(g, p, budget=CANONICAL_WITNESS_BUDGET)
        if w is not None and (best is None or w.key < best.key):
            best = w
    return best


def kuratowski_subgraph(g: SimpleGraph) -> nx.Graph:
    """An edge-minimal non-planar subgraph of ``g``, i.e. a Kuratowski subdivision.

    Blocks of edges are dropped while the rest stays non-planar; a block
    that cannot go is halved until single necessary edges are isolated.
    """
    def nonplanar(es):
        return not nx.check_planarity(nx.Graph(es))[0]

    rest, needed = g.sorted_edges(), []
    if not nonplanar(rest):
        raise ValueError("graph is planar")
    size = max(1, len(rest) // 2)
    while rest:
        size = min(size, len(rest))
        if nonplanar(needed + rest[size:]):
            rest = rest[size:]
            size *= 2
        elif size == 1:
            needed.append(rest.pop(0))
        else:
            size //= 2
    return nx.Graph(needed)


def witness_from_subgraph(g: SimpleGraph, h: nx.Graph) -> KuratowskiWitness:
    """Read branch vertices and paths off a Kuratowski subgraph ``h`` of ``g``."""
    branch = sorted(v for v in h if h.degree(v) >= 3)
    paths = {}
    for b in branch:
        for w in sorted(h[b]):
            walk, prev, cur = [b], b, w
            while h.degree(cur) == 2:
                walk.append(cur)
                prev, cur = cur, next(x for x in h[cur] if x != prev)
            walk.append(cur)
            key = (min(b, cur), max(b, cur))
            paths.setdefault(key, tuple(walk) if walk[0] == key[0] else tuple(reversed(walk)))
    if len(branch) == 5:
        pattern, roles = "K5", tuple(branch)
    elif len(branch) == 6:
        pattern = "K33"
        left = [branch[0]] + [v for v in branch[1:] if (min(branch[0], v), max(branch[0], v)) not in paths]
        roles = tuple(left) + tuple(v for v in branch if v not in left)
    else:
        raise ValueError("subgraph is not a Kuratowski subdivision")
    pat = PATTERNS[pattern]
    ordered = []
    for i, j in pat.edges:
        a, b = roles[i], roles[j]
        p = paths[(min(a, b), max(a, b))]
        ordered.append(p if p[0] == a else tuple(reversed(p)))
    w = KuratowskiWitness(pattern, roles, tuple(ordered))
    if not w.check(g):
        raise AssertionError("extracted witness failed validation")
    return w


# --------------------------------------------------------------------------
# decisions

@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    certificate: EmbeddingCertificate | None = None
    witness: KuratowskiWitness | None = None

    def __bool__(self):
        return self.planar


def _rotation_from_nx(emb: nx.PlanarEmbedding, n: int) -> RotationSystem:
    return RotationSystem(tuple(tuple(emb.neighbors_cw_order(v)) if v in emb else () for v in range(n)))


def is_planar(g: SimpleGraph, canonical_witness: bool | None = None) -> PlanarityResult:
    """Decide planarity; genus-0 certificate or K5 / K3,3 subdivision."""
    ok, emb = nx.check_planarity(g.to_networkx())
    if ok:
        cert = face_trace(g, _rotation_from_nx(emb, g.n), "planar")
        if cert.genus != 0:
            raise AssertionError("planar embedding traced to positive genus")
        return PlanarityResult(True, certificate=cert)
    if canonical_witness is None:
        canonical_witness = g.n <= CANONICAL_WITNESS_MAX_N
    w = None
    if canonical_witness:
        try:
            w = _smallest_witness(g, ("K33", "K5"))
        except SearchBudgetExceeded:
            w = None
    if w is None:
        w = witness_from_subgraph(g, kuratowski_subgraph(g))
    return PlanarityResult(False, witness=w)


@dataclass(frozen=True)
class OuterPlanarityResult:
    outer_planar: bool
    certificate: EmbeddingCertificate | None = None
    outer_faces: tuple[tuple[int, ...], ...] = ()
    witness: KuratowskiWitness | None = None

    def __bool__(self):
        return self.outer_planar


def _with_apex(g: SimpleGraph) -> SimpleGraph:
    a = g.n
    return SimpleGraph.from_edges(g.n + 1, list(g.edges) + [(v, a) for v in range(g.n)])


def _drop_apex(w: KuratowskiWitness, apex: int) -> KuratowskiWitness:
    """Turn a K5/K3,3 subdivision of ``g + apex`` into a K4/K2,3 subdivision of ``g``."""
    pat = PATTERNS[w.pattern]
    if w.pattern == "K5":
        if apex in w.branch:
            drop = w.branch.index(apex)
        else:
            hit = [i for i, p in enumerate(w.paths) if apex in p]
            drop = pat.edges[hit[0]][0] if hit else 0
        keep = [i for i in range(5) if i != drop]
        roles = tuple(w.branch[i] for i in keep)
        new = PATTERNS["K4"]
        paths = tuple(w.paths[pat.edges.index((keep[i], keep[j]))] for i, j in new.edges)
        return KuratowskiWitness("K4", roles, paths)
    left, right = w.parts
    if apex in w.branch:
        drop = apex
    else:
        hit = [p for p in w.paths if apex in p]
        drop = hit[0][0] if hit else left[0]
    if drop in right:
        left, right = right, left
    small = tuple(v for v in left if v != drop)
    roles = small + tuple(right)
    index = {(w.branch[i], w.branch[j]): k for k, (i, j) in enumerate(pat.edges)}
    paths = []
    for i, j in PATTERNS["K23"].edges:
        a, b = roles[i], roles[j]
        k = index.get((a, b), index.get((b, a)))
        p = w.paths[k]
        paths.append(p if p[0] == a else tuple(reversed(p)))
    return KuratowskiWitness("K23", roles, tuple(paths))


def is_outer_planar(g: SimpleGraph, canonical_witness: bool | None = None) -> OuterPlanarityResult:
    """Outer-planarity via the apex trick: g is outer planar iff g + apex is planar."""
    apexed = _with_apex(g)
    ok, emb = nx.check_planarity(apexed.to_networkx())
    if ok:
        rot = _rotation_from_nx(emb, g.n + 1)
        rot = RotationSystem(tuple(tuple(u for u in rot.rot[v] if u != g.n) for v in range(g.n)))
        cert = face_trace(g, rot, "outer-planar")
        outer = []
        for comp in g.components():
            cs = set(comp)
            faces = [f for f in cert.faces if f[0] in cs]
            hit = [f for f in faces if set(f) == cs]
            if not faces:
                outer.append(tuple(comp))
            elif hit:
                outer.append(hit[0])
            else:
                raise AssertionError("apex embedding left no face through every vertex")
        return OuterPlanarityResult(True, certificate=cert, outer_faces=tuple(outer))
    if canonical_witness is None:
        canonical_witness = g.n <= CANONICAL_WITNESS_MAX_N
    w = None
    if canonical_witness:
        try:
            w = _smallest_witness(g, ("K4", "K23"))
        except SearchBudgetExceeded:
            w = None
    if w is None:
        w = _drop_apex(witness_from_subgraph(apexed, kuratowski_subgraph(apexed)), g.n)
        if not w.check(g):
            raise AssertionError("derived outer-planarity witness failed validation")
    return OuterPlanarityResult(False, witness=w)
