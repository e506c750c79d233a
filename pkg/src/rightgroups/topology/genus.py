"""Genus bounds: Euler counting, branch-and-bound over rotation systems, local search."""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass, field

from ..cayley import Edge, SimpleGraph
from .embedding import EmbeddingCertificate, RotationSystem, face_trace
from .planarity import is_planar

DEFAULT_BUDGET = 10**7
DEFAULT_EFFORT = 20_000

# lower-bound reason tags
PLANAR_TEST = "planar-test"
EULER_GIRTH = "euler-girth"
SUBGRAPH_OBSTRUCTION = "subgraph-obstruction"
EXHAUSTED_SEARCH = "exhausted-search"


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def _euler_component(n: int, m: int, gir: float) -> int:
    if m == 0 or gir == math.inf:
        return 0
    max_faces = (2 * m) // int(gir)
    return max(0, math.ceil((2 - n + m - max_faces) / 2))


def euler_only_bound(g: SimpleGraph) -> int:
    """Face-size counting alone: ``f <= 2m / girth`` in ``n - m + f = 2 - 2g``."""
    total = 0
    for comp in g.components():
        h = g.induced(comp)
        total += _euler_component(h.n, h.m, girth(h))
    return total


def euler_lower_bound(g: SimpleGraph, use_planarity: bool = True) -> int:
    """Euler/girth bound, raised to 1 when the planarity test says non-planar."""
    bound = euler_only_bound(g)
    if use_planarity and bound == 0 and not is_planar(g, canonical_witness=False):
        bound = 1
    return bound


def edge_triangle_profile(g: SimpleGraph) -> dict[Edge, int]:
    return {e: len(g.adj[e[0]] & g.adj[e[1]]) for e in g.sorted_edges()}


@dataclass
class GenusBounds:
    lower: int
    lower_reason: str
    upper: int | None
    certificate: EmbeddingCertificate | None = None
    expansions: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def __str__(self):
        if self.exact:
            return f"exact {self.lower} ({self.lower_reason})"
        up = "unknown" if self.upper is None else str(self.upper)
        return f"lower {self.lower} ({self.lower_reason}), upper {up}"


# --------------------------------------------------------------------------
# local search

class _DartGraph:
    """Dart arrays for fast face counting on one connected graph."""

    def __init__(self, g: SimpleGraph):
        self.g = g
        self.darts: list[tuple[int, int]] = []
        self.dart_id: dict[tuple[int, int], int] = {}
        for u in range(g.n):
            for v in sorted(g.adj[u]):
                self.dart_id[(u, v)] = len(self.darts)
                self.darts.append((u, v))
        self.rev = [self.dart_id[(v, u)] for u, v in self.darts]
        self.sigma = [0] * len(self.darts)

    def set_rotation(self, v: int, cyc) -> None:
        k = len(cyc)
        for i, u in enumerate(cyc):
            self.sigma[self.dart_id[(v, u)]] = self.dart_id[(v, cyc[(i + 1) % k])]

    def count_faces(self) -> int:
        sigma, rev = self.sigma, self.rev
        seen = bytearray(len(sigma))
        faces = 0
        for d in range(len(sigma)):
            if seen[d]:
                continue
            faces += 1
            x = d
            while not seen[x]:
                seen[x] = 1
                x = sigma[rev[x]]
        return faces


def heuristic_upper(g: SimpleGraph, effort: int = DEFAULT_EFFORT, seed: int = 0) -> EmbeddingCertificate:
    """Simulated annealing over rotation systems, maximising the face count.

    Planar graphs return the planarity certificate directly.  The result is
    a valid certificate; its genus is an upper bound only.
    """
    planar = is_planar(g, canonical_witness=False)
    if planar:
        return planar.certificate
    rng = random.Random(seed)
    rot = [list(g.neighbors(v)) for v in range(g.n)]
    for cyc in rot:
        rng.shuffle(cyc)
    dg = _DartGraph(g)
    for v in range(g.n):
        dg.set_rotation(v, rot[v])
    movable = [v for v in range(g.n) if len(rot[v]) >= 3]
    faces = dg.count_faces()
    best_faces, best_rot = faces, [c[:] for c in rot]
    ceiling = _face_ceiling(g)
    t0, t1 = 1.2, 0.05
    for step in range(effort):
        if not movable or best_faces >= ceiling:
            break
        temp = t0 * (t1 / t0) ** (step / max(1, effort - 1))
        v = rng.choice(movable)
        cyc = rot[v]
        old = cyc[:]
        i = rng.randrange(len(cyc))
        x = cyc.pop(i)
        cyc.insert(rng.randrange(len(cyc) + 1), x)
        if cyc == old:
            continue
        dg.set_rotation(v, cyc)
        new = dg.count_faces()
        delta = new - faces
        if delta >= 0 or rng.random() < math.exp(delta / temp):
            faces = new
            if faces > best_faces:
                best_faces, best_rot = faces, [c[:] for c in rot]
        else:
            rot[v] = old
            dg.set_rotation(v, old)
    cert = face_trace(g, RotationSystem(tuple(map(tuple, best_rot))), "heuristic")
    return cert


def _face_ceiling(g: SimpleGraph) -> int:
    """Most faces any embedding could have (over all components)."""
    total = 0
    for comp in g.components():
        h = g.induced(comp)
        if h.m == 0:
            total += 1
            continue
        gir = girth(h)
        total += (2 * h.m) // (int(gir) if gir != math.inf else 1)
    return total


# --------------------------------------------------------------------------
# exact search

class _BudgetOut(Exception):
    pass


class _Done(Exception):
    pass


class _Search:
    """Branch-and-bound over rotation systems of one connected graph.

    Faces are grown one at a time: the open walk being extended ends in a
    dart ``u -> v``, and the branch is which neighbour ``w`` follows ``u``
    in the rotation at ``v``.  Rotations are kept as partial successor paths
    at each vertex and may only close into a cycle once every neighbour is
    in it.  Face walks are kept as dart chains with O(1) merge and undo, so
    the number of faces any completion can still reach is bounded by

        closed + long + min(short, short_darts // min_face)

    with ``long`` the open chains already ``min_face`` darts long.  One
    rotation of each mirror pair is kept at the root vertex.
    """

    def __init__(self, g: SimpleGraph, budget: int, min_face: int):
        self.g = g
        self.n, self.m = g.n, g.m
        self.budget = budget
        self.expansions = 0
        self.min_face = min_face
        dg = _DartGraph(g)
        self.dart_id, self.darts, self.rev = dg.dart_id, dg.darts, dg.rev
        nd = self.nd = len(self.darts)
        self.tail = [u for u, _ in self.darts]
        self.out = [[self.dart_id[(v, u)] for u in g.neighbors(v)] for v in range(g.n)]
        self.deg = [len(o) for o in self.out]
        # face chains
        self.start_of = list(range(nd))
        self.end_of = list(range(nd))
        self.length = [1] * nd
        self.closed = 0
        short = min_face > 1
        self.n_long = 0 if short else nd
        self.n_short = nd if short else 0
        self.short_darts = nd if short else 0
        # partial rotations, as successor paths over out-darts
        self.sig = [-1] * nd
        self.sig_prev = [-1] * nd
        self.pstart = list(range(nd))
        self.pend = list(range(nd))
        self.links_at = [0] * g.n
        self.linked = 0
        self.root = max(range(g.n), key=lambda v: (self.deg[v], -v))

    def _drop(self, length: int):
        if length >= self.min_face:
            self.n_long -= 1
        else:
            self.n_short -= 1
            self.short_darts -= length

    def _add(self, length: int):
        if length >= self.min_face:
            self.n_long += 1
        else:
            self.n_short += 1
            self.short_darts += length

    def max_faces(self) -> int:
        return self.closed + self.n_long + min(self.n_short, self.short_darts // self.min_face)

    def genus_floor(self) -> int:
        return math.ceil((2 - self.n + self.m - self.max_faces()) / 2)

    def decide(self, a: int, b: int) -> None:
        """Dart ``b`` follows dart ``a``: ``sigma(rev a) = b`` at the head of ``a``."""
        x = self.rev[a]
        v = self.tail[x]
        self.sig[x] = b
        self.sig_prev[b] = x
        ps, pe = self.pstart[x], self.pend[b]
        if ps != b:
            self.pend[ps] = pe
            self.pstart[pe] = ps
        self.links_at[v] += 1
        self.linked += 1
        s = self.start_of[a]
        la = self.length[s]
        e, lb = self.end_of[b], self.length[b]
        self._drop(la)
        if s == b:
            self.closed += 1
        else:
            self._drop(lb)
            self.length[s] = la + lb
            self.start_of[e] = s
            self.end_of[s] = e
            self._add(la + lb)
        self.log.append((a, b, x, v, ps, pe, s, e, la, lb))

    def undo(self) -> None:
        a, b, x, v, ps, pe, s, e, la, lb = self.log.pop()
        if s == b:
            self.closed -= 1
            self._add(la)
        else:
            self._drop(la + lb)
            self.length[s] = la
            self.start_of[e] = b
            self.end_of[s] = a
            self._add(la)
            self._add(lb)
        self.linked -= 1
        self.links_at[v] -= 1
        if ps != b:
            self.pend[ps] = x
            self.pstart[pe] = b
        self.sig_prev[b] = -1
        self.sig[x] = -1

    def candidates(self, a: int) -> list[int]:
        x = self.rev[a]
        v = self.tail[x]
        full = self.links_at[v] == self.deg[v] - 1
        ps = self.pstart[x]
        closing = self.start_of[a]
        out = []
        for b in self.out[v]:
            if self.sig_prev[b] != -1:
                continue
            if b == ps and not full:
                continue
            out.append(b)
        # finishing the current face first keeps faces short
        out.sort(key=lambda b: (b != closing, b))
        return out

    def _root_ok(self) -> bool:
        v = self.root
        if self.links_at[v] != self.deg[v] or self.deg[v] < 3:
            return True
        first = self.out[v][0]
        after = self.sig[first]
        before = self.sig_prev[first]
        return self.darts[after][1] < self.darts[before][1]

    def rotation(self) -> tuple[tuple[int, ...], ...]:
        rot = []
        for v in range(self.n):
            if not self.out[v]:
                rot.append(())
                continue
            d0 = self.out[v][0]
            cyc, d = [], d0
            while True:
                cyc.append(self.darts[d][1])
                d = self.sig[d]
                if d == d0:
                    break
            rot.append(tuple(cyc))
        return tuple(rot)

    def run(self, target: int) -> tuple[tuple | None, bool]:
        """Look for an embedding of genus <= target: (rotation or None, completed)."""
        self.target = target
        self.log: list = []
        self.found = None
        try:
            self._extend(-1)
            completed = True
        except _BudgetOut:
            completed = False
        except _Done:
            completed = True
        return self.found, completed

    def _next_dart(self, current: int) -> int:
        if current >= 0 and self.sig[self.rev[current]] == -1:
            return current
        # open a new face at the most constrained unfinished corner
        best, best_key = -1, None
        for a in range(self.nd):
            if self.sig[self.rev[a]] != -1:
                continue
            v = self.tail[self.rev[a]]
            key = (self.deg[v] - self.links_at[v], -self.length[self.start_of[a]], a)
            if best_key is None or key < best_key:
                best, best_key = a, key
        return best

    def _extend(self, current: int) -> None:
        if self.linked == self.nd:
            genus = (2 - self.n + self.m - self.closed) // 2
            if genus <= self.target:
                self.found = self.rotation()
                raise _Done
            return
        a = self._next_dart(current)
        for b in self.candidates(a):
            self.expansions += 1
            if self.expansions > self.budget:
                raise _BudgetOut
            self.decide(a, b)
            if self.genus_floor() <= self.target and self._root_ok():
                s = self.log[-1][6]
                self._extend(-1 if s == b else self.end_of[s])
            self.undo()


def _connected_genus(h: SimpleGraph, budget: int, effort: int, seed: int) -> GenusBounds:
    if h.m == 0:
        return GenusBounds(0, PLANAR_TEST, 0, face_trace(h, RotationSystem(((),) * h.n)))
    planar = is_planar(h, canonical_witness=False)
    if planar:
        return GenusBounds(0, PLANAR_TEST, 0, planar.certificate)
    lower, reason = 1, PLANAR_TEST
    e = euler_only_bound(h)
    if e > lower:
        lower, reason = e, EULER_GIRTH
    cert = heuristic_upper(h, effort=effort, seed=seed)
    bounds = GenusBounds(lower, reason, cert.genus, cert)
    if bounds.exact:
        return bounds
    min_face = int(girth(h)) if min(map(len, h.adj)) >= 2 else 1
    # deepen the target from the lower bound: low targets prune hardest
    remaining = budget
    for target in range(lower, cert.genus):
        search = _Search(h, remaining, min_face)
        rot, completed = search.run(target)
        bounds.expansions += search.expansions
        remaining -= search.expansions
        if rot is not None:
            bounds.certificate = face_trace(h, RotationSystem(rot), "exact-search")
            bounds.upper = bounds.certificate.genus
            assert bounds.upper == target
            break
        if not completed:
            bounds.notes.append(f"budget of {budget} expansions exhausted at target genus {target}")
            break
        bounds.lower, bounds.lower_reason = target + 1, EXHAUSTED_SEARCH
    return bounds


def exact_genus(g: SimpleGraph, budget: int = DEFAULT_BUDGET, effort: int = 5_000, seed: int = 0) -> GenusBounds:
    """Orientable genus by branch and bound; certified bounds if the budget runs out.

    Disconnected graphs are handled per component (genus is additive).
    """
    parts = []
    remaining = budget
    for comp in g.components():
        h = g.induced(comp)
        b = _connected_genus(h, max(remaining, 0), effort, seed)
        remaining -= b.expansions
        parts.append((comp, b))
    if len(parts) == 1 and len(parts[0][0]) == g.n and parts[0][0] == list(range(g.n)):
        return parts[0][1]
    rot: list[tuple[int, ...]] = [()] * g.n
    lower = sum(b.lower for _, b in parts)
    upper = sum(b.upper for _, b in parts)
    for comp, b in parts:
        for i, cyc in enumerate(b.certificate.rotation.rot):
            rot[comp[i]] = tuple(comp[u] for u in cyc)
    cert = face_trace(g, RotationSystem(tuple(rot)), "components")
    reasons = {b.lower_reason for _, b in parts if b.lower > 0} or {PLANAR_TEST}
    reason = EXHAUSTED_SEARCH if EXHAUSTED_SEARCH in reasons else sorted(reasons)[0]
    return GenusBounds(lower, reason, upper, cert, sum(b.expansions for _, b in parts))
