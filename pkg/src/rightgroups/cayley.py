"""Cayley color digraphs (right action) and their suppressed simple graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .algebra import GeneratingSet, MulTable

Arc = tuple[int, int, int]
Edge = tuple[int, int]

ISO_CAP = 500


@dataclass(frozen=True, eq=False)
class ColorDigraph:
    """Arcs ``(u, v, color)``; loops and parallel arcs are kept."""

    vertex_count: int
    arcs: tuple[Arc, ...]
    labels: tuple[str, ...] | None = None

    def __eq__(self, other):
        if not isinstance(other, ColorDigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and sorted(self.arcs) == sorted(other.arcs)

    def __hash__(self):
        return hash((self.vertex_count, tuple(sorted(self.arcs))))

    @classmethod
    def from_simple(cls, g: "SimpleGraph") -> "ColorDigraph":
        """Symmetric encoding: each edge becomes two antiparallel arcs of color 0."""
        arcs = []
        for u, v in sorted(g.edges):
            arcs += [(u, v, 0), (v, u, 0)]
        return cls(g.n, tuple(arcs), g.labels)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected graph without loops or multiple edges on ``0 .. n-1``."""

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {(u, v)} for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "SimpleGraph":
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            es.add(_norm(u, v))
        return cls(n, frozenset(es), tuple(labels) if labels is not None else None)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def subgraph_edges(self, keep: Iterable[Edge]) -> "SimpleGraph":
        keep = {_norm(*e) for e in keep}
        if not keep <= self.edges:
            raise ValueError("not a subset of the edge set")
        return SimpleGraph(self.n, frozenset(keep), self.labels)

    def remove_edges(self, drop: Iterable[Edge]) -> "SimpleGraph":
        drop = {_norm(*e) for e in drop}
        return SimpleGraph(self.n, self.edges - drop, self.labels)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled ``0 .. k-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return SimpleGraph.from_edges(len(vertices), es)

    def relabel(self, mapping: Mapping[int, int] | Sequence[int]) -> "SimpleGraph":
        return SimpleGraph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        seen, out = set(), []
        for s in range(self.n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


# --------------------------------------------------------------------------
# standard graphs

def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset())


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_multipartite(*sizes: int) -> SimpleGraph:
    """Parts are consecutive index blocks, in the given order."""
    blocks, start = [], 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    es = [(u, v) for a, b in itertools.combinations(blocks, 2) for u in a for v in b]
    return SimpleGraph.from_edges(start, es)


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return complete_multipartite(a, b)


# --------------------------------------------------------------------------
# Cayley graphs

def cayley_color_graph(s: MulTable, c: GeneratingSet) -> ColorDigraph:
    """Arc ``x -> x*g`` of color ``k`` for the ``k``-th generator ``g``."""
    gens = tuple(c)
    for g in gens:
        if not 0 <= g < s.order:
            raise ValueError(f"generator {g} not in {s.label}")
    arcs = tuple((x, s.table[x][g], k) for x in range(s.order) for k, g in enumerate(gens))
    return ColorDigraph(s.order, arcs, s.names)


def suppress(d: ColorDigraph) -> SimpleGraph:
    return SimpleGraph.from_edges(d.vertex_count, ((u, v) for u, v, _ in d.arcs if u != v), d.labels)


def cayley_graph(s: MulTable, c: GeneratingSet) -> SimpleGraph:
    return suppress(cayley_color_graph(s, c))


# --------------------------------------------------------------------------
# isomorphism

def _certify(x: SimpleGraph, y: SimpleGraph, phi: Mapping[int, int]) -> bool:
    if sorted(phi) != list(range(x.n)) or sorted(phi.values()) != list(range(y.n)):
        return False
    return {_norm(phi[u], phi[v]) for u, v in x.edges} == set(y.edges)


def graph_isomorphic(x: SimpleGraph, y: SimpleGraph,
                     roots: tuple[int, int] | None = None) -> dict[int, int] | None:
    """A verified isomorphism ``x -> y`` or ``None``.

    With ``roots=(u, v)`` only isomorphisms sending ``u`` to ``v`` count.
    """
    if max(x.n, y.n) > ISO_CAP:
        raise ValueError(f"isomorphism search is capped at {ISO_CAP} vertices")
    if x.n != y.n or x.m != y.m:
        return None
    if sorted(map(len, x.adj)) != sorted(map(len, y.adj)):
        return None
    gx, gy = x.to_networkx(), y.to_networkx()
    node_match = None
    if roots is not None:
        nx.set_node_attributes(gx, {v: v == roots[0] for v in gx}, "root")
        nx.set_node_attributes(gy, {v: v == roots[1] for v in gy}, "root")
        node_match = lambda a, b: a["root"] == b["root"]  # noqa: E731
    gm = GraphMatcher(gx, gy, node_match=node_match)
    for phi in gm.isomorphisms_iter():
        if _certify(x, y, phi):
            return dict(sorted(phi.items()))
        raise AssertionError("matcher produced a non-isomorphism")
    return None


# --------------------------------------------------------------------------
# export

def _quote(s: str) -> str:
    return '"' + s.replace('"', r'\"') + '"'


def to_dot(g: SimpleGraph | ColorDigraph, name: str = "G") -> str:
    if isinstance(g, ColorDigraph):
        lines = [f"digraph {name} {{"]
        for v in range(g.vertex_count):
            lab = g.labels[v] if g.labels else str(v)
            lines.append(f"  {v} [label={_quote(lab)}];")
        for u, v, c in g.arcs:
            lines.append(f"  {u} -> {v} [color={c}, label={c}];")
    else:
        lines = [f"graph {name} {{"]
        for v in range(g.n):
            lines.append(f"  {v} [label={_quote(g.name(v))}];")
        for u, v in g.sorted_edges():
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: SimpleGraph) -> str:
    lines = [f"# {g.n} vertices, {g.m} edges"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> SimpleGraph:
    """Parse ``u v`` lines; ``# N vertices`` in a comment fixes the vertex count."""
    n, pairs = None, []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            head = line[1:].split()
            if len(head) >= 2 and head[1].startswith("vert") and head[0].isdigit():
                n = int(head[0])
            continue
        if not line:
            continue
        a, b = line.split()[:2]
        pairs.append((int(a), int(b)))
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return SimpleGraph.from_edges(n, pairs)
