"""Rotation systems, face tracing and embedding certificates.

A rotation system fixes, at each vertex, a cyclic order of its neighbours;
it is the same thing as a 2-cell embedding in an orientable surface.  The
faces are the orbits of ``(u, v) -> (v, w)`` where ``w`` follows ``u`` in
the rotation at ``v``, and the genus comes out of ``n - m + f = 2 - 2g``
per connected component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..cayley import SimpleGraph

FORMAT_HEADER = "rotation-certificate v1"


class MalformedRotation(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    rot: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, rot: Sequence[Sequence[int]] | Mapping[int, Sequence[int]]) -> "RotationSystem":
        if isinstance(rot, Mapping):
            rot = [rot[v] for v in range(len(rot))]
        return cls(tuple(tuple(r) for r in rot))

    def __len__(self):
        return len(self.rot)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.rot[v]

    def validate(self, g: SimpleGraph) -> None:
        if len(self.rot) != g.n:
            raise MalformedRotation(f"rotation covers {len(self.rot)} vertices, graph has {g.n}")
        for v, cyc in enumerate(self.rot):
            if len(cyc) != len(set(cyc)) or set(cyc) != g.adj[v]:
                raise MalformedRotation(f"rotation at {v} is not a cyclic order of its neighbours")

    def mirror(self) -> "RotationSystem":
        return RotationSystem(tuple(tuple(reversed(c)) for c in self.rot))

    def relabel(self, phi: Mapping[int, int]) -> "RotationSystem":
        """Transport along a vertex bijection ``phi``."""
        out: list[tuple[int, ...]] = [()] * len(self.rot)
        for v, cyc in enumerate(self.rot):
            out[phi[v]] = tuple(phi[u] for u in cyc)
        return RotationSystem(tuple(out))

    def graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(len(self.rot), ((v, u) for v, c in enumerate(self.rot) for u in c))


def trace_faces(g: SimpleGraph, rot: RotationSystem) -> list[tuple[int, ...]]:
    """Faces as cyclic vertex walks; each dart is used exactly once."""
    succ = [{u: cyc[(i + 1) % len(cyc)] for i, u in enumerate(cyc)} for cyc in rot.rot]
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in range(g.n):
        for v in rot.rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, succ[b][a]
            faces.append(tuple(walk))
    return faces


def _genus_from_counts(g: SimpleGraph, faces: list[tuple[int, ...]]) -> int:
    comp_of = {}
    comps = g.components()
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    n = [len(c) for c in comps]
    m = [0] * len(comps)
    f = [0] * len(comps)
    for u, _ in g.edges:
        m[comp_of[u]] += 1
    for face in faces:
        f[comp_of[face[0]]] += 1
    total = 0
    for ni, mi, fi in zip(n, m, f):
        fi = max(fi, 1)  # an isolated vertex still has its one face
        chi = ni - mi + fi
        if chi > 2 or (2 - chi) % 2:
            raise MalformedRotation(f"impossible Euler characteristic {chi}")
        total += (2 - chi) // 2
    return total


@dataclass(frozen=True)
class EmbeddingCertificate:
    graph: SimpleGraph
    rotation: RotationSystem
    faces: tuple[tuple[int, ...], ...]
    genus: int
    name: str = ""

    @property
    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def recheck(self) -> "EmbeddingCertificate":
        """Re-derive faces and genus from the rotation; raise if they disagree."""
        fresh = face_trace(self.graph, self.rotation, self.name)
        if fresh.genus != self.genus or sorted(map(sorted, fresh.faces)) != sorted(map(sorted, self.faces)):
            raise MalformedRotation("certificate does not match its rotation system")
        return fresh

    def relabel(self, phi: Mapping[int, int], target: SimpleGraph) -> "EmbeddingCertificate":
        return face_trace(target, self.rotation.relabel(phi), self.name)


def face_trace(g: SimpleGraph, rot: RotationSystem, name: str = "") -> EmbeddingCertificate:
    rot.validate(g)
    faces = trace_faces(g, rot)
    darts = sum(map(len, faces))
    if darts != 2 * g.m:
        raise MalformedRotation("face walks do not cover every dart once")
    genus = _genus_from_counts(g, faces)
    return EmbeddingCertificate(g, rot, tuple(faces), genus, name)


# --------------------------------------------------------------------------
# text format

def dumps_certificate(cert: EmbeddingCertificate) -> str:
    lines = [FORMAT_HEADER]
    if cert.name:
        lines.append(f"name {cert.name}")
    lines += [f"vertices {cert.graph.n}", f"edges {cert.graph.m}", f"genus {cert.genus}"]
    for v, cyc in enumerate(cert.rotation.rot):
        lines.append(f"{v}: " + " ".join(map(str, cyc)))
    return "\n".join(lines) + "\n"


def loads_certificate(text: str) -> EmbeddingCertificate:
    """Parse a certificate; faces and genus are always recomputed."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0] != FORMAT_HEADER:
        raise MalformedRotation("missing certificate header")
    meta: dict[str, str] = {}
    rot: dict[int, tuple[int, ...]] = {}
    for ln in lines[1:]:
        if ":" in ln:
            v, rest = ln.split(":", 1)
            rot[int(v)] = tuple(int(x) for x in rest.split())
        else:
            key, _, val = ln.partition(" ")
            meta[key] = val.strip()
    n = int(meta.get("vertices", len(rot)))
    if sorted(rot) != list(range(n)):
        raise MalformedRotation("rotation lines must cover vertices 0..n-1")
    rs = RotationSystem(tuple(rot[v] for v in range(n)))
    g = rs.graph()
    if "edges" in meta and int(meta["edges"]) != g.m:
        raise MalformedRotation(f"declared {meta['edges']} edges, rotation has {g.m}")
    cert = face_trace(g, rs, meta.get("name", ""))
    if "genus" in meta and int(meta["genus"]) != cert.genus:
        raise MalformedRotation(f"declared genus {meta['genus']}, traced genus {cert.genus}")
    return cert
