"""Plane graphs as rotation systems, with face tracing and classification.

A plane graph is stored as the cyclic neighbor sequence of every vertex
(clockwise in a fixed drawing).  Multi-edges are allowed: an edge of
multiplicity k contributes k entries to both endpoint rotations.  The k-th
occurrence of v in u's stored rotation is paired with the k-th occurrence of
u in v's stored rotation, so for multigraphs the linear starting point of the
stored tuples is semantically relevant; constructors that emit multi-edges
arrange their tuples accordingly and validation (Euler's formula) rejects
inconsistent pairings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import (
    AsymmetricDarts,
    Disconnected,
    LoopEdge,
    NonPlanarEmbedding,
    UnknownVertex,
)

Rotation = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable embedded plane graph on vertices 1..n.

    ``rotation[v - 1]`` is the cyclic neighbor sequence of vertex ``v``.
    ``rev`` maps each dart index to its reverse dart; darts are numbered in
    flattened rotation order.
    """

    n: int
    rotation: Rotation
    rev: Tuple[int, ...] = field(repr=False)
    dart_start: Tuple[int, ...] = field(repr=False)

    @property
    def num_darts(self) -> int:
        return len(self.rev)

    @property
    def m(self) -> int:
        """Edge count, counting multiplicities."""
        return self.num_darts // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v - 1])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        if not 1 <= v <= self.n:
            raise UnknownVertex(f"vertex {v} not in 1..{self.n}")
        return self.rotation[v - 1]

    def dart(self, v: int, slot: int) -> int:
        """Dart index for slot ``slot`` of vertex ``v``'s rotation."""
        return self.dart_start[v - 1] + slot

    def dart_origin(self, d: int) -> int:
        lo, hi = 0, self.n
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.dart_start[mid] <= d:
                lo = mid
            else:
                hi = mid
        return lo + 1

    def dart_target(self, d: int) -> int:
        u = self.dart_origin(d)
        return self.rotation[u - 1][d - self.dart_start[u - 1]]

    def adjacency(self) -> List[List[int]]:
        """Simple adjacency lists (duplicates collapsed), 1-based index."""
        adj: List[List[int]] = [[] for _ in range(self.n + 1)]
        for v in range(1, self.n + 1):
            seen = set()
            for w in self.rotation[v - 1]:
                if w not in seen:
                    seen.add(w)
                    adj[v].append(w)
        return adj

    def edge_multiset(self) -> Dict[Tuple[int, int], int]:
        """Multiplicity of every undirected edge (u < v)."""
        mult: Dict[Tuple[int, int], int] = {}
        for v in range(1, self.n + 1):
            for w in self.rotation[v - 1]:
                if v < w:
                    key = (v, w)
                    mult[key] = mult.get(key, 0) + 1
        return mult

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.edge_multiset().values())


@dataclass(frozen=True)
class ClassReport:
    """Structural classification of a plane graph."""

    n: int
    m: int
    face_count: int
    is_simple: bool
    is_bipartite: bool
    is_triangulation: bool
    is_quadrangulation: bool
    face_lengths: Tuple[int, ...]


def _pair_darts(n: int, rotation: Rotation) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    dart_start = []
    total = 0
    for v in range(n):
        dart_start.append(total)
        total += len(rotation[v])
    rev = [-1] * total
    # occurrence index of each dart within its (origin, target) pair
    occ_slots: Dict[Tuple[int, int], List[int]] = {}
    for v in range(1, n + 1):
        base = dart_start[v - 1]
        for i, w in enumerate(rotation[v - 1]):
            occ_slots.setdefault((v, w), []).append(base + i)
    for (u, v), darts in occ_slots.items():
        if u > v:
            continue
        back = occ_slots.get((v, u), [])
        if len(back) != len(darts):
            raise AsymmetricDarts(
                f"vertex {u} lists {v} {len(darts)} time(s), "
                f"but {v} lists {u} {len(back)} time(s)"
            )
        for d, b in zip(darts, back):
            rev[d] = b
            rev[b] = d
    return tuple(rev), tuple(dart_start)


def build_from_rotation(rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    """Validate a rotation system and return the embedded plane graph.

    Raises AsymmetricDarts, LoopEdge, Disconnected or NonPlanarEmbedding when
    the input is not a connected genus-zero embedding.
    """
    n = len(rotation)
    if n == 0:
        raise UnknownVertex("empty rotation system")
    rot: Rotation = tuple(tuple(seq) for seq in rotation)
    for v in range(1, n + 1):
        for w in rot[v - 1]:
            if not 1 <= w <= n:
                raise UnknownVertex(f"vertex {v} lists invalid neighbor {w}")
            if w == v:
                raise LoopEdge(f"vertex {v} lists itself")
    rev, dart_start = _pair_darts(n, rot)
    g = PlaneGraph(n=n, rotation=rot, rev=rev, dart_start=dart_start)

    # connectivity over the underlying graph
    if n > 1:
        seen = [False] * (n + 1)
        stack = [1]
        seen[1] = True
        count = 1
        while stack:
            v = stack.pop()
            for w in rot[v - 1]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != n:
            raise Disconnected(f"only {count} of {n} vertices reachable")

    faces = trace_faces(g)
    if n - g.m + len(faces) != 2:
        raise NonPlanarEmbedding(
            f"Euler check failed: n={n}, m={g.m}, faces={len(faces)}"
        )
    return g


def trace_faces(g: PlaneGraph) -> List[List[int]]:
    """Face boundary walks: after dart d comes rev(d)'s rotation successor."""
    nd = g.num_darts
    rev = g.rev
    dart_start = g.dart_start
    rotation = g.rotation
    deg = [len(r) for r in rotation]
    # rotation successor of a dart within its origin vertex
    succ = [0] * nd
    for v in range(1, g.n + 1):
        base = dart_start[v - 1]
        d = deg[v - 1]
        for i in range(d):
            succ[base + i] = base + (i + 1) % d
    visited = [False] * nd
    faces: List[List[int]] = []
    for d0 in range(nd):
        if visited[d0]:
            continue
        walk: List[int] = []
        d = d0
        while not visited[d]:
            visited[d] = True
            walk.append(g.dart_origin(d))
            d = succ[rev[d]]
        faces.append(walk)
    return faces


def classify(g: PlaneGraph) -> ClassReport:
    """Face lengths, simplicity, bipartiteness and class booleans."""
    faces = trace_faces(g)
    face_lengths = tuple(sorted(len(f) for f in faces))
    simple = g.is_simple()

    color = [-1] * (g.n + 1)
    color[1] = 0
    queue = [1]
    bipartite = True
    while queue and bipartite:
        nxt: List[int] = []
        for v in queue:
            for w in g.rotation[v - 1]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    nxt.append(w)
                elif color[w] == color[v]:
                    bipartite = False
                    break
            if not bipartite:
                break
        queue = nxt

    is_tri = all(length == 3 for length in face_lengths)
    is_quad = all(length == 4 for length in face_lengths)
    return ClassReport(
        n=g.n,
        m=g.m,
        face_count=len(faces),
        is_simple=simple,
        is_bipartite=bipartite,
        is_triangulation=is_tri,
        is_quadrangulation=is_quad,
        face_lengths=face_lengths,
    )


def from_faces(n: int, faces: Iterable[Sequence[int]]) -> PlaneGraph:
    """Build a simple plane graph from consistently oriented face walks.

    Every ordered pair (u, v) must occur in exactly one face; the rotation at
    v is recovered from the rule that the face dart u->v is followed by
    v->w.  The result is validated via build_from_rotation.
    """
    succ_at: List[Dict[int, int]] = [dict() for _ in range(n + 1)]
    for face in faces:
        k = len(face)
        for i in range(k):
            u, v, w = face[i], face[(i + 1) % k], face[(i + 2) % k]
            if u in succ_at[v]:
                raise NonPlanarEmbedding(f"dart {u}->{v} used twice")
            succ_at[v][u] = w
    rotation: List[Tuple[int, ...]] = []
    for v in range(1, n + 1):
        succ = succ_at[v]
        if not succ:
            raise Disconnected(f"vertex {v} appears in no face")
        start = next(iter(succ))
        cyc = [start]
        while True:
            nxt = succ[cyc[-1]]
            if nxt == start:
                break
            cyc.append(nxt)
            if len(cyc) > len(succ):
                raise NonPlanarEmbedding(f"rotation at {v} is not a single cycle")
        if len(cyc) != len(succ):
            raise NonPlanarEmbedding(f"rotation at {v} is not a single cycle")
        rotation.append(tuple(cyc))
    return build_from_rotation(rotation)


def mirror(g: PlaneGraph) -> PlaneGraph:
    """The reflected embedding (every rotation reversed)."""
    return build_from_rotation([tuple(reversed(r)) for r in g.rotation])
