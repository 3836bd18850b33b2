"""Face-level building blocks for the parametric constructions.

Families are assembled as groups of faces (bands between concentric cycles,
apex fans, caps).  Each group is internally orientation-consistent; the
assembler flips whole groups as needed so that every dart is used exactly
once, then hands the face set to plane_graph.from_faces for full validation.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from ..errors import NonPlanarEmbedding
from ..plane_graph import PlaneGraph, from_faces

Face = Tuple[int, ...]
Group = List[Face]


def assemble(n: int, groups: Sequence[Group]) -> PlaneGraph:
    """Join face groups into a plane graph, orienting faces consistently.

    Orientations are propagated across shared edges (two faces on one edge
    traverse it oppositely); on the sphere the assignment is unique up to a
    global flip, so BFS from the first face settles everything.
    """
    faces: List[Face] = [f for group in groups for f in group]
    by_edge: Dict[Tuple[int, int], List[int]] = {}
    for idx, f in enumerate(faces):
        for i in range(len(f)):
            e = tuple(sorted((f[i], f[(i + 1) % len(f)])))
            by_edge.setdefault(e, []).append(idx)
    for e, inc in by_edge.items():
        if len(inc) != 2:
            raise NonPlanarEmbedding(f"edge {e} lies on {len(inc)} faces")

    flip = [False] * len(faces)
    seen = [False] * len(faces)
    seen[0] = True
    queue = [0]
    while queue:
        idx = queue.pop()
        f = faces[idx]
        darts = [(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]
        if flip[idx]:
            darts = [(b, a) for (a, b) in darts]
        for a, b in darts:
            inc = by_edge[tuple(sorted((a, b)))]
            other = inc[0] if inc[1] == idx else inc[1]
            g = faces[other]
            gd = [(g[i], g[(i + 1) % len(g)]) for i in range(len(g))]
            wants_flip = (b, a) not in gd
            if not seen[other]:
                seen[other] = True
                flip[other] = wants_flip
                queue.append(other)
            elif flip[other] != wants_flip:
                raise NonPlanarEmbedding("faces cannot be consistently oriented")
    if not all(seen):
        raise NonPlanarEmbedding("face set is not edge-connected")
    oriented = [
        tuple(reversed(f)) if flip[i] else tuple(f) for i, f in enumerate(faces)
    ]
    return from_faces(n, oriented)


def fan(apex: int, cycle: Sequence[int]) -> Group:
    """Triangles joining an apex to every edge of a cycle."""
    k = len(cycle)
    return [(apex, cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def disk(cycle: Sequence[int]) -> Group:
    """The cycle itself as a single face."""
    return [tuple(cycle)]


def stack(face: Face, apex: int) -> Group:
    """Replace a triangular face by three faces around a new interior apex."""
    a, b, c = face
    return [(apex, a, b), (apex, b, c), (apex, c, a)]


def tri_band(
    inner: Sequence[int], outer: Sequence[int], cross: Iterable[Tuple[int, int]]
) -> Group:
    """Triangulated annulus between two cycles with the given cross edges.

    The cross edges must admit a non-crossing cyclic arrangement; all four
    relative traversal directions are tried and the face list of the first
    consistent one is returned.
    """
    cross_set = {(a, b) for a, b in cross}
    edges = sorted(cross_set)
    if not edges:
        raise NonPlanarEmbedding("a band needs at least one cross edge")

    for flip_inner in (False, True):
        for flip_outer in (False, True):
            cyc_a = list(reversed(inner)) if flip_inner else list(inner)
            cyc_b = list(reversed(outer)) if flip_outer else list(outer)
            next_a = {cyc_a[i]: cyc_a[(i + 1) % len(cyc_a)] for i in range(len(cyc_a))}
            next_b = {cyc_b[i]: cyc_b[(i + 1) % len(cyc_b)] for i in range(len(cyc_b))}
            faces = _walk_band(edges, cross_set, next_a, next_b)
            if faces is not None:
                return faces
    raise NonPlanarEmbedding("cross edges do not form a planar band")


def _walk_band(edges, cross_set, next_a, next_b):
    total = len(edges)
    start = edges[0]
    seq = [start]
    used = {start}

    def extend() -> bool:
        if len(seq) == total:
            a, b = seq[-1]
            sa, sb = seq[0]
            return (a == sa and next_b[b] == sb) or (next_a[a] == sa and b == sb)
        a, b = seq[-1]
        for cand in ((a, next_b[b]), (next_a[a], b)):
            if cand in cross_set and cand not in used:
                seq.append(cand)
                used.add(cand)
                if extend():
                    return True
                used.discard(cand)
                seq.pop()
        return False

    if not extend():
        return None
    faces: Group = []
    for i in range(total):
        a, b = seq[i]
        a2, b2 = seq[(i + 1) % total]
        if a2 == a:  # advance on the outer cycle
            faces.append((a, b2, b))
        else:  # advance on the inner cycle
            faces.append((a, a2, b))
    return faces


def quad_band(inner: Sequence[int], outer: Sequence[int],
              rails: Iterable[Tuple[int, int]]) -> Group:
    """Quadrangulated annulus: rails form a non-crossing perfect matching."""
    rail_set = {(a, b) for a, b in rails}
    edges = sorted(rail_set)
    for flip in (False, True):
        cyc_a = list(inner)
        cyc_b = list(reversed(outer)) if flip else list(outer)
        next_a = {cyc_a[i]: cyc_a[(i + 1) % len(cyc_a)] for i in range(len(cyc_a))}
        next_b = {cyc_b[i]: cyc_b[(i + 1) % len(cyc_b)] for i in range(len(cyc_b))}
        a, b = edges[0]
        faces: Group = []
        ok = True
        for _ in range(len(edges)):
            a2, b2 = next_a[a], next_b[b]
            if (a2, b2) not in rail_set:
                ok = False
                break
            faces.append((a, a2, b2, b))
            a, b = a2, b2
        if ok and (a, b) == edges[0]:
            return faces
    raise NonPlanarEmbedding("rails do not form a planar quad band")


class Namer:
    """Dense 1-based vertex ids handed out per structural layer."""

    def __init__(self) -> None:
        self.count = 0

    def layer(self, size: int) -> List[int]:
        ids = list(range(self.count + 1, self.count + size + 1))
        self.count += size
        return ids

    def one(self) -> int:
        self.count += 1
        return self.count
