"""Expansion-based isomorph-free generation with canonical-code dedup.

Triangulations grow from K4 by vertex splitting (inverse edge contraction);
every simple triangulation on n >= 5 has a contractible edge, so the
levelwise closure is complete.  Quadrangulations grow from the 4-cycle and
the pseudo-double wheels by the inverse of face contraction; the test suite
cross-checks both streams against the independent fixed-order generator.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Sequence, Tuple

from ..errors import OrderOutOfDomain
from ..plane_graph import PlaneGraph, build_from_rotation, from_faces
from .canonical import canonical_code


def _cyclic_slice(seq: Sequence[int], i: int, j: int) -> List[int]:
    """seq[i..j] inclusive, wrapping."""
    if i <= j:
        return list(seq[i : j + 1])
    return list(seq[i:]) + list(seq[: j + 1])


def split_triangulation_vertex(g: PlaneGraph, v: int, i: int, j: int) -> PlaneGraph:
    """Split v along rotation slots i, j; both sides keep r[i] and r[j]."""
    r = g.rotation[v - 1]
    arc_a = _cyclic_slice(r, i, j)
    arc_b = _cyclic_slice(r, j, i)
    v2 = g.n + 1
    rotation: List[Tuple[int, ...]] = [tuple(x) for x in g.rotation]
    rotation[v - 1] = tuple(arc_a) + (v2,)
    rotation.append(tuple(arc_b) + (v,))
    x, y = r[i], r[j]
    for z in arc_b[1:-1]:
        rotation[z - 1] = tuple(v2 if t == v else t for t in rotation[z - 1])
    rx = rotation[x - 1]
    p = rx.index(v)
    rotation[x - 1] = rx[:p] + (v, v2) + rx[p + 1 :]
    ry = rotation[y - 1]
    p = ry.index(v)
    rotation[y - 1] = ry[:p] + (v2, v) + ry[p + 1 :]
    return build_from_rotation(rotation)


def split_quadrangulation_vertex(g: PlaneGraph, v: int, i: int, j: int) -> PlaneGraph:
    """Split v into two non-adjacent halves and open the face (v, r[i], v2, r[j])."""
    r = g.rotation[v - 1]
    arc_a = _cyclic_slice(r, i, j)
    arc_b = _cyclic_slice(r, j, i)
    v2 = g.n + 1
    rotation: List[Tuple[int, ...]] = [tuple(x) for x in g.rotation]
    rotation[v - 1] = tuple(arc_a)
    rotation.append(tuple(arc_b))
    x, y = r[i], r[j]
    for z in arc_b[1:-1]:
        rotation[z - 1] = tuple(v2 if t == v else t for t in rotation[z - 1])
    rx = rotation[x - 1]
    p = rx.index(v)
    rotation[x - 1] = rx[:p] + (v, v2) + rx[p + 1 :]
    ry = rotation[y - 1]
    p = ry.index(v)
    rotation[y - 1] = ry[:p] + (v2, v) + ry[p + 1 :]
    return build_from_rotation(rotation)


def _k4() -> PlaneGraph:
    return build_from_rotation([(2, 3, 4), (1, 4, 3), (1, 2, 4), (1, 3, 2)])


def _four_cycle() -> PlaneGraph:
    return from_faces(4, [(1, 2, 3, 4), (1, 4, 3, 2)])


def pseudo_double_wheel(k: int) -> PlaneGraph:
    """Rim C_{2k} with two hubs joined to alternating rim vertices (n = 2k+2)."""
    if k < 2:
        raise OrderOutOfDomain(f"pseudo-double wheel needs k >= 2, got {k}")
    u, w = 2 * k + 1, 2 * k + 2
    rim = list(range(1, 2 * k + 1))
    faces = []
    for idx in range(0, 2 * k, 2):  # hub u above even-position rim vertices
        a, b, c = rim[idx], rim[(idx + 1) % (2 * k)], rim[(idx + 2) % (2 * k)]
        faces.append((u, a, b, c))
    for idx in range(1, 2 * k, 2):
        a, b, c = rim[idx], rim[(idx + 1) % (2 * k)], rim[(idx + 2) % (2 * k)]
        faces.append((a, w, c, b))
    return from_faces(2 * k + 2, faces)


def _expand_level(graphs: List[PlaneGraph], quad: bool) -> List[PlaneGraph]:
    seen: Dict[bytes, PlaneGraph] = {}
    split = split_quadrangulation_vertex if quad else split_triangulation_vertex
    for g in graphs:
        for v in range(1, g.n + 1):
            d = g.degree(v)
            for i in range(d):
                for j in range(d):
                    if i == j:
                        continue
                    child = split(g, v, i, j)
                    code = canonical_code(child)
                    if code not in seen:
                        seen[code] = child
    return list(seen.values())


_CACHE: Dict[Tuple[str, int], List[PlaneGraph]] = {}


def generate_all(graph_class: str, n: int) -> Iterator[PlaneGraph]:
    """One representative per embedded isomorphism class (mirrors identified)."""
    if graph_class not in ("triangulation", "quadrangulation"):
        raise ValueError(f"unknown class {graph_class!r}")
    if n < 4:
        raise OrderOutOfDomain(f"need n >= 4, got {n}")
    quad = graph_class == "quadrangulation"
    key = (graph_class, n)
    if key not in _CACHE:
        if n == 4:
            level = [_four_cycle() if quad else _k4()]
        else:
            prev = list(generate_all(graph_class, n - 1))
            level = _expand_level(prev, quad)
            if quad and n >= 6 and n % 2 == 0:
                seen = {canonical_code(g): g for g in level}
                pdw = pseudo_double_wheel((n - 2) // 2)
                seen.setdefault(canonical_code(pdw), pdw)
                level = list(seen.values())
        _CACHE[key] = level
    return iter(_CACHE[key])
