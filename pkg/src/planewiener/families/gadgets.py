"""The 5-connected plug and its quadrangulation analogue.

The plug on parameter p has a boundary p-cycle, two nested 2p-cycles and a
hub, order 5p+1; the mirrored variant embeds the same map with the nesting
turned inside out.  The quadrangulation plug has two nested p-cycles joined
by a matching, with a hub on alternate inner vertices, order 2p+1.
"""

from __future__ import annotations

from ..errors import BadGadgetParameter
from ..plane_graph import PlaneGraph, mirror
from ._build import Namer, assemble, disk, fan


def build_fp(p: int, outer: bool = False) -> PlaneGraph:
    """Order 5p+1 plug: C_p, then C_2p, then C_2p, then a hub (p >= 3)."""
    if p < 3:
        raise BadGadgetParameter(f"plug parameter must be >= 3, got {p}")
    names = Namer()
    u = names.layer(p)
    v = names.layer(2 * p)
    w = names.layer(2 * p)
    z = names.one()
    groups = [disk(u)]
    band_uv = []
    for i in range(p):
        band_uv.append((u[i], v[(2 * i - 1) % (2 * p)]))
        band_uv.append((u[i], v[2 * i]))
        band_uv.append((u[i], v[(2 * i + 1) % (2 * p)]))
    groups.append(
        _band_faces(u, v, band_uv)
    )
    band_vw = []
    for i in range(2 * p):
        band_vw.append((v[i], w[i]))
        band_vw.append((v[i], w[(i + 1) % (2 * p)]))
    groups.append(_band_faces(v, w, band_vw))
    groups.append(fan(z, w))
    g = assemble(names.count, groups)
    return mirror(g) if outer else g


def _band_faces(inner, outer, cross):
    from ._build import tri_band

    return tri_band(inner, outer, cross)


def build_qp(p: int) -> PlaneGraph:
    """Order 2p+1 quadrangulation plug (even p >= 4)."""
    if p < 4 or p % 2:
        raise BadGadgetParameter(f"plug parameter must be even and >= 4, got {p}")
    names = Namer()
    u = names.layer(p)
    v = names.layer(p)
    z = names.one()
    groups = [disk(u)]
    groups.append(
        [(u[i], u[(i + 1) % p], v[(i + 1) % p], v[i]) for i in range(p)]
    )
    groups.append(
        [(z, v[2 * i], v[2 * i + 1], v[(2 * i + 2) % p]) for i in range(p // 2)]
    )
    return assemble(names.count, groups)
