"""Extremal triangulation families: concentric-cycle tubes with residue caps.

Index conventions inside a layer of five: the pentagon cycle visits local
positions (1, 2, 4, 5, 3).  Gap patterns are given as local (inner, outer)
index pairs; the band builder works out the unique planar arrangement.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from ..errors import OrderOutOfDomain
from ..plane_graph import PlaneGraph, build_from_rotation
from ._build import Namer, assemble, disk, fan, stack, tri_band

Group = List[Tuple[int, ...]]

PENT = (0, 1, 3, 4, 2)  # pentagon cycle as local slots
QUAD = (0, 1, 3, 2)  # 4-cycle as local slots

SYM5 = ((1, 1), (5, 5), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (4, 5), (5, 4))
ASYM5 = ((1, 1), (5, 5), (1, 2), (1, 3), (2, 2), (2, 4), (3, 3), (3, 5), (4, 4), (4, 5))
ASYM5_ZERO = ((1, 1), (5, 5), (1, 3), (2, 1), (2, 2), (2, 4), (3, 3), (3, 5), (4, 4), (4, 5))
GAP4 = ((1, 1), (2, 2), (3, 3), (4, 4), (2, 1), (3, 1), (4, 2), (4, 3))
GAP3 = ((1, 1), (2, 2), (3, 3), (3, 1), (3, 2), (1, 2))


def _pairs(inner: Sequence[int], outer: Sequence[int], pattern) -> List[Tuple[int, int]]:
    return [(inner[i - 1], outer[j - 1]) for i, j in pattern]


def _cycle(layer: Sequence[int], order: Sequence[int]) -> List[int]:
    return [layer[i] for i in order]


def build_t3(n: int) -> PlaneGraph:
    """Maximum-Wiener triangulation family (3-connected): triangle tube."""
    if n < 6:
        raise OrderOutOfDomain(f"family T3 needs n >= 6, got {n}")
    k, extra = divmod(n, 3)
    names = Namer()
    layers = [names.layer(3) for _ in range(k)]
    groups = []
    for lo, hi in zip(layers, layers[1:]):
        groups.append(tri_band(lo, hi, _pairs(lo, hi, GAP3)))
    if extra == 0:
        groups.append(disk(layers[0]))
    else:
        x = names.one()
        a1, b1, c1 = layers[0]
        if extra == 1:
            groups.append(fan(x, (a1, b1, c1)))
        else:
            y = names.one()
            groups.append([(x, b1, c1), (x, c1, a1)])
            groups.append(stack((x, a1, b1), y))
    groups.append(disk(layers[-1]))
    return assemble(names.count, groups)


_T4_CAPS: Dict[int, Tuple[int, Tuple[Tuple[int, ...], ...]]] = {
    # residue of n mod 4 -> (cap size, faces over cap ids 1.. and cycle d1..d4)
    2: (1, ()),  # plain apex, handled via fan
    3: (
        2,
        (
            ("d1", "d2", "e1"), ("d2", "d4", "e2"), ("d4", "d3", "e2"),
            ("d3", "d1", "e1"), ("d2", "e2", "e1"), ("d3", "e1", "e2"),
        ),
    ),
    0: (
        3,
        (
            ("d1", "d2", "e1"), ("d2", "d4", "e3"), ("d4", "d3", "e2"),
            ("d3", "d1", "e1"), ("d2", "e3", "e1"), ("d4", "e2", "e3"),
            ("d3", "e1", "e2"), ("e1", "e3", "e2"),
        ),
    ),
    1: (
        4,
        (
            ("d1", "d2", "e1"), ("d2", "d4", "e2"), ("d4", "d3", "e3"),
            ("d3", "d1", "e1"), ("d2", "e2", "e1"), ("d4", "e4", "e2"),
            ("d4", "e3", "e4"), ("d3", "e1", "e3"), ("e1", "e2", "e4"),
            ("e1", "e4", "e3"),
        ),
    ),
}


def build_t4(n: int) -> PlaneGraph:
    """Maximum-Wiener 4-connected triangulation family: square tube."""
    if n < 6:
        raise OrderOutOfDomain(f"family T4 needs n >= 6, got {n}")
    cap_size, cap_faces = _T4_CAPS[n % 4]
    q = (n - 1 - cap_size) // 4
    names = Namer()
    apex = names.one()
    layers = [names.layer(4) for _ in range(q)]
    groups = [fan(apex, _cycle(layers[0], QUAD))]
    for lo, hi in zip(layers, layers[1:]):
        groups.append(tri_band(_cycle(lo, QUAD), _cycle(hi, QUAD), _pairs(lo, hi, GAP4)))
    last = layers[-1]
    if cap_size == 1:
        groups.append(fan(names.one(), _cycle(last, QUAD)))
    else:
        cap = names.layer(cap_size)
        env = {f"d{i + 1}": last[i] for i in range(4)}
        env.update({f"e{i + 1}": cap[i] for i in range(cap_size)})
        groups.append([tuple(env[t] for t in f) for f in cap_faces])
    return assemble(names.count, groups)


def _t5_core(n: int, base: int, asym) -> Tuple[Namer, List[Group], List[int], List[int]]:
    if n < base or n % 5 != base % 5:
        raise OrderOutOfDomain(
            f"family needs n >= {base} with n == {base % 5} (mod 5), got {n}"
        )
    reps = (n - base) // 5
    names = Namer()
    z1 = names.one()
    s = names.layer(5)
    groups = [fan(z1, _cycle(s, PENT))]
    prev = s
    pattern = SYM5
    for _ in range(reps):
        layer = names.layer(5)
        groups.append(
            tri_band(_cycle(prev, PENT), _cycle(layer, PENT), _pairs(prev, layer, pattern))
        )
        prev, pattern = layer, asym
    b = names.layer(5)
    groups.append(tri_band(_cycle(prev, PENT), _cycle(b, PENT), _pairs(prev, b, pattern)))
    return names, groups, s, b


def build_t5_wiener(n: int) -> PlaneGraph:
    """Conjectured maximum-Wiener 5-connected triangulations, all residues."""
    if n < 22:
        raise OrderOutOfDomain(f"family T5 needs n >= 22, got {n}")
    r = n % 5
    if r == 2:
        names, groups, _, b = _t5_core(n, 22, ASYM5)
        c = names.layer(5)
        d = names.layer(5)
        z2 = names.one()
        groups.append(tri_band(_cycle(b, PENT), _cycle(c, PENT), _pairs(b, c, ASYM5)))
        groups.append(tri_band(_cycle(c, PENT), _cycle(d, PENT), _pairs(c, d, SYM5)))
        groups.append(fan(z2, _cycle(d, PENT)))
    elif r == 3:
        names, groups, _, b = _t5_core(n, 23, ASYM5)
        e1 = names.one()
        c = names.layer(5)
        d = names.layer(5)
        z2 = names.one()
        hexa = [e1, c[0], c[2], c[4], c[3], c[1]]
        groups.append(tri_band(
            _cycle(b, PENT), hexa,
            [(b[0], e1), (b[0], c[0]), (b[0], c[1]), (b[0], c[2]),
             (b[1], c[1]), (b[1], c[3]), (b[2], c[2]), (b[2], c[4]),
             (b[3], c[3]), (b[3], c[4]), (b[4], c[4])],
        ))
        groups.append(tri_band(
            hexa, _cycle(d, PENT),
            [(e1, d[0]), (e1, d[1]), (c[0], d[0]), (c[0], d[2]), (c[1], d[1]),
             (c[1], d[3]), (c[2], d[2]), (c[2], d[4]), (c[3], d[3]), (c[3], d[4]),
             (c[4], d[4])],
        ))
        groups.append(fan(z2, _cycle(d, PENT)))
    elif r == 4:
        names, groups, _, b = _t5_core(n, 24, ASYM5)
        c = names.layer(5)
        e1 = names.one()
        e3 = names.one()
        d = names.layer(5)
        z2 = names.one()
        groups.append(tri_band(_cycle(b, PENT), _cycle(c, PENT), _pairs(b, c, ASYM5)))
        c1, c2, c3, c4, c5 = c
        groups.append([(c1, c3, e1), (c3, e3, e1), (c3, c5, e3), (c5, c4, e3)])
        pent_e = [c1, c2, c4, e3, e1]
        groups.append(tri_band(
            pent_e, _cycle(d, PENT),
            [(c1, d[0]), (c1, d[1]), (c2, d[1]), (c2, d[3]), (c4, d[3]),
             (c4, d[4]), (e3, d[2]), (e3, d[4]), (e1, d[0]), (e1, d[2])],
        ))
        groups.append(fan(z2, _cycle(d, PENT)))
    elif r == 0:
        names, groups, _, b = _t5_core(n, 25, ASYM5_ZERO)
        e = names.layer(3)
        c = names.layer(5)
        d = names.layer(5)
        z2 = names.one()
        e1, e2, e3 = e
        c1, c2, c3, c4, c5 = c
        pent_e = [e1, e2, e3, c4, c2]
        groups.append(tri_band(
            _cycle(b, PENT), pent_e,
            [(b[0], e1), (b[0], e2), (b[1], e1), (b[1], c2), (b[1], c4),
             (b[2], e2), (b[2], e3), (b[3], c4), (b[3], e3), (b[4], e3)],
        ))
        groups.append([
            (c2, e1, c1), (e1, c3, c1), (e1, e2, c3),
            (e2, c5, c3), (e2, e3, c5), (e3, c4, c5),
        ])
        groups.append(tri_band(_cycle(c, PENT), _cycle(d, PENT), _pairs(c, d, SYM5)))
        groups.append(fan(z2, _cycle(d, PENT)))
    else:
        names, groups, _, b = _t5_core(n, 26, ASYM5)
        e = names.layer(4)
        c = names.layer(5)
        d = names.layer(5)
        z2 = names.one()
        e1, e2, e3, e4 = e
        c1, c2, c3, c4, c5 = c
        pent_e = [c1, e1, e3, e2, c2]
        groups.append(tri_band(
            _cycle(b, PENT), pent_e,
            [(b[0], c1), (b[0], c2), (b[0], e1), (b[1], c2), (b[1], e2),
             (b[2], e1), (b[2], e3), (b[3], e2), (b[3], e3), (b[4], e3)],
        ))
        groups.append([
            (c1, e1, c3), (e1, e4, c3), (e1, e3, e4), (e3, e2, e4),
            (e2, c4, e4), (e2, c2, c4), (e4, c4, c5), (e4, c5, c3),
        ])
        groups.append(tri_band(_cycle(c, PENT), _cycle(d, PENT), _pairs(c, d, SYM5)))
        groups.append(fan(z2, _cycle(d, PENT)))
    return assemble(names.count, groups)


def build_t5_remote(n: int) -> PlaneGraph:
    """Remoteness maximizer for 5-connected triangulations, n == 3 (mod 5)."""
    if n < 23 or n % 5 != 3:
        raise OrderOutOfDomain(f"family needs n >= 23 with n == 3 (mod 5), got {n}")
    names, groups, _, b = _t5_core(n, 23, ASYM5)
    e1 = names.one()
    c = names.layer(5)
    d = names.layer(5)
    z2 = names.one()
    c1, c2, c3, c4, c5 = c
    pent_c = [c1, c3, c5, c4, e1]
    groups.append(tri_band(
        _cycle(b, PENT), pent_c,
        [(b[0], c1), (b[0], e1), (b[1], c1), (b[1], c3), (b[2], e1),
         (b[2], c4), (b[3], c3), (b[3], c5), (b[4], c4), (b[4], c5)],
    ))
    groups.append([(c4, e1, c2), (e1, c1, c2)])
    pent_c2 = [c2, c1, c3, c5, c4]
    groups.append(tri_band(
        pent_c2, _cycle(d, PENT),
        [(c1, d[0]), (c1, d[1]), (c2, d[0]), (c2, d[2]), (c3, d[1]),
         (c3, d[3]), (c4, d[2]), (c4, d[4]), (c5, d[3]), (c5, d[4])],
    ))
    groups.append(fan(z2, _cycle(d, PENT)))
    return assemble(names.count, groups)


def build_nonsimple_tri(n: int) -> PlaneGraph:
    """Non-simple triangulation with doubled ladder rungs (even n >= 16)."""
    if n < 16 or n % 2:
        raise OrderOutOfDomain(f"non-simple triangulation needs even n >= 16, got {n}")
    h = (n - 2) // 2
    a = list(range(1, h + 1))
    c = list(range(h + 1, 2 * h + 1))
    x, y = 2 * h + 1, 2 * h + 2
    # two copies of each rung a_i c_i: one inside the ladder, one wrapping
    # around the sphere; the written occurrence order below realizes the
    # crossing dart pairing under the first-with-first convention
    rot: List[Tuple[int, ...]] = [()] * n
    for i in range(1, h - 1):
        ai, ci = a[i], c[i]
        rot[ai - 1] = (a[i + 1], c[i + 1], ci, a[i - 1], c[i - 1], ci)
        rot[ci - 1] = (c[i - 1], a[i - 1], ai, c[i + 1], a[i + 1], ai)
    rot[a[0] - 1] = (a[1], c[1], c[0], x, c[0])
    rot[c[0] - 1] = (x, a[0], c[1], a[1], a[0])
    rot[a[h - 1] - 1] = (y, c[h - 1], a[h - 2], c[h - 2], c[h - 1])
    rot[c[h - 1] - 1] = (c[h - 2], a[h - 2], a[h - 1], y, a[h - 1])
    rot[x - 1] = (a[0], c[0])
    rot[y - 1] = (a[h - 1], c[h - 1])
    return build_from_rotation(rot)


def build_minimizer_tri(n: int) -> PlaneGraph:
    """Wiener minimizer: bipyramid over a cycle (diameter 2)."""
    if n < 5:
        raise OrderOutOfDomain(f"triangulation minimizer needs n >= 5, got {n}")
    rim = list(range(1, n - 1))
    u, v = n - 1, n
    return assemble(n, [fan(u, rim), fan(v, list(reversed(rim)))])
