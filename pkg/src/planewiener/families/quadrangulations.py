"""Extremal quadrangulation families: skew ladders and the cube-capped tube.

The 3-connected family runs two cube-corner caps joined by a spiral tube of
period three; its three smallest members (orders 14..16) predate the place
where the drawn pattern starts, and are frozen here as rotation systems
(each is the unique extremal member attaining both the Wiener value and the
remoteness bound at its order).
"""

from __future__ import annotations

from typing import List, Tuple

from ..errors import OrderOutOfDomain
from ..plane_graph import PlaneGraph, build_from_rotation
from ._build import Namer, assemble


def build_q2(n: int) -> PlaneGraph:
    """Maximum-Wiener quadrangulation family (skew ladder)."""
    if n < 4:
        raise OrderOutOfDomain(f"family Q2 needs n >= 4, got {n}")
    if n % 2 == 0:
        h = n // 2
        a = list(range(1, h + 1))
        c = list(range(h + 1, 2 * h + 1))
        if h == 2:
            return assemble(4, [[(a[0], a[1], c[1], c[0])], [(c[0], c[1], a[1], a[0])]])
        faces = [[(c[0], a[0], a[1], a[2])]]
        faces += [[(c[i], a[i + 2], a[i + 3], c[i + 1])] for i in range(h - 3)]
        faces += [[(c[i], c[i + 1], a[i + 1], a[i])] for i in range(h - 1)]
        faces += [[(c[h - 3], c[h - 2], c[h - 1], a[h - 1])]]
        return assemble(n, faces)
    h = (n - 1) // 2
    b = list(range(1, h + 2))
    a = list(range(h + 2, n + 1))
    faces = [[(a[0], b[0], b[1], b[2])]]
    faces += [[(b[i], b[i + 1], a[i + 1], a[i])] for i in range(h - 1)]
    faces += [[(a[i], b[i + 2], b[i + 3], a[i + 1])] for i in range(h - 2)]
    faces += [[(b[h - 1], b[h], a[h - 2], a[h - 1])]]
    return assemble(n, faces)


_Q3_SMALL: Tuple[Tuple[int, Tuple[Tuple[int, ...], ...]], ...] = (
    (
        14,
        (
            (4, 2, 6), (1, 3, 8), (2, 4, 10), (3, 1, 5), (4, 6, 7, 14, 10),
            (5, 1, 8), (5, 8, 9, 13), (7, 6, 2, 10), (7, 10, 11),
            (9, 8, 3, 5, 12), (9, 12, 13), (11, 10, 14), (11, 14, 7),
            (13, 12, 5),
        ),
    ),
    (
        15,
        (
            (4, 2, 6), (1, 3, 8), (2, 4, 7, 15, 14, 10), (3, 1, 5), (4, 6, 7),
            (5, 1, 8), (5, 8, 9, 3), (7, 6, 2, 10), (7, 10, 11, 15),
            (9, 8, 3, 12), (9, 12, 13), (11, 10, 14), (11, 14, 15),
            (13, 12, 3), (13, 3, 9),
        ),
    ),
    (
        16,
        (
            (4, 2, 6), (1, 3, 16, 8), (2, 4, 7), (3, 1, 5), (4, 6, 7),
            (5, 1, 8), (5, 8, 9, 16, 3), (7, 6, 2, 10), (7, 10, 11, 15),
            (9, 8, 16, 12), (9, 12, 13), (11, 10, 14), (11, 14, 15),
            (13, 12, 16), (13, 16, 9), (15, 14, 10, 2, 7),
        ),
    ),
)


def _q3_cubes(names: Namer):
    d = names.layer(8)
    e = names.layer(8)
    d_faces = [
        (d[0], d[1], d[3], d[2]), (d[4], d[5], d[7], d[6]),
        (d[0], d[1], d[5], d[4]), (d[3], d[2], d[6], d[7]),
        (d[2], d[0], d[4], d[6]),
    ]
    e_faces = [
        (e[2], e[3], e[7], e[6]), (e[0], e[1], e[5], e[4]),
        (e[2], e[3], e[1], e[0]), (e[3], e[7], e[5], e[1]),
        (e[7], e[6], e[4], e[5]),
    ]
    return d, e, [d_faces, e_faces]


def build_q3(n: int) -> PlaneGraph:
    """Maximum-Wiener 3-connected quadrangulation family."""
    if n < 14:
        raise OrderOutOfDomain(f"family Q3 needs n >= 14, got {n}")
    for order, rotation in _Q3_SMALL:
        if n == order:
            return build_from_rotation(rotation)
    r = n % 3
    names = Namer()
    d, e, groups = _q3_cubes(names)
    d1, d2, d3, d4, d5, d6, d7, d8 = d
    e1, e2, e3, e4, e5, e6, e7, e8 = e
    if r == 2:  # two cube caps, a junction vertex and t full spiral columns
        t = (n - 17) // 3
        B = [names.one()] + names.layer(t)
        A = names.layer(t)
        C = names.layer(t)
        if t == 0:
            groups.append([
                (B[0], d4, d2, d6), (e3, B[0], e5, e7), (d8, d4, e1, e5),
                (d6, d8, e5, B[0]), (d4, e1, e3, B[0]),
            ])
            return assemble(names.count, groups)
        mid = [
            (B[0], d4, d2, d6), (d6, d8, C[0], B[0]), (d8, d4, A[0], C[0]),
            (d4, A[0], B[1], B[0]),
            (A[-1], B[-1], e3, e1), (e3, B[-1], e5, e7),
            (A[-1], C[-1], e5, e1), (B[-1 if t == 1 else -2], C[-1], e5, B[-1]),
        ]
        if t == 1:
            mid[-1] = (B[0], C[0], e5, B[1])
        for i in range(t - 1):
            mid.append((A[i], A[i + 1], B[i + 2], B[i + 1]))
            mid.append((B[i], C[i], C[i + 1], B[i + 1]))
            mid.append((A[i], C[i], C[i + 1], A[i + 1]))
        groups.append(mid)
        return assemble(names.count, groups)
    if r == 0:
        t = (n - 18) // 3
        A = names.layer(t + 1)
        B = names.layer(t + 1)
        C = names.layer(t)
        mid = [
            (d2, A[0], B[0], d4), (A[0], d2, d6, d8),
            (A[-1], B[-1], e3, e1), (e3, B[-1], e5, e7),
        ]
        if t == 0:
            mid += [(d4, B[0], e5, d8), (A[0], d8, e5, e1)]
        else:
            mid += [
                (d4, B[0], C[0], d8), (A[0], d8, C[0], A[1]),
                (A[-1], C[-1], e5, e1), (B[-2], C[-1], e5, B[-1]),
            ]
            for i in range(t):
                mid.append((A[i], A[i + 1], B[i + 1], B[i]))
            for i in range(t - 1):
                mid.append((B[i], C[i], C[i + 1], B[i + 1]))
                mid.append((A[i + 1], C[i], C[i + 1], A[i + 2]))
        groups.append(mid)
        return assemble(names.count, groups)
    t = (n - 19) // 3
    A = names.layer(t + 1)
    B = names.layer(t + 1)
    C = names.layer(t + 1)
    mid = [
        (d2, A[0], B[0], d4), (d2, A[0], C[0], d6), (d4, C[0], d6, d8),
        (A[-1], B[-1], e3, e1), (e3, B[-1], e5, e7),
        (A[-1], C[-1], e5, e1),
    ]
    if t == 0:
        mid.append((d4, B[0], e5, C[0]))
    else:
        mid.append((d4, B[0], C[1], C[0]))
        mid.append((B[-2], C[-1], e5, B[-1]))
        for i in range(t):
            mid.append((A[i], A[i + 1], B[i + 1], B[i]))
            mid.append((A[i], C[i], C[i + 1], A[i + 1]))
        for i in range(t - 1):
            mid.append((B[i], C[i + 1], C[i + 2], B[i + 1]))
    groups.append(mid)
    return assemble(names.count, groups)


def build_nonsimple_quad(n: int) -> PlaneGraph:
    """Non-simple quadrangulation: ladder with interior rungs doubled."""
    if n < 14 or n % 2:
        raise OrderOutOfDomain(f"non-simple quadrangulation needs even n >= 14, got {n}")
    h = n // 2
    a = list(range(1, h + 1))
    c = list(range(h + 1, 2 * h + 1))
    rot: List[Tuple[int, ...]] = [()] * n
    for i in range(1, h - 1):
        rot[a[i] - 1] = (a[i - 1], c[i], a[i + 1], c[i])
        rot[c[i] - 1] = (c[i + 1], a[i], c[i - 1], a[i])
    rot[a[0] - 1] = (c[0], a[1])
    rot[c[0] - 1] = (c[1], a[0])
    rot[a[h - 1] - 1] = (a[h - 2], c[h - 1])
    rot[c[h - 1] - 1] = (a[h - 1], c[h - 2])
    return build_from_rotation(rot)


def build_minimizer_quad(n: int) -> PlaneGraph:
    """Wiener minimizer: both poles joined to every equator vertex."""
    if n < 8 or n % 2:
        raise OrderOutOfDomain(f"quadrangulation minimizer needs even n >= 8, got {n}")
    rim = list(range(1, n - 1))
    u, v = n - 1, n
    k = len(rim)
    faces = [[(u, rim[i], v, rim[(i + 1) % k]) for i in range(k)]]
    return assemble(n, faces)
