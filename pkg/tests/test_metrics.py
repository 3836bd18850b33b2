from fractions import Fraction

import pytest

from planewiener.errors import UnknownVertex
from planewiener.families import FamilyId, build_family
from planewiener.metrics import (
    distance_profile,
    max_transmission,
    remoteness,
    transmissions,
    wiener,
)
from planewiener.plane_graph import build_from_rotation


def embedded_path(n):
    rot = [(2,)] + [(v - 1, v + 1) for v in range(2, n)] + [(n - 1,)]
    return build_from_rotation(rot)


def brute_wiener(g):
    """Independent oracle: all-pairs distances by per-pair BFS."""
    adj = g.adjacency()
    total = 0
    for s in range(1, g.n + 1):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        total += sum(dist.values())
    return total // 2


def test_profiles(icosahedron, cube, k4):
    assert distance_profile(icosahedron, 1).layers == (1, 5, 5, 1)
    assert distance_profile(icosahedron, 1).transmission == 18
    assert distance_profile(cube, 3).layers == (1, 3, 3, 1)
    assert distance_profile(cube, 3).transmission == 12
    assert distance_profile(k4, 2).layers == (1, 3)
    assert distance_profile(k4, 2).transmission == 3


def test_unknown_vertex(k4):
    with pytest.raises(UnknownVertex):
        distance_profile(k4, 9)


def test_wiener_values(k4, cube, icosahedron):
    assert wiener(k4) == 6
    assert wiener(cube) == 48
    assert wiener(icosahedron) == 108


def test_remoteness_values(icosahedron):
    assert remoteness(icosahedron) == (Fraction(18, 11), 1)
    path = embedded_path(4)
    rho, arg = remoteness(path)
    assert rho == Fraction(2, 1) and arg == 1
    t3 = build_family(FamilyId.T3, 12)
    assert remoteness(t3)[0] == Fraction(26, 11)


def test_argmax_smallest_id():
    path = embedded_path(5)
    # both endpoints attain the maximum; the smaller id wins
    assert remoteness(path)[1] == 1


def test_wiener_matches_brute_force_on_small_corpus():
    from planewiener.enumeration import generate_all

    for n in (6, 7, 8, 9, 10):
        for g in generate_all("triangulation", n):
            assert wiener(g) == brute_wiener(g)
    for n in (6, 7, 8, 9, 10):
        for g in generate_all("quadrangulation", n):
            assert wiener(g) == brute_wiener(g)


def test_path_attains_wiener_bound():
    from planewiener.formulas import wiener_path_bound

    for n in range(2, 12):
        assert wiener(embedded_path(n)) == wiener_path_bound(n)


def test_transmissions_sum_twice_wiener(cube):
    sigma = transmissions(cube)
    assert sum(sigma[1:]) == 2 * wiener(cube)
    assert max_transmission(cube) == 12
