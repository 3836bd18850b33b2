"""Exact distance invariants: layer profiles, transmission, Wiener, remoteness.

All arithmetic is integer or ``fractions.Fraction``; nothing here is ever
rounded.  Remoteness argmax ties break toward the smallest vertex id so CLI
output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import UnknownVertex
from .plane_graph import PlaneGraph

Rational = Fraction


@dataclass(frozen=True)
class DistanceProfile:
    """Layer sequence (n_0, ..., n_d) of a BFS from ``root``."""

    root: int
    layers: Tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    @property
    def transmission(self) -> int:
        return sum(i * k for i, k in enumerate(self.layers))


def _bfs_layers(adj: List[List[int]], n: int, root: int) -> Tuple[int, ...]:
    dist = [-1] * (n + 1)
    dist[root] = 0
    frontier = [root]
    layers = [1]
    while frontier:
        nxt: List[int] = []
        for v in frontier:
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        if nxt:
            layers.append(len(nxt))
        frontier = nxt
    return tuple(layers)


def distance_profile(g: PlaneGraph, v: int) -> DistanceProfile:
    if not 1 <= v <= g.n:
        raise UnknownVertex(f"vertex {v} not in 1..{g.n}")
    return DistanceProfile(root=v, layers=_bfs_layers(g.adjacency(), g.n, v))


def transmissions(g: PlaneGraph) -> List[int]:
    """Transmission sigma(v) for every vertex, index 0 unused."""
    adj = g.adjacency()
    out = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        layers = _bfs_layers(adj, g.n, v)
        if sum(layers) != g.n:
            raise UnknownVertex("graph is not connected")
        out[v] = sum(i * k for i, k in enumerate(layers))
    return out

def transmission(g: PlaneGraph, v: int) -> int:
    return distance_profile(g, v).transmission


def wiener(g: PlaneGraph) -> int:
    """Sum of distances over unordered vertex pairs."""
    total = sum(transmissions(g)[1:])
    assert total % 2 == 0
    return total // 2


def remoteness(g: PlaneGraph) -> Tuple[Rational, int]:
    """Maximum of sigma(v)/(n-1) as a reduced rational, with one argmax."""
    if g.n < 2:
        raise UnknownVertex("remoteness needs at least two vertices")
    sigma = transmissions(g)
    best = max(sigma[1:])
    argmax = sigma.index(best, 1)
    return Fraction(best, g.n - 1), argmax


def max_transmission(g: PlaneGraph) -> int:
    return max(transmissions(g)[1:])
