"""Exact vertex connectivity via Menger's theorem on the vertex-split digraph.

Multi-edges are collapsed before computing kappa; the paper only assigns
connectivity classes to simple graphs.  ``brute_force_connectivity`` is the
independent oracle used by the test suite on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .plane_graph import PlaneGraph


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness_cut: FrozenSet[int]


def _max_vertex_flow(adj: List[List[int]], n: int, s: int, t: int, cap: int) -> int:
    """Count of internally disjoint s-t paths, stopped early at ``cap``.

    Unit-capacity flow on the split digraph: vertex v becomes v_in=2v,
    v_out=2v+1.  Augmenting paths found by BFS; each augmentation adds one
    disjoint path, so at most ``cap`` rounds run.
    """
    size = 2 * n + 2
    # residual adjacency as dict-of-sets is overkill at desk scale; use sets
    res: List[set] = [set() for _ in range(size)]
    for v in range(1, n + 1):
        if v != s and v != t:
            res[2 * v].add(2 * v + 1)
    for v in range(1, n + 1):
        for w in adj[v]:
            res[2 * v + 1].add(2 * w)
    flow = 0
    while flow < cap:
        parent = [-1] * size
        parent[2 * s + 1] = 2 * s + 1
        queue = [2 * s + 1]
        while queue and parent[2 * t] < 0:
            nxt: List[int] = []
            for x in queue:
                for y in res[x]:
                    if parent[y] < 0:
                        parent[y] = x
                        nxt.append(y)
            queue = nxt
        if parent[2 * t] < 0:
            break
        y = 2 * t
        while y != 2 * s + 1:
            x = parent[y]
            res[x].discard(y)
            res[y].add(x)
            y = x
        flow += 1
    return flow


def _min_cut_vertices(adj: List[List[int]], n: int, s: int, t: int, k: int) -> FrozenSet[int]:
    """A minimum s-t vertex cut of size k, recovered from a maximum flow."""
    size = 2 * n + 2
    res: List[set] = [set() for _ in range(size)]
    for v in range(1, n + 1):
        if v != s and v != t:
            res[2 * v].add(2 * v + 1)
    for v in range(1, n + 1):
        for w in adj[v]:
            res[2 * v + 1].add(2 * w)
    for _ in range(k):
        parent = [-1] * size
        parent[2 * s + 1] = 2 * s + 1
        queue = [2 * s + 1]
        while queue and parent[2 * t] < 0:
            nxt: List[int] = []
            for x in queue:
                for y in res[x]:
                    if parent[y] < 0:
                        parent[y] = x
                        nxt.append(y)
            queue = nxt
        if parent[2 * t] < 0:
            break
        y = 2 * t
        while y != 2 * s + 1:
            x = parent[y]
            res[x].discard(y)
            res[y].add(x)
            y = x
    reach = [False] * size
    reach[2 * s + 1] = True
    queue = [2 * s + 1]
    while queue:
        nxt = []
        for x in queue:
            for y in res[x]:
                if not reach[y]:
                    reach[y] = True
                    nxt.append(y)
        queue = nxt
    cut = frozenset(
        v for v in range(1, n + 1) if reach[2 * v] and not reach[2 * v + 1]
    )
    return cut


def vertex_connectivity(g: PlaneGraph) -> ConnectivityResult:
    """kappa(G) plus one witness cut (empty for complete graphs)."""
    n = g.n
    adj = g.adjacency()
    degs = [len(adj[v]) for v in range(1, n + 1)]
    if n <= 1:
        return ConnectivityResult(kappa=0, witness_cut=frozenset())
    if all(d == n - 1 for d in degs):
        return ConnectivityResult(kappa=n - 1, witness_cut=frozenset())

    best = min(degs)
    best_pair: Optional[Tuple[int, int]] = None
    v0 = degs.index(best) + 1

    def probe(s: int, t: int) -> None:
        nonlocal best, best_pair
        flow = _max_vertex_flow(adj, n, s, t, best)
        if flow < best:
            best = flow
            best_pair = (s, t)

    nbrs0 = set(adj[v0])
    for t in range(1, n + 1):
        if t != v0 and t not in nbrs0:
            probe(v0, t)
    for x, y in combinations(adj[v0], 2):
        if y not in adj[x]:
            probe(x, y)

    if best_pair is None:
        # minimum realized by the degree bound: cut = the neighborhood itself
        return ConnectivityResult(kappa=best, witness_cut=frozenset(adj[v0]))
    cut = _min_cut_vertices(adj, n, best_pair[0], best_pair[1], best)
    return ConnectivityResult(kappa=best, witness_cut=cut)


def is_separating_set(adj: Sequence[Sequence[int]], n: int, cut: Sequence[int]) -> bool:
    removed = set(cut)
    start = next((v for v in range(1, n + 1) if v not in removed), None)
    if start is None:
        return False
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) < n - len(removed)


def brute_force_connectivity(g: PlaneGraph) -> int:
    """Oracle: smallest vertex set whose removal disconnects the graph."""
    n = g.n
    adj = g.adjacency()
    if all(len(adj[v]) == n - 1 for v in range(1, n + 1)):
        return n - 1
    for size in range(1, n - 1):
        for cut in combinations(range(1, n + 1), size):
            if is_separating_set(adj, n, cut):
                return size
    return n - 1
