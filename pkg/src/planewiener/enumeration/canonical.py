"""Canonical forms: embedded (rotation-system) and abstract (underlying graph).

The embedded code is the lexicographic minimum, over all starting darts and
both orientations, of the BFS-numbered rotation encoding (per vertex in label
order: its neighbor labels starting at the entry dart, 0-terminated).  Equal
codes mean isomorphic as embedded graphs up to reflection; for 3-connected
planar graphs that coincides with abstract isomorphism.

The abstract form is a brute-force minimum adjacency encoding with degree
refinement, used only on small sets (extremal attainers, oracle dedup).
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from .._accel import maybe_njit
from ..plane_graph import PlaneGraph


@maybe_njit
def _min_code(deg, start, flat, origin, rev, nd, n, best, cand, labels, entry, queue):
    have_best = False
    for d0 in range(nd):
        for s in range(2):
            orient = 1 if s == 0 else -1
            for i in range(n + 1):
                labels[i] = 0
            root = origin[d0]
            labels[root] = 1
            queue[0] = root
            entry[root] = d0
            count = 1
            head = 0
            pos = 0
            verdict = 0  # 0 equal-so-far, 1 strictly better, -1 worse
            while head < count:
                v = queue[head]
                head += 1
                base = start[v - 1]
                dv = deg[v - 1]
                eslot = entry[v] - base
                for k in range(dv):
                    slot = (eslot + orient * k) % dv
                    d = base + slot
                    w = flat[d]
                    lab = labels[w]
                    if lab == 0:
                        count += 1
                        lab = count
                        labels[w] = lab
                        queue[count - 1] = w
                        entry[w] = rev[d]
                    cand[pos] = lab
                    if have_best and verdict == 0:
                        if lab > best[pos]:
                            verdict = -1
                        elif lab < best[pos]:
                            verdict = 1
                    pos += 1
                if verdict < 0:
                    break
                cand[pos] = 0
                if have_best and verdict == 0 and best[pos] != 0:
                    verdict = 1  # shorter vertex list sorts first via 0 byte
                pos += 1
            if verdict < 0:
                continue
            if not have_best or verdict == 1:
                for i in range(pos):
                    best[i] = cand[i]
                have_best = True
    return 0


def graph_arrays(g: PlaneGraph):
    n = g.n
    deg = np.array([len(r) for r in g.rotation], dtype=np.int32)
    start = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        start[v + 1] = start[v] + deg[v]
    nd = int(start[n])
    flat = np.empty(nd, dtype=np.int32)
    origin = np.empty(nd, dtype=np.int32)
    pos = 0
    for v in range(1, n + 1):
        for w in g.rotation[v - 1]:
            flat[pos] = w
            origin[pos] = v
            pos += 1
    rev = np.array(g.rev, dtype=np.int32)
    return deg, start, flat, origin, rev, nd


def canonical_code(g: PlaneGraph) -> bytes:
    """Relabeling/re-rooting/reflection invariant code of the embedding."""
    deg, start, flat, origin, rev, nd = graph_arrays(g)
    n = g.n
    size = n + nd
    best = np.zeros(size, dtype=np.int32)
    cand = np.zeros(size, dtype=np.int32)
    labels = np.zeros(n + 1, dtype=np.int32)
    entry = np.zeros(n + 1, dtype=np.int32)
    queue = np.zeros(n, dtype=np.int32)
    _min_code(deg, start, flat, origin, rev, nd, n, best, cand, labels, entry, queue)
    return bytes(bytearray(int(x) for x in best))


def _refine_cells(adj_sets: List[set], n: int) -> List[int]:
    """Iterated degree refinement; returns a color per vertex (1-based)."""
    color = [0] * (n + 1)
    for v in range(1, n + 1):
        color[v] = len(adj_sets[v])
    while True:
        sig = {}
        new_color = [0] * (n + 1)
        for v in range(1, n + 1):
            key = (color[v], tuple(sorted(color[w] for w in adj_sets[v])))
            if key not in sig:
                sig[key] = len(sig)
            new_color[v] = sig[key]
        if new_color == color:
            return color
        color = new_color


def abstract_canonical_form(g: PlaneGraph) -> Tuple[Tuple[int, int], ...]:
    """Canonical edge list of the underlying simple graph.

    Backtracking over label assignments ordered by refinement color,
    maximizing the adjacency bitstring row by row.  Exponential in theory;
    used only on handfuls of small, highly refined graphs.
    """
    n = g.n
    adj = g.adjacency()
    adj_sets = [set(adj[v]) if v else set() for v in range(n + 1)]
    color = _refine_cells(adj_sets, n)

    best_rows: List[int] = []
    best_perm: List[int] = []

    def extend(perm: List[int], rows: List[int]) -> None:
        nonlocal best_rows, best_perm
        k = len(perm)
        if k == n:
            if not best_rows or rows > best_rows:
                best_rows = rows[:]
                best_perm = perm[:]
            return
        placed = set(perm)
        # candidates: unplaced vertices of minimal color, preferring those
        # adjacent to already placed ones (keeps rows large early)
        cands = [v for v in range(1, n + 1) if v not in placed]
        cands.sort(key=lambda v: (color[v], -sum(1 for w in perm if w in adj_sets[v])))
        for v in cands:
            row = 0
            for i, w in enumerate(perm):
                if w in adj_sets[v]:
                    row |= 1 << i
            new_rows = rows + [row]
            if best_rows:
                prefix = best_rows[: len(new_rows)]
                if new_rows < prefix:
                    continue
            extend(perm + [v], new_rows)

    extend([], [])
    relabel = {v: i + 1 for i, v in enumerate(best_perm)}
    edges = sorted(
        tuple(sorted((relabel[u], relabel[w])))
        for (u, w) in g.edge_multiset()
    )
    return tuple(edges)
