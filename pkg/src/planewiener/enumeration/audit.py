"""Runtime audits of the paper's structural lemmas over enumerated graphs.

Each audit applies only under its lemma's hypotheses; outside them the flag
is None (skipped, not failed).  A False flag carries (lemma, root vertex)
witnesses -- on a proved lemma that is a build-stopping defect, and the
acceptance suite treats it as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..connectivity import vertex_connectivity
from ..metrics import _bfs_layers
from ..plane_graph import PlaneGraph, classify, trace_faces


@dataclass(frozen=True)
class AuditReport:
    lemma33_ok: Optional[bool]
    lemma34a_ok: Optional[bool]
    lemma34b_ok: Optional[bool]
    offending: Tuple[Tuple[str, int], ...]


def _layers_from(adj, n: int, root: int) -> List[List[int]]:
    dist = [-1] * (n + 1)
    dist[root] = 0
    frontier = [root]
    layers = [[root]]
    while frontier:
        nxt: List[int] = []
        for v in frontier:
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        if nxt:
            layers.append(nxt)
        frontier = nxt
    return layers


def _check_active_face_sharing(g: PlaneGraph) -> Optional[int]:
    """Lemma 3.3 audit; returns an offending root vertex or None."""
    adj = g.adjacency()
    faces = [set(f) for f in trace_faces(g)]
    at_vertex: List[List[int]] = [[] for _ in range(g.n + 1)]
    for idx, f in enumerate(faces):
        for v in f:
            at_vertex[v].append(idx)
    for root in range(1, g.n + 1):
        layers = _layers_from(adj, g.n, root)
        for i in range(1, len(layers) - 1):
            above = set(layers[i + 1])
            active = [w for w in layers[i] if any(x in above for x in adj[w])]
            active_set = set(active)
            for w in active:
                sharing = set()
                for fi in at_vertex[w]:
                    sharing.update(faces[fi] & active_set)
                sharing.discard(w)
                if len(sharing) < 2:
                    return root
    return None


def _check_tail_5tri(g: PlaneGraph) -> Optional[int]:
    adj = g.adjacency()
    for root in range(1, g.n + 1):
        layers = _bfs_layers(adj, g.n, root)
        if len(layers) >= 2 and layers[-2] == 5 and layers[-1] != 1:
            return root
    return None


def _check_tail_3quad(g: PlaneGraph) -> Optional[int]:
    adj = g.adjacency()
    for root in range(1, g.n + 1):
        layers = _bfs_layers(adj, g.n, root)
        if len(layers) >= 2 and layers[-2] == 3 and layers[-1] != 1:
            return root
        if len(layers) >= 3 and layers[-3] == 3 and layers[-2] == 4 and layers[-1] <= 1:
            return root
    return None


def lemma_audit(g: PlaneGraph) -> AuditReport:
    rep = classify(g)
    if not rep.is_simple:
        return AuditReport(None, None, None, ())
    kappa = vertex_connectivity(g).kappa
    offending: List[Tuple[str, int]] = []

    ok33: Optional[bool] = None
    if kappa >= 3:
        bad = _check_active_face_sharing(g)
        ok33 = bad is None
        if bad is not None:
            offending.append(("lemma33", bad))

    ok34a: Optional[bool] = None
    if rep.is_triangulation and kappa >= 5:
        bad = _check_tail_5tri(g)
        ok34a = bad is None
        if bad is not None:
            offending.append(("lemma34a", bad))

    ok34b: Optional[bool] = None
    if rep.is_quadrangulation and kappa >= 3:
        bad = _check_tail_3quad(g)
        ok34b = bad is None
        if bad is not None:
            offending.append(("lemma34b", bad))

    return AuditReport(ok33, ok34a, ok34b, tuple(offending))
