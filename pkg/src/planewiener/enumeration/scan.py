"""Extremal scans over enumerated classes, reproducing the paper's tables.

Streams are the exhaustive fixed-order generator restricted to minimum
degree kappa_min (vertex connectivity k forces minimum degree k, so the
restriction loses nothing), then filtered by exact vertex connectivity.
Simple triangulations are always 3-connected and simple quadrangulations
always 2-connected, so those two baseline scans skip the flow computation.

Attaining counts follow the tables' semantics: isomorphism classes of
underlying graphs, mirror embeddings identified.  For 3-connected classes
the embedded code already realizes that; 2-connected quadrangulations are
deduplicated by an abstract canonical form.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import List, Optional, Tuple

from ..connectivity import vertex_connectivity
from ..metrics import transmissions
from ..plane_graph import PlaneGraph
from .canonical import abstract_canonical_form
from .growth import generate_degree_bounded


@dataclass(frozen=True)
class ExtremalRecord:
    order: int
    graph_class: str
    kappa_min: int
    max_wiener: Optional[int]
    wiener_count: Optional[int]
    max_transmission: Optional[int]
    transmission_count: Optional[int]
    total_classes: int


def _needs_kappa(graph_class: str, kappa_min: int) -> bool:
    if graph_class == "triangulation":
        if kappa_min not in (3, 4, 5):
            raise ValueError("triangulation scans support kappa 3..5")
        return kappa_min > 3  # simple triangulations are always 3-connected
    if graph_class == "quadrangulation":
        if kappa_min not in (2, 3):
            raise ValueError("quadrangulation scans support kappa 2..3")
        return kappa_min > 2  # simple quadrangulations are always 2-connected
    raise ValueError(f"unknown class {graph_class!r}")


def _evaluate(task: Tuple[PlaneGraph, int, bool]):
    g, kappa_min, check_kappa = task
    if check_kappa and vertex_connectivity(g).kappa < kappa_min:
        return None
    sigma = transmissions(g)
    return g, sum(sigma[1:]) // 2, max(sigma[1:])


def _abstract_count(graphs: List[PlaneGraph]) -> int:
    return len({abstract_canonical_form(g) for g in graphs})


def extremal_scan(
    graph_class: str, kappa_min: int, n: int, jobs: Optional[int] = None
) -> ExtremalRecord:
    """Max Wiener index and max transmission with attaining-class counts.

    ``jobs`` is the parallel width for the per-graph connectivity and
    distance work (default: all cores); the result is independent of it.
    """
    check_kappa = _needs_kappa(graph_class, kappa_min)
    total = 0
    best_w: Optional[int] = None
    best_s: Optional[int] = None
    w_attainers: List[PlaneGraph] = []
    s_attainers: List[PlaneGraph] = []
    three_connected = not (graph_class == "quadrangulation" and kappa_min == 2)
    w_count = 0
    s_count = 0
    width = os.cpu_count() or 1 if jobs is None else max(1, jobs)
    tasks = (
        (g, kappa_min, check_kappa)
        for g in generate_degree_bounded(graph_class, n, kappa_min)
    )
    pool = None if width == 1 else Pool(width)
    evaluated = map(_evaluate, tasks) if pool is None else pool.imap(
        _evaluate, tasks, chunksize=64
    )
    try:
        for item in evaluated:
            if item is None:
                continue
            g, w, smax = item
            total += 1
            if best_w is None or w > best_w:
                best_w = w
                w_count = 1
                w_attainers = [] if three_connected else [g]
            elif w == best_w:
                w_count += 1
                if not three_connected:
                    w_attainers.append(g)
            if best_s is None or smax > best_s:
                best_s = smax
                s_count = 1
                s_attainers = [] if three_connected else [g]
            elif smax == best_s:
                s_count += 1
                if not three_connected:
                    s_attainers.append(g)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    if not three_connected and total:
        w_count = _abstract_count(w_attainers)
        s_count = _abstract_count(s_attainers)
    return ExtremalRecord(
        order=n,
        graph_class=graph_class,
        kappa_min=kappa_min,
        max_wiener=best_w,
        wiener_count=w_count if total else None,
        max_transmission=best_s,
        transmission_count=s_count if total else None,
        total_classes=total,
    )
