"""Exhaustive fixed-order generation by face-by-face disk growth.

Starting from a rooted face, the sphere is completed one face at a time,
always at the first boundary edge of the top region of a region stack.  For
a finished graph and a distinguished root dart the growth history is unique,
so enumerating all histories visits every isomorphism class; canonical-code
dedup removes the multiplicity.  Degree bounds prune during the search,
which is what makes minimum-degree-restricted classes (4- and 5-connected
triangulation scans, 3-connected quadrangulation scans) reachable at orders
where unrestricted enumeration is hopeless.

Regions are boundary walks stored as tuples of vertex occurrences; a vertex
may appear on several regions (or twice on one) when a chord pinches the
disk.  ``openc`` counts those occurrences; a vertex's degree is final when
it leaves every boundary.
"""

from __future__ import annotations

from typing import Iterator, List, Set, Tuple

from .._accel import HAVE_NUMBA
from ..errors import OrderOutOfDomain
from ..plane_graph import PlaneGraph, from_faces
from ._growth_kernel import grow_classes
from .canonical import canonical_code


class _Growth:
    def __init__(self, n: int, dmin_root: int, quad: bool):
        self.n = n
        self.d1 = dmin_root
        self.quad = quad
        size = n + 1
        self.adj = [0] * size
        self.deg = [0] * size
        self.openc = [0] * size
        self.color = [0] * size
        self.used = 0
        self.faces: List[Tuple[int, ...]] = []
        self.regions: List[Tuple[int, ...]] = []
        self.max_edges = (2 * n - 4) if quad else (3 * n - 6)
        self.m = 0
        # every graph of the class has exactly max_edges edges, so the total
        # remaining degree mass is fixed; prune when it cannot cover the
        # degree deficits of open and unborn vertices
        self.deficit = n * dmin_root
        self.out: List[Tuple[Tuple[int, ...], ...]] = []

    # -- primitive state changes -------------------------------------------
    def _add_edge(self, a: int, b: int) -> None:
        self.adj[a] |= 1 << b
        self.adj[b] |= 1 << a
        if self.deg[a] < self.d1:
            self.deficit -= 1
        if self.deg[b] < self.d1:
            self.deficit -= 1
        self.deg[a] += 1
        self.deg[b] += 1
        self.m += 1

    def _del_edge(self, a: int, b: int) -> None:
        self.adj[a] &= ~(1 << b)
        self.adj[b] &= ~(1 << a)
        self.deg[a] -= 1
        self.deg[b] -= 1
        if self.deg[a] < self.d1:
            self.deficit += 1
        if self.deg[b] < self.d1:
            self.deficit += 1
        self.m -= 1

    def _has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def _finalized_ok(self, v: int) -> bool:
        if v == 1:
            return self.deg[1] == self.d1
        return self.deg[v] >= self.d1

    # -- one growth step ----------------------------------------------------
    def _apply(self, face, new_edges, new_vertices, removed_regions, added_regions):
        for a, b in new_edges:
            self._add_edge(a, b)
        for x, col in new_vertices:
            self.used += 1
            self.color[x] = col
        for region in removed_regions:
            self.regions.pop()
            for z in region:
                self.openc[z] -= 1
        for region in added_regions:
            self.regions.append(region)
            for z in region:
                self.openc[z] += 1
        self.faces.append(face)
        # degree feasibility of every vertex that just left all boundaries
        touched = set()
        for region in removed_regions:
            touched.update(region)
        for v in touched:
            if self.openc[v] == 0 and not self._finalized_ok(v):
                return False
        if self.m > self.max_edges:
            return False
        if self.deg[1] > self.d1:
            return False
        if self.deficit > 2 * (self.max_edges - self.m):
            return False
        return True

    def _undo(self, new_edges, new_vertices, removed_regions, added_regions):
        self.faces.pop()
        for region in reversed(added_regions):
            self.regions.pop()
            for z in region:
                self.openc[z] -= 1
        for region in reversed(removed_regions):
            self.regions.append(region)
            for z in region:
                self.openc[z] += 1
        for x, _ in new_vertices:
            self.used -= 1
        for a, b in new_edges:
            self._del_edge(a, b)

    def _try(self, face, new_edges, new_vertices, removed_regions, added_regions):
        ok = self._apply(face, new_edges, new_vertices, removed_regions, added_regions)
        if ok:
            self._search()
        self._undo(new_edges, new_vertices, removed_regions, added_regions)

    # -- search -------------------------------------------------------------
    def _search(self) -> None:
        if not self.regions:
            if self.used == self.n:
                self.out.append(tuple(self.faces))
            return
        if self.quad:
            self._step_quad()
        else:
            self._step_tri()

    def _step_tri(self) -> None:
        B = self.regions[-1]
        k = len(B)
        v, w = B[0], B[1]
        # (a) fresh vertex
        if self.used < self.n:
            x = self.used + 1
            region = (x,) + B[1:] + (v,)
            self._try((v, w, x), [(w, x), (x, v)], [(x, 0)], [B], [region])
        # (b) an occurrence on the active boundary
        for t in range(2, k):
            x = B[t]
            if x == v or x == w:
                continue
            left_closed = t == 2
            right_closed = t == k - 1
            if not left_closed and self._has_edge(w, x):
                continue
            if not right_closed and self._has_edge(x, v):
                continue
            new_edges = []
            if not left_closed:
                new_edges.append((w, x))
            if not right_closed:
                new_edges.append((x, v))
            added = []
            if t > 2:
                added.append(B[1 : t + 1])  # (w, ..., x), closed by edge (x, w)
            if t < k - 1:
                added.append(B[t:] + (v,))  # (x, ..., v), closed by edge (v, x)
            self._try((v, w, x), new_edges, [], [B], added)

    def _step_quad(self) -> None:
        B = self.regions[-1]
        k = len(B)
        v, w = B[0], B[1]
        col_v, col_w = self.color[v], self.color[w]
        fresh_x = self.used < self.n
        # x new, y new
        if self.used + 2 <= self.n:
            x, y = self.used + 1, self.used + 2
            region = (y, x) + B[1:] + (v,)
            self._try(
                (v, w, x, y),
                [(w, x), (x, y), (y, v)],
                [(x, col_v), (y, col_w)],
                [B],
                [region],
            )
        # x new, y old
        if fresh_x:
            x = self.used + 1
            for s in range(2, k):
                y = B[s]
                if y == v or y == w or self.color[y] != col_w:
                    continue
                if s != k - 1 and self._has_edge(y, v):
                    continue
                new_edges = [(w, x), (x, y)]
                if s != k - 1:
                    new_edges.append((y, v))
                added = [(x,) + B[1 : s + 1]]  # (x, w, ..., y), closed by (y, x)
                if s < k - 1:
                    added.append(B[s:] + (v,))
                self._try((v, w, x, y), new_edges, [(x, col_v)], [B], added)
        # x old
        for t in range(2, k):
            x = B[t]
            if x == v or x == w or self.color[x] != col_v:
                continue
            if t != 2 and self._has_edge(w, x):
                continue
            edge_wx = [] if t == 2 else [(w, x)]
            # x old, y new
            if fresh_x:
                y = self.used + 1
                added = []
                if t > 2:
                    added.append(B[1 : t + 1])
                added.append((y,) + B[t:] + (v,))  # (y, x, ..., v), closed by (v, y)
                self._try(
                    (v, w, x, y),
                    edge_wx + [(x, y), (y, v)],
                    [(y, col_w)],
                    [B],
                    added,
                )
            # x old, y old
            for s in range(t + 1, k):
                y = B[s]
                if y == v or y == w or y == x or self.color[y] != col_w:
                    continue
                if s != t + 1 and self._has_edge(x, y):
                    continue
                if s != k - 1 and self._has_edge(y, v):
                    continue
                new_edges = list(edge_wx)
                if s != t + 1:
                    new_edges.append((x, y))
                if s != k - 1:
                    new_edges.append((y, v))
                added = []
                if t > 2:
                    added.append(B[1 : t + 1])
                if s > t + 1:
                    added.append(B[t : s + 1])
                if s < k - 1:
                    added.append(B[s:] + (v,))
                self._try((v, w, x, y), new_edges, [], [B], added)

    # -- entry point ----------------------------------------------------------
    def run(self) -> List[Tuple[Tuple[int, ...], ...]]:
        if self.quad:
            if self.n < 4:
                return []
            self.used = 4
            for a, b in ((1, 2), (2, 3), (3, 4), (4, 1)):
                self._add_edge(a, b)
            self.color[1] = self.color[3] = 0
            self.color[2] = self.color[4] = 1
            self.faces.append((1, 2, 3, 4))
            region = (1, 4, 3, 2)
            self.regions.append(region)
            for z in region:
                self.openc[z] += 1
            self._search()
        else:
            if self.n < 4:
                return []
            self.used = 3
            for a, b in ((1, 2), (2, 3), (3, 1)):
                self._add_edge(a, b)
            self.faces.append((1, 2, 3))
            region = (1, 3, 2)
            self.regions.append(region)
            for z in region:
                self.openc[z] += 1
            self._search()
        return self.out


def generate_degree_bounded(
    graph_class: str, n: int, min_degree: int, force_reference: bool = False
) -> Iterator[PlaneGraph]:
    """All plane graphs of the class and order with minimum degree as given.

    Exhaustive by construction; one representative per embedded isomorphism
    class (mirror images identified via the canonical code).  The accelerated
    kernel and this module's reference implementation are interchangeable;
    ``force_reference`` pins the latter (used by the cross-validation tests).
    """
    if graph_class == "triangulation":
        quad = False
        lo, hi = max(3, min_degree), min(5, n - 1)
    elif graph_class == "quadrangulation":
        quad = True
        lo, hi = max(2, min_degree), 3
    else:
        raise ValueError(f"unknown class {graph_class!r}")
    if n < 4:
        raise OrderOutOfDomain(f"need n >= 4, got {n}")
    use_kernel = HAVE_NUMBA and n <= 62 and not force_reference
    seen: Set[bytes] = set()
    for d1 in range(lo, hi + 1):
        if use_kernel:
            leaves = grow_classes(n, d1, quad)
        else:
            leaves = _Growth(n, d1, quad).run()
        for faces in leaves:
            g = from_faces(n, faces)
            code = canonical_code(g)
            if code not in seen:
                seen.add(code)
                yield g
