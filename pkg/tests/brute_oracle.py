"""Filter-based brute-force oracles, independent of the generators.

Triangulations on n vertices are counted by filtering every labeled graph
with 3n-6 edges for planarity (exact Kuratowski subdivision search);
quadrangulations by filtering the labeled subgraphs of complete bipartite
graphs with 2n-4 edges.  At those edge counts planarity already forces
connectivity, maximality and (for the bipartite case) 2-connectedness and
all-quadrilateral faces, so no further structure checks are needed.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Dict, List, Tuple

import numpy as np

from planewiener._accel import maybe_njit


@maybe_njit
def _edge_tables(n):
    pairs = np.zeros((n * (n - 1) // 2, 2), np.int64)
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            pairs[k, 0] = u
            pairs[k, 1] = v
            k += 1
    return pairs


@maybe_njit
def _has_k5_subdivision(adj, n):
    # branch vertices: every 5-subset; non-adjacent branch pairs need
    # internally disjoint paths through the <= n-5 free vertices
    idx = np.zeros(5, np.int64)
    for a in range(n - 4):
        for b in range(a + 1, n - 3):
            for c in range(b + 1, n - 2):
                for d in range(c + 1, n - 1):
                    for e in range(d + 1, n):
                        idx[0], idx[1], idx[2], idx[3], idx[4] = a, b, c, d, e
                        branch_mask = 0
                        for i in range(5):
                            branch_mask |= 1 << idx[i]
                        missing = np.zeros((10, 2), np.int64)
                        nmiss = 0
                        ok = True
                        for i in range(5):
                            for j in range(i + 1, 5):
                                if not (adj[idx[i]] >> idx[j]) & 1:
                                    if nmiss == 10:
                                        ok = False
                                    else:
                                        missing[nmiss, 0] = idx[i]
                                        missing[nmiss, 1] = idx[j]
                                        nmiss += 1
                        if not ok or nmiss > n - 5:
                            continue
                        if _route_paths(adj, n, missing, nmiss, branch_mask):
                            return True
    return False


@maybe_njit
def _has_k33_subdivision(adj, n):
    idx = np.zeros(6, np.int64)
    for a in range(n - 2):
        for b in range(a + 1, n - 1):
            for c in range(b + 1, n):
                rest = np.zeros(n, np.int64)
                nrest = 0
                for v in range(n):
                    if v != a and v != b and v != c:
                        rest[nrest] = v
                        nrest += 1
                for i in range(nrest - 2):
                    for j in range(i + 1, nrest - 1):
                        for k in range(j + 1, nrest):
                            idx[0], idx[1], idx[2] = a, b, c
                            idx[3], idx[4], idx[5] = rest[i], rest[j], rest[k]
                            branch_mask = 0
                            for t in range(6):
                                branch_mask |= 1 << idx[t]
                            missing = np.zeros((9, 2), np.int64)
                            nmiss = 0
                            for s in range(3):
                                for t in range(3, 6):
                                    if not (adj[idx[s]] >> idx[t]) & 1:
                                        missing[nmiss, 0] = idx[s]
                                        missing[nmiss, 1] = idx[t]
                                        nmiss += 1
                            if nmiss > n - 6:
                                continue
                            if _route_paths(adj, n, missing, nmiss, branch_mask):
                                return True
    return False


@maybe_njit
def _route_paths(adj, n, missing, nmiss, branch_mask):
    """Disjoint paths through free vertices for every missing branch pair.

    Iterative DFS; each frame marks one free vertex x and either closes the
    current path at the pair's target (choice bit 0) or keeps extending
    through x (choice bit 1).
    """
    if nmiss == 0:
        return True
    used = branch_mask
    max_depth = n + 2
    st_k = np.zeros(max_depth, np.int64)
    st_cur = np.zeros(max_depth, np.int64)
    st_choice = np.zeros(max_depth, np.int64)
    st_mark = np.zeros(max_depth, np.int64)
    depth = 0
    st_k[0] = 0
    st_cur[0] = -1
    st_choice[0] = 0
    st_mark[0] = -1
    while depth >= 0:
        k = st_k[depth]
        if k == nmiss:
            return True
        cur = st_cur[depth]
        tail = missing[k, 0] if cur < 0 else cur
        target = missing[k, 1]
        advanced = False
        c = st_choice[depth]
        while c < 2 * n:
            x = c >> 1
            mode = c & 1
            c += 1
            if (used >> x) & 1:
                c = ((x + 1) << 1)
                continue
            if not (adj[tail] >> x) & 1:
                c = ((x + 1) << 1)
                continue
            if mode == 0 and not (adj[x] >> target) & 1:
                continue
            st_choice[depth] = c
            used |= np.int64(1) << x
            depth += 1
            st_mark[depth] = x
            st_choice[depth] = 0
            if mode == 0:
                st_k[depth] = k + 1
                st_cur[depth] = -1
            else:
                st_k[depth] = k
                st_cur[depth] = x
            advanced = True
            break
        if not advanced:
            if st_mark[depth] >= 0:
                used &= ~(np.int64(1) << st_mark[depth])
            depth -= 1
    return False


@maybe_njit
def _is_planar(adj, n):
    if _has_k5_subdivision(adj, n):
        return False
    if _has_k33_subdivision(adj, n):
        return False
    return True


@maybe_njit
def _count_labeled_triangulations(n, out_masks):
    pairs = _edge_tables(n)
    npairs = n * (n - 1) // 2
    m = 3 * n - 6
    count = 0
    stored = 0
    # Gosper's hack over all npairs-bit masks of popcount m
    mask = (1 << m) - 1
    limit = 1 << npairs
    adj = np.zeros(n, np.int64)
    while mask < limit:
        for v in range(n):
            adj[v] = 0
        for k in range(npairs):
            if (mask >> k) & 1:
                u = pairs[k, 0]
                v = pairs[k, 1]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        good = True
        for v in range(n):
            d = 0
            av = adj[v]
            while av:
                av &= av - 1
                d += 1
            if d < 3:
                good = False
                break
        if good:
            for k in range(npairs):
                if (mask >> k) & 1:
                    u = pairs[k, 0]
                    v = pairs[k, 1]
                    common = adj[u] & adj[v]
                    cnt = 0
                    while common:
                        common &= common - 1
                        cnt += 1
                    if cnt < 2:
                        good = False
                        break
        if good and _is_planar(adj, n):
            if stored < len(out_masks):
                out_masks[stored] = mask
                stored += 1
            count += 1
        # next mask with same popcount
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r
    return count, stored


def labeled_triangulation_survey(n: int, want_masks: bool = True) -> Tuple[int, List[int]]:
    """(labeled count, masks) of maximal planar graphs on [n].

    With want_masks=False only the count is produced, which is what the
    n=8 comparison (labeled count == sum of n!/|Aut| over classes) needs.
    """
    cap = 200000 if want_masks else 1
    masks = np.zeros(cap, np.int64)
    count, stored = _count_labeled_triangulations(n, masks)
    if want_masks and stored < count:
        raise RuntimeError("mask buffer too small")
    return count, [int(x) for x in masks[:stored]] if want_masks else []


def mask_to_adj(n: int, mask: int) -> List[set]:
    adj: List[set] = [set() for _ in range(n + 1)]
    k = 0
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (mask >> k) & 1:
                adj[u].add(v)
                adj[v].add(u)
            k += 1
    return adj


def abstract_classes_of_masks(n: int, masks: List[int]) -> Dict[Tuple, int]:
    """Canonical edge sets of the masks, with labeled multiplicities."""
    classes: Dict[Tuple, int] = {}
    for mask in masks:
        adj = mask_to_adj(n, mask)
        key = _canon_small(n, adj)
        classes[key] = classes.get(key, 0) + 1
    return classes


def _canon_small(n: int, adj: List[set]) -> Tuple:
    # refine by iterated neighbor-degree signatures to keep blocks small
    sig = {v: len(adj[v]) for v in range(1, n + 1)}
    for _ in range(n):
        nxt = {
            v: (sig[v], tuple(sorted(sig[w] for w in adj[v])))
            for v in range(1, n + 1)
        }
        codes = {s: i for i, s in enumerate(sorted(set(nxt.values())))}
        renum = {v: codes[nxt[v]] for v in range(1, n + 1)}
        if renum == sig:
            break
        sig = renum
    order = sorted(range(1, n + 1), key=lambda v: (sig[v], v))
    best = None
    blocks: List[List[int]] = []
    for v in order:
        if blocks and sig[blocks[-1][0]] == sig[v]:
            blocks[-1].append(v)
        else:
            blocks.append([v])
    for perm in _block_perms(blocks):
        relabel = {v: i + 1 for i, v in enumerate(perm)}
        edges = tuple(sorted(
            tuple(sorted((relabel[u], relabel[v])))
            for u in range(1, n + 1) for v in adj[u] if u < v
        ))
        if best is None or edges < best:
            best = edges
    return best


def _block_perms(blocks: List[List[int]]):
    if len(blocks) == 1:
        yield from permutations(blocks[0])
        return
    for head in permutations(blocks[0]):
        for tail in _block_perms(blocks[1:]):
            yield list(head) + list(tail)


def automorphism_count(n: int, adj: List[set]) -> int:
    count = 0
    degs = {v: len(adj[v]) for v in range(1, n + 1)}
    for perm in permutations(range(1, n + 1)):
        mapping = {v: perm[v - 1] for v in range(1, n + 1)}
        if any(degs[v] != degs[mapping[v]] for v in range(1, n + 1)):
            continue
        if all(mapping[w] in adj[mapping[v]] for v in range(1, n + 1) for w in adj[v]):
            count += 1
    return count


def count_quadrangulation_classes_brute(n: int) -> int:
    """Abstract isomorphism classes of simple quadrangulations on n vertices."""
    m = 2 * n - 4
    classes = set()
    for a in range(2, n // 2 + 1):
        b = n - a
        universe = [(u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)]
        if len(universe) < m:
            continue
        for subset in combinations(range(len(universe)), m):
            adj: List[set] = [set() for _ in range(n + 1)]
            for k in subset:
                u, v = universe[k]
                adj[u].add(v)
                adj[v].add(u)
            if any(len(adj[v]) < 2 for v in range(1, n + 1)):
                continue
            # connectivity
            seen = {1}
            stack = [1]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != n:
                continue
            bm = np.zeros(n, np.int64)
            for v in range(1, n + 1):
                for w in adj[v]:
                    bm[v - 1] |= 1 << (w - 1)
            if not _is_planar(bm, n):
                continue
            classes.add(_canon_small(n, adj))
    return len(classes)
