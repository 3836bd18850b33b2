"""numba kernel behind the fixed-order growth generator.

Same algorithm as growth._Growth (which remains the reference
implementation), restated over flat arrays with an explicit DFS stack and
in-kernel canonical-code dedup.  Exactness: duplicate suppression hashes the
canonical code but always verifies candidate equality byte for byte, with
same-hash chaining, so no class can be lost to a hash collision.
"""

from __future__ import annotations

import numpy as np

from .._accel import maybe_njit
from .canonical import _min_code

_EMPTY = np.int64(-1)


@maybe_njit
def _leaf_code(
    n, fverts, nfaces, fsz,
    succ, succ_stamp, stamp,
    deg, start, flat, origin, rev, dart_id,
    best, cand, labels, entry, queue,
):
    """Canonical code of the simple plane graph given by oriented faces.

    Returns the code length, or -1 if a rotation fails to close into a
    single cycle (cannot happen for valid growth output; checked anyway).
    """
    for f in range(nfaces):
        base = f * fsz
        for i in range(fsz):
            u = fverts[base + i]
            v = fverts[base + (i + 1) % fsz]
            w = fverts[base + (i + 2) % fsz]
            succ[v, u] = w
            succ_stamp[v, u] = stamp
    # rotations in dart order; dart_id[u, v] gives the dart index of u->v
    nd = 0
    for v in range(1, n + 1):
        start[v - 1] = nd
        first = -1
        for u in range(1, n + 1):
            if succ_stamp[v, u] == stamp:
                first = u
                break
        if first < 0:
            return -1
        u = first
        d = 0
        while True:
            flat[nd] = u
            origin[nd] = v
            dart_id[v, u] = nd
            nd += 1
            d += 1
            u = succ[v, u]
            if u == first:
                break
            if d > n:
                return -1
        deg[v - 1] = d
    start[n] = nd
    for d0 in range(nd):
        rev[d0] = dart_id[flat[d0], origin[d0]]
    _min_code(deg, start, flat, origin, rev, nd, n, best, cand, labels, entry, queue)
    return n + nd


@maybe_njit
def _grow_kernel(
    n, d1, quad,
    out_codes, out_faces, max_classes,
    table, chain,
):
    fsz = 4 if quad else 3
    total_faces = (n - 2) if quad else (2 * n - 4)
    max_edges = (2 * n - 4) if quad else (3 * n - 6)
    maxdepth = total_faces + 2
    code_len = n + 2 * max_edges

    adj = np.zeros(n + 1, np.int64)
    deg_v = np.zeros(n + 1, np.int32)
    openc = np.zeros(n + 1, np.int32)
    color = np.zeros(n + 1, np.int32)

    rbuf = np.zeros(maxdepth * (2 * n + 8) + 64, np.int32)
    rstart = np.zeros(maxdepth + 4, np.int32)
    rlen = np.zeros(maxdepth + 4, np.int32)
    fverts = np.zeros(maxdepth * fsz, np.int32)

    chcap = 4 * (2 * n + 4) * (2 * n + 4)
    ch_kind = np.zeros(maxdepth * chcap, np.int32)
    ch_t = np.zeros(maxdepth * chcap, np.int32)
    ch_s = np.zeros(maxdepth * chcap, np.int32)
    fr_pos = np.zeros(maxdepth, np.int32)
    fr_n = np.zeros(maxdepth, np.int32)

    s_rsp = np.zeros(maxdepth, np.int32)
    s_rtop = np.zeros(maxdepth, np.int32)
    s_used = np.zeros(maxdepth, np.int32)
    s_m = np.zeros(maxdepth, np.int32)
    s_deficit = np.zeros(maxdepth, np.int32)
    s_topstart = np.zeros(maxdepth, np.int32)
    s_toplen = np.zeros(maxdepth, np.int32)
    s_nedges = np.zeros(maxdepth, np.int32)
    s_edges = np.zeros(maxdepth * 6, np.int32)
    s_births = np.zeros(maxdepth, np.int32)

    # canonicalization scratch
    succ = np.zeros((n + 1, n + 1), np.int32)
    succ_stamp = np.zeros((n + 1, n + 1), np.int64)
    dart_id = np.zeros((n + 1, n + 1), np.int32)
    cdeg = np.zeros(n, np.int32)
    cstart = np.zeros(n + 1, np.int32)
    cflat = np.zeros(2 * max_edges, np.int32)
    corigin = np.zeros(2 * max_edges, np.int32)
    crev = np.zeros(2 * max_edges, np.int32)
    cbest = np.zeros(code_len, np.int32)
    ccand = np.zeros(code_len, np.int32)
    clabels = np.zeros(n + 1, np.int32)
    centry = np.zeros(n + 1, np.int32)
    cqueue = np.zeros(n, np.int32)
    stamp = np.int64(0)

    mask = np.int64(len(table) - 1)
    n_classes = 0

    # ---- init ----
    used = 0
    m = 0
    deficit = n * d1
    rsp = 0
    rtop = 0
    if quad:
        used = 4
        init_edges = 4
        color[1] = 0
        color[2] = 1
        color[3] = 0
        color[4] = 1
        fverts[0] = 1
        fverts[1] = 2
        fverts[2] = 3
        fverts[3] = 4
        rbuf[0] = 1
        rbuf[1] = 4
        rbuf[2] = 3
        rbuf[3] = 2
        rlen[0] = 4
    else:
        used = 3
        init_edges = 3
        fverts[0] = 1
        fverts[1] = 2
        fverts[2] = 3
        rbuf[0] = 1
        rbuf[1] = 3
        rbuf[2] = 2
        rlen[0] = 3
    rstart[0] = 0
    rtop = rlen[0]
    rsp = 1
    for i in range(rlen[0]):
        openc[rbuf[i]] += 1
    for v in range(1, used + 1):
        a = v
        b = v % used + 1
        adj[a] |= np.int64(1) << b
        adj[b] |= np.int64(1) << a
        if deg_v[a] < d1:
            deficit -= 1
        if deg_v[b] < d1:
            deficit -= 1
        deg_v[a] += 1
        deg_v[b] += 1
        m += 1
    if deficit > 2 * (max_edges - m) or deg_v[1] > d1:
        return n_classes

    depth = 0

    # ---- generate choices for a frame ----
    def gen(depth_, rsp_, used_):
        bs = rstart[rsp_ - 1]
        k = rlen[rsp_ - 1]
        v = rbuf[bs]
        w = rbuf[bs + 1]
        base = depth_ * chcap
        cnt = 0
        if quad:
            col_v = color[v]
            col_w = color[w]
            if used_ + 2 <= n:
                ch_kind[base + cnt] = 0
                cnt += 1
            if used_ + 1 <= n:
                for s in range(2, k):
                    y = rbuf[bs + s]
                    if y == v or y == w or color[y] != col_w:
                        continue
                    if s != k - 1 and (adj[y] >> v & 1):
                        continue
                    ch_kind[base + cnt] = 1
                    ch_s[base + cnt] = s
                    cnt += 1
            for t in range(2, k):
                x = rbuf[bs + t]
                if x == v or x == w or color[x] != col_v:
                    continue
                if t != 2 and (adj[w] >> x & 1):
                    continue
                if used_ + 1 <= n:
                    ch_kind[base + cnt] = 2
                    ch_t[base + cnt] = t
                    cnt += 1
                for s in range(t + 1, k):
                    y = rbuf[bs + s]
                    if y == v or y == w or y == x or color[y] != col_w:
                        continue
                    if s != t + 1 and (adj[x] >> y & 1):
                        continue
                    if s != k - 1 and (adj[y] >> v & 1):
                        continue
                    ch_kind[base + cnt] = 3
                    ch_t[base + cnt] = t
                    ch_s[base + cnt] = s
                    cnt += 1
        else:
            if used_ + 1 <= n:
                ch_kind[base + cnt] = 0
                cnt += 1
            for t in range(2, k):
                x = rbuf[bs + t]
                if x == v or x == w:
                    continue
                if t != 2 and (adj[w] >> x & 1):
                    continue
                if t != k - 1 and (adj[x] >> v & 1):
                    continue
                ch_kind[base + cnt] = 3
                ch_t[base + cnt] = t
                cnt += 1
        fr_n[depth_] = cnt
        fr_pos[depth_] = 0

    gen(depth, rsp, used)

    while depth >= 0:
        if fr_pos[depth] >= fr_n[depth]:
            depth -= 1
            if depth < 0:
                break
            # undo the application that opened the exhausted frame
            for r in range(s_rsp[depth] - 1, rsp):
                for i in range(rstart[r], rstart[r] + rlen[r]):
                    openc[rbuf[i]] -= 1
            rsp = s_rsp[depth]
            rtop = s_rtop[depth]
            rstart[rsp - 1] = s_topstart[depth]
            rlen[rsp - 1] = s_toplen[depth]
            for i in range(rstart[rsp - 1], rstart[rsp - 1] + rlen[rsp - 1]):
                openc[rbuf[i]] += 1
            used = s_used[depth]
            for e in range(s_nedges[depth]):
                a = s_edges[depth * 6 + 2 * e]
                b = s_edges[depth * 6 + 2 * e + 1]
                adj[a] &= ~(np.int64(1) << b)
                adj[b] &= ~(np.int64(1) << a)
                deg_v[a] -= 1
                deg_v[b] -= 1
            m = s_m[depth]
            deficit = s_deficit[depth]
            continue

        ci = depth * chcap + fr_pos[depth]
        fr_pos[depth] += 1
        kind = ch_kind[ci]
        t = ch_t[ci]
        s = ch_s[ci]

        bs = rstart[rsp - 1]
        k = rlen[rsp - 1]
        v = rbuf[bs]
        w = rbuf[bs + 1]

        # save frame
        s_rsp[depth] = rsp
        s_rtop[depth] = rtop
        s_used[depth] = used
        s_m[depth] = m
        s_deficit[depth] = deficit
        s_topstart[depth] = bs
        s_toplen[depth] = k

        # pop active region
        for i in range(bs, bs + k):
            openc[rbuf[i]] -= 1
        rsp -= 1

        ne = 0
        births = 0
        fbase = (depth + 1) * fsz
        ok = True

        if not quad:
            if kind == 0:
                x = used + 1
                used += 1
                births = 1
                s_edges[depth * 6 + 0] = w
                s_edges[depth * 6 + 1] = x
                s_edges[depth * 6 + 2] = x
                s_edges[depth * 6 + 3] = v
                ne = 2
                # region (x, w, B2.., v)
                ns = rtop
                rbuf[ns] = x
                for i in range(1, k):
                    rbuf[ns + i] = rbuf[bs + i]
                rbuf[ns + k] = v
                rstart[rsp] = ns
                rlen[rsp] = k + 1
                rsp += 1
                rtop = ns + k + 1
            else:
                x = rbuf[bs + t]
                if t != 2:
                    s_edges[depth * 6 + 2 * ne] = w
                    s_edges[depth * 6 + 2 * ne + 1] = x
                    ne += 1
                if t != k - 1:
                    s_edges[depth * 6 + 2 * ne] = x
                    s_edges[depth * 6 + 2 * ne + 1] = v
                    ne += 1
                if t > 2:  # (w, ..., x)
                    ns = rtop
                    for i in range(1, t + 1):
                        rbuf[ns + i - 1] = rbuf[bs + i]
                    rstart[rsp] = ns
                    rlen[rsp] = t
                    rsp += 1
                    rtop = ns + t
                if t < k - 1:  # (x, ..., v)
                    ns = rtop
                    for i in range(t, k):
                        rbuf[ns + i - t] = rbuf[bs + i]
                    rbuf[ns + k - t] = v
                    rstart[rsp] = ns
                    rlen[rsp] = k - t + 1
                    rsp += 1
                    rtop = ns + k - t + 1
            fverts[fbase] = v
            fverts[fbase + 1] = w
            fverts[fbase + 2] = x
        else:
            if kind == 0:
                x = used + 1
                y = used + 2
                used += 2
                births = 2
                color[x] = color[v]
                color[y] = color[w]
                s_edges[depth * 6 + 0] = w
                s_edges[depth * 6 + 1] = x
                s_edges[depth * 6 + 2] = x
                s_edges[depth * 6 + 3] = y
                s_edges[depth * 6 + 4] = y
                s_edges[depth * 6 + 5] = v
                ne = 3
                ns = rtop  # (y, x, w, B2.., v)
                rbuf[ns] = y
                rbuf[ns + 1] = x
                for i in range(1, k):
                    rbuf[ns + 1 + i] = rbuf[bs + i]
                rbuf[ns + k + 1] = v
                rstart[rsp] = ns
                rlen[rsp] = k + 2
                rsp += 1
                rtop = ns + k + 2
            elif kind == 1:
                x = used + 1
                used += 1
                births = 1
                color[x] = color[v]
                y = rbuf[bs + s]
                s_edges[depth * 6 + 0] = w
                s_edges[depth * 6 + 1] = x
                s_edges[depth * 6 + 2] = x
                s_edges[depth * 6 + 3] = y
                ne = 2
                if s != k - 1:
                    s_edges[depth * 6 + 4] = y
                    s_edges[depth * 6 + 5] = v
                    ne = 3
                ns = rtop  # (x, w, B2.., y)
                rbuf[ns] = x
                for i in range(1, s + 1):
                    rbuf[ns + i] = rbuf[bs + i]
                rstart[rsp] = ns
                rlen[rsp] = s + 1
                rsp += 1
                rtop = ns + s + 1
                if s < k - 1:  # (y, ..., v)
                    ns = rtop
                    for i in range(s, k):
                        rbuf[ns + i - s] = rbuf[bs + i]
                    rbuf[ns + k - s] = v
                    rstart[rsp] = ns
                    rlen[rsp] = k - s + 1
                    rsp += 1
                    rtop = ns + k - s + 1
            elif kind == 2:
                x = rbuf[bs + t]
                y = used + 1
                used += 1
                births = 1
                color[y] = color[w]
                if t != 2:
                    s_edges[depth * 6 + 2 * ne] = w
                    s_edges[depth * 6 + 2 * ne + 1] = x
                    ne += 1
                s_edges[depth * 6 + 2 * ne] = x
                s_edges[depth * 6 + 2 * ne + 1] = y
                ne += 1
                s_edges[depth * 6 + 2 * ne] = y
                s_edges[depth * 6 + 2 * ne + 1] = v
                ne += 1
                if t > 2:  # (w, .., x)
                    ns = rtop
                    for i in range(1, t + 1):
                        rbuf[ns + i - 1] = rbuf[bs + i]
                    rstart[rsp] = ns
                    rlen[rsp] = t
                    rsp += 1
                    rtop = ns + t
                ns = rtop  # (y, x, .., v)
                rbuf[ns] = y
                for i in range(t, k):
                    rbuf[ns + 1 + i - t] = rbuf[bs + i]
                rbuf[ns + 1 + k - t] = v
                rstart[rsp] = ns
                rlen[rsp] = k - t + 2
                rsp += 1
                rtop = ns + k - t + 2
            else:
                x = rbuf[bs + t]
                y = rbuf[bs + s]
                if t != 2:
                    s_edges[depth * 6 + 2 * ne] = w
                    s_edges[depth * 6 + 2 * ne + 1] = x
                    ne += 1
                if s != t + 1:
                    s_edges[depth * 6 + 2 * ne] = x
                    s_edges[depth * 6 + 2 * ne + 1] = y
                    ne += 1
                if s != k - 1:
                    s_edges[depth * 6 + 2 * ne] = y
                    s_edges[depth * 6 + 2 * ne + 1] = v
                    ne += 1
                if t > 2:
                    ns = rtop
                    for i in range(1, t + 1):
                        rbuf[ns + i - 1] = rbuf[bs + i]
                    rstart[rsp] = ns
                    rlen[rsp] = t
                    rsp += 1
                    rtop = ns + t
                if s > t + 1:
                    ns = rtop
                    for i in range(t, s + 1):
                        rbuf[ns + i - t] = rbuf[bs + i]
                    rstart[rsp] = ns
                    rlen[rsp] = s - t + 1
                    rsp += 1
                    rtop = ns + s - t + 1
                if s < k - 1:
                    ns = rtop
                    for i in range(s, k):
                        rbuf[ns + i - s] = rbuf[bs + i]
                    rbuf[ns + k - s] = v
                    rstart[rsp] = ns
                    rlen[rsp] = k - s + 1
                    rsp += 1
                    rtop = ns + k - s + 1
            fverts[fbase] = v
            fverts[fbase + 1] = w
            fverts[fbase + 2] = x
            fverts[fbase + 3] = y

        s_nedges[depth] = ne
        s_births[depth] = births

        # add edges with deficit bookkeeping
        for e in range(ne):
            a = s_edges[depth * 6 + 2 * e]
            b = s_edges[depth * 6 + 2 * e + 1]
            adj[a] |= np.int64(1) << b
            adj[b] |= np.int64(1) << a
            if deg_v[a] < d1:
                deficit -= 1
            if deg_v[b] < d1:
                deficit -= 1
            deg_v[a] += 1
            deg_v[b] += 1
            m += 1

        # increment openc for pushed regions, then run feasibility checks
        for r in range(s_rsp[depth] - 1, rsp):
            for i in range(rstart[r], rstart[r] + rlen[r]):
                openc[rbuf[i]] += 1
        for i in range(bs, bs + k):
            z = rbuf[i]
            if openc[z] == 0:
                if deg_v[z] < d1 or (z == 1 and deg_v[z] != d1):
                    ok = False
        if m > max_edges or deg_v[1] > d1:
            ok = False
        if deficit > 2 * (max_edges - m):
            ok = False

        if ok and rsp == 0:
            if used == n:
                stamp += 1
                clen = _leaf_code(
                    n, fverts, depth + 2, fsz,
                    succ, succ_stamp, stamp,
                    cdeg, cstart, cflat, corigin, crev, dart_id,
                    cbest, ccand, clabels, centry, cqueue,
                )
                if clen > 0:
                    h = np.int64(-3750763034362895579)  # FNV-1a 64 offset
                    for i in range(clen):
                        h = np.int64(h ^ np.int64(cbest[i]))
                        h = np.int64(h * np.int64(1099511628211))
                    slot = h & mask
                    idx = table[slot]
                    found = False
                    while idx >= 0:
                        same = True
                        off = idx * code_len
                        for i in range(clen):
                            if out_codes[off + i] != cbest[i]:
                                same = False
                                break
                        if same:
                            found = True
                            break
                        idx = chain[idx]
                    if not found:
                        if n_classes >= max_classes:
                            return -1
                        off = n_classes * code_len
                        for i in range(clen):
                            out_codes[off + i] = cbest[i]
                        fo = n_classes * (total_faces * fsz)
                        for i in range(total_faces * fsz):
                            out_faces[fo + i] = fverts[i]
                        chain[n_classes] = table[slot]
                        table[slot] = n_classes
                        n_classes += 1
            ok = False  # leaf handled; fall through to undo

        if ok:
            depth += 1
            gen(depth, rsp, used)
        else:
            # undo this application in place
            for r in range(s_rsp[depth] - 1, rsp):
                for i in range(rstart[r], rstart[r] + rlen[r]):
                    openc[rbuf[i]] -= 1
            rsp = s_rsp[depth]
            rtop = s_rtop[depth]
            rstart[rsp - 1] = s_topstart[depth]
            rlen[rsp - 1] = s_toplen[depth]
            for i in range(rstart[rsp - 1], rstart[rsp - 1] + rlen[rsp - 1]):
                openc[rbuf[i]] += 1
            used = s_used[depth]
            for e in range(s_nedges[depth]):
                a = s_edges[depth * 6 + 2 * e]
                b = s_edges[depth * 6 + 2 * e + 1]
                adj[a] &= ~(np.int64(1) << b)
                adj[b] &= ~(np.int64(1) << a)
                deg_v[a] -= 1
                deg_v[b] -= 1
            m = s_m[depth]
            deficit = s_deficit[depth]

    return n_classes


def grow_classes(n: int, d1: int, quad: bool, max_classes: int = 1 << 16):
    """Run the kernel; returns a list of face tuples, one per class."""
    fsz = 4 if quad else 3
    total_faces = (n - 2) if quad else (2 * n - 4)
    max_edges = (2 * n - 4) if quad else (3 * n - 6)
    code_len = n + 2 * max_edges
    while True:
        out_codes = np.zeros(max_classes * code_len, np.int32)
        out_faces = np.zeros(max_classes * total_faces * fsz, np.int32)
        table = np.full(1 << 20, _EMPTY, np.int64)
        chain = np.full(max_classes, _EMPTY, np.int64)
        count = _grow_kernel(n, d1, quad, out_codes, out_faces, max_classes, table, chain)
        if count >= 0:
            break
        max_classes *= 4
    result = []
    for c in range(count):
        fo = c * total_faces * fsz
        faces = tuple(
            tuple(int(out_faces[fo + f * fsz + i]) for i in range(fsz))
            for f in range(total_faces)
        )
        result.append(faces)
    return result
