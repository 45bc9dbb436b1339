"""Compiled branch-and-bound over spanning trees / two-component forests.

The state is a partial forest T (edge state 1) and a forbidden set G' (edge
state 2).  At every node the vertex v with the smallest nonzero number of
undecided incident edges is chosen, then its undecided neighbour w with the
same minimal quantity; the edge vw is first forbidden, then added.

Invariants kept by propagation: every undecided edge joins two different
forest components, and in split mode no undecided edge joins the component of
``sep_x`` to the component of ``sep_y``.
"""

import numpy as np
from numba import njit

DEAD = 0
CONTINUE = 1
LEAF_OK = 2
LEAF_BAD = 3

INT64_MAX = np.iinfo(np.int64).max


@njit(cache=True)
def _find(parent, v):
    while parent[v] != v:
        v = parent[v]
    return v


@njit(cache=True)
def _status(n, m, eu, ev, inc_ptr, inc_edge, inc_other, est, dT, dF, deg,
            exempt, lo, sep_x, sep_y, hist_mode, n_tree, target, queue, seen):
    if n_tree == target:
        for v in range(n):
            d = dT[v]
            if d < lo[v]:
                return LEAF_BAD
            if hist_mode and d == 2 and not exempt[v]:
                return LEAF_BAD
        return LEAF_OK
    for v in range(n):
        av = deg[v] - dF[v] - dT[v]
        if dT[v] + av < lo[v]:
            return DEAD
        if hist_mode and av == 0 and dT[v] == 2 and not exempt[v]:
            return DEAD
    # every vertex must still reach the root(s) through non-forbidden edges
    for v in range(n):
        seen[v] = 0
    head = 0
    tail = 0
    if sep_x >= 0:
        seen[sep_x] = 1
        queue[tail] = sep_x
        tail += 1
        seen[sep_y] = 1
        queue[tail] = sep_y
        tail += 1
    else:
        seen[0] = 1
        queue[tail] = 0
        tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(inc_ptr[u], inc_ptr[u + 1]):
            if est[inc_edge[k]] != 2:
                w = inc_other[k]
                if not seen[w]:
                    seen[w] = 1
                    queue[tail] = w
                    tail += 1
    if tail < n:
        return DEAD
    return CONTINUE


@njit(cache=True)
def _choose(n, inc_ptr, inc_edge, inc_other, est, dT, dF, deg):
    best_v = -1
    best = 1 << 30
    for v in range(n):
        av = deg[v] - dF[v] - dT[v]
        if 0 < av < best:
            best = av
            best_v = v
    if best_v < 0:
        return -1
    best_e = -1
    best = 1 << 30
    for k in range(inc_ptr[best_v], inc_ptr[best_v + 1]):
        e = inc_edge[k]
        if est[e] == 0:
            w = inc_other[k]
            aw = deg[w] - dF[w] - dT[w]
            if aw < best:
                best = aw
                best_e = e
    return best_e


@njit(cache=True)
def search(n, eu, ev, inc_ptr, inc_edge, inc_other, exempt, lo, sep_x, sep_y,
           hist_mode, stop_after, rec, rec_limit):
    """Return ``(count, nodes, n_recorded)``.

    ``stop_after <= 0`` means no limit.  Recorded trees are written as rows
    of edge ids into ``rec`` (shape ``(rec_limit, target)``).
    """
    m = eu.shape[0]
    deg = np.zeros(n, np.int64)
    for v in range(n):
        deg[v] = inc_ptr[v + 1] - inc_ptr[v]
    dT = np.zeros(n, np.int64)
    dF = np.zeros(n, np.int64)
    est = np.zeros(m, np.int8)
    parent = np.arange(n)
    usize = np.ones(n, np.int64)
    log = np.empty(m + n + 1, np.int64)
    nlog = 0
    queue = np.empty(n, np.int64)
    seen = np.zeros(n, np.int8)
    fedge = np.empty(m + 1, np.int64)
    fphase = np.empty(m + 1, np.int64)
    fmark = np.empty(m + 1, np.int64)
    target = n - 1 if sep_x < 0 else n - 2
    count = 0
    nodes = 1
    nrec = 0
    n_tree = 0

    # split mode: x and y may never be joined
    if sep_x >= 0:
        for e in range(m):
            if (eu[e] == sep_x and ev[e] == sep_y) or (eu[e] == sep_y and ev[e] == sep_x):
                est[e] = 2
                dF[eu[e]] += 1
                dF[ev[e]] += 1
                log[nlog] = e
                nlog += 1

    st = _status(n, m, eu, ev, inc_ptr, inc_edge, inc_other, est, dT, dF, deg,
                 exempt, lo, sep_x, sep_y, hist_mode, n_tree, target, queue, seen)
    if st == LEAF_OK:
        return 1, nodes, 0
    if st != CONTINUE:
        return 0, nodes, 0

    depth = 0
    fedge[0] = _choose(n, inc_ptr, inc_edge, inc_other, est, dT, dF, deg)
    fphase[0] = 0
    fmark[0] = nlog
    while depth >= 0:
        e = fedge[depth]
        ph = fphase[depth]
        # undo back to this frame's mark
        while nlog > fmark[depth]:
            nlog -= 1
            x = log[nlog]
            if x >= 0:
                if est[x] == 1:
                    dT[eu[x]] -= 1
                    dT[ev[x]] -= 1
                    n_tree -= 1
                else:
                    dF[eu[x]] -= 1
                    dF[ev[x]] -= 1
                est[x] = 0
            else:
                r = -x - 1
                p = parent[r]
                usize[p] -= usize[r]
                parent[r] = r
        if ph == 2 or e < 0:
            depth -= 1
            continue
        fphase[depth] = ph + 1
        a = eu[e]
        b = ev[e]
        if ph == 0:
            est[e] = 2
            dF[a] += 1
            dF[b] += 1
            log[nlog] = e
            nlog += 1
        else:
            est[e] = 1
            dT[a] += 1
            dT[b] += 1
            n_tree += 1
            log[nlog] = e
            nlog += 1
            ra = _find(parent, a)
            rb = _find(parent, b)
            if usize[ra] < usize[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            usize[ra] += usize[rb]
            log[nlog] = -rb - 1
            nlog += 1
            if sep_x >= 0:
                rx = _find(parent, sep_x)
                ry = _find(parent, sep_y)
            else:
                rx = -1
                ry = -1
            for f in range(m):
                if est[f] == 0:
                    fu = _find(parent, eu[f])
                    fv = _find(parent, ev[f])
                    if fu == fv or (fu == rx and fv == ry) or (fu == ry and fv == rx):
                        est[f] = 2
                        dF[eu[f]] += 1
                        dF[ev[f]] += 1
                        log[nlog] = f
                        nlog += 1
        nodes += 1
        st = _status(n, m, eu, ev, inc_ptr, inc_edge, inc_other, est, dT, dF, deg,
                     exempt, lo, sep_x, sep_y, hist_mode, n_tree, target, queue, seen)
        if st == CONTINUE:
            depth += 1
            fedge[depth] = _choose(n, inc_ptr, inc_edge, inc_other, est, dT, dF, deg)
            fphase[depth] = 0
            fmark[depth] = nlog
        elif st == LEAF_OK:
            if count == INT64_MAX:
                raise OverflowError("tree count overflow")
            count += 1
            if nrec < rec_limit:
                j = 0
                for f in range(m):
                    if est[f] == 1:
                        rec[nrec, j] = f
                        j += 1
                nrec += 1
            if stop_after > 0 and count >= stop_after:
                return count, nodes, nrec
    return count, nodes, nrec
