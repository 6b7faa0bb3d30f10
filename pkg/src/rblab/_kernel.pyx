# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel.

Node-for-node equivalent to rblab._kernel_py (same exploration order, pruning
decisions, counters, and results); only faster.  See that module for the
algorithm commentary.
"""

from time import monotonic

import numpy as np

from ._tables import clique_tables, star_prev

BACKEND = "compiled"


cdef long long _max_feasible(long long* others, int m, long long k,
                             unsigned char* pref, unsigned char* suf) noexcept:
    cdef int p
    cdef long long w
    pref[0] = 1
    for p in range(1, m + 1):
        pref[p] = pref[p - 1] and others[p - 1] >= p
    suf[m] = 1
    for p in range(m - 1, -1, -1):
        suf[p] = suf[p + 1] and others[p] >= p + 2
    p = m
    w = k
    while w >= 0:
        while p > 0 and others[p - 1] > w:
            p -= 1
        if not (pref[p] and w >= p + 1 and suf[p]):
            return w
        w -= 1
    return -1  # unreachable: w = 0 never dominates


def run_bnb(int n, int r, long long k, long long incumbent,
            long long max_nodes=0, double time_limit=0.0, int symmetry=1):
    """Exact DFS over weightings in colex edge order; see rblab._kernel_py."""
    cdef int edge_count = n * (n - 1) // 2
    rows, starts_l, counts_l = clique_tables(n, r)
    cdef int m = r * (r - 1) // 2 - 1  # clique edges other than the closing one

    flat_np = np.asarray(
        [e for row in rows for e in row] if rows else [], dtype=np.int64
    )
    starts_np = np.asarray(starts_l, dtype=np.int64)
    counts_np = np.asarray(counts_l, dtype=np.int64)
    sprev_np = np.asarray(star_prev(n, symmetry), dtype=np.int64)
    w_np = np.zeros(edge_count, dtype=np.int64)
    wcur_np = np.zeros(edge_count, dtype=np.int64)
    partial_np = np.zeros(edge_count + 1, dtype=np.int64)
    best_np = np.zeros(edge_count, dtype=np.int64)
    others_np = np.zeros(m + 1, dtype=np.int64)
    pref_np = np.zeros(m + 2, dtype=np.uint8)
    suf_np = np.zeros(m + 2, dtype=np.uint8)

    cdef long long[::1] flat = flat_np
    cdef long long[::1] starts = starts_np
    cdef long long[::1] counts = counts_np
    cdef long long[::1] sprev = sprev_np
    cdef long long[::1] w = w_np
    cdef long long[::1] wcur = wcur_np
    cdef long long[::1] partial = partial_np
    cdef long long[::1] best_w = best_np
    cdef long long[::1] others = others_np
    cdef unsigned char[::1] pref = pref_np
    cdef unsigned char[::1] suf = suf_np

    cdef long long best = incumbent
    cdef long long explored = 0, pruned = 0
    cdef bint complete = True, improved = False
    cdef int level, i, j, sp
    cdef long long wv, cap, base, t, total, val
    cdef long long ci, row0
    cdef double t0 = monotonic() if time_limit > 0 else 0.0

    # entry cap for level 0 (no cliques close before edge_count >= 3 anyway)
    level = 0
    cap = k
    sp = <int> sprev[0]
    if sp >= 0 and w[sp] < cap:
        cap = w[sp]
    wcur[0] = cap

    while level >= 0:
        if max_nodes and explored >= max_nodes:
            complete = False
            break
        if time_limit > 0 and (explored & 0xFFFF) == 0 and monotonic() - t0 > time_limit:
            complete = False
            break
        wv = wcur[level]
        if wv < 0:
            level -= 1
            if level >= 0:
                wcur[level] -= 1
            continue
        if partial[level] + wv + k * (edge_count - level - 1) <= best:
            pruned += 1
            level -= 1
            if level >= 0:
                wcur[level] -= 1
            continue
        w[level] = wv
        explored += 1
        partial[level + 1] = partial[level] + wv
        if level == edge_count - 1:
            total = partial[edge_count]
            if total > best:
                best = total
                improved = True
                for i in range(edge_count):
                    best_w[i] = w[i]
            wcur[level] -= 1
            continue
        level += 1

        # entry cap: symmetry bound, then clique feasibility caps
        cap = k
        sp = <int> sprev[level]
        if sp >= 0 and w[sp] < cap:
            cap = w[sp]
        base = cap
        for ci in range(starts[level], starts[level] + counts[level]):
            row0 = ci * m
            # insertion sort the m already-assigned clique weights
            for i in range(m):
                val = w[flat[row0 + i]]
                j = i
                while j > 0 and others[j - 1] > val:
                    others[j] = others[j - 1]
                    j -= 1
                others[j] = val
            t = _max_feasible(&others[0], m, k, &pref[0], &suf[0])
            if t < cap:
                cap = t
        if cap < base:
            pruned += 1
        wcur[level] = cap

    result_w = [int(best_np[i]) for i in range(edge_count)] if improved else None
    return int(best), result_w, int(explored), int(pruned), bool(complete)
