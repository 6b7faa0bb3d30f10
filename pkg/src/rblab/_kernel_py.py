"""Pure-Python branch-and-bound kernel (fallback for the compiled extension).

Node-for-node equivalent to the compiled kernel in rblab._kernel: identical
exploration order, pruning decisions, counters, and results.  The compiled
version exists purely for speed; this one keeps the package importable
without a C toolchain and anchors the parity tests.
"""

from __future__ import annotations

from time import monotonic

from ._tables import clique_tables, star_prev

BACKEND = "pure"


def _max_feasible(others: list[int], k: int) -> int:
    """Largest w in [0, k] whose insertion into the sorted list `others` does
    not produce a sequence pointwise dominating (1, 2, ..., len(others)+1).

    Always >= 0: a zero weight sits at the front of the merged sequence and
    breaks dominance at position 1.
    """
    m = len(others)
    pref = [True] * (m + 1)
    for p in range(1, m + 1):
        pref[p] = pref[p - 1] and others[p - 1] >= p
    suf = [True] * (m + 1)
    for p in range(m - 1, -1, -1):
        suf[p] = suf[p + 1] and others[p] >= p + 2
    p = m
    for w in range(k, -1, -1):
        while p > 0 and others[p - 1] > w:
            p -= 1
        if not (pref[p] and w >= p + 1 and suf[p]):
            return w
    return -1  # unreachable: w = 0 never dominates


def run_bnb(
    n: int,
    r: int,
    k: int,
    incumbent: int,
    max_nodes: int = 0,
    time_limit: float = 0.0,
    symmetry: int = 1,
):
    """Exact DFS over weightings in colex edge order.

    Returns (best, best_weights_or_None, nodes_explored, nodes_pruned,
    complete); best_weights is in colex edge order and is None when no
    assignment strictly beat the seeded incumbent.
    """
    edge_count = n * (n - 1) // 2
    rows, starts, counts = clique_tables(n, r)
    sprev = star_prev(n, symmetry)

    w = [0] * edge_count
    wcur = [0] * edge_count
    partial = [0] * (edge_count + 1)
    best = incumbent
    best_w = None
    explored = 0
    pruned = 0
    complete = True
    t0 = monotonic() if time_limit > 0 else 0.0

    def entry_cap(level: int) -> int:
        nonlocal pruned
        cap = k
        sp = sprev[level]
        if sp >= 0 and w[sp] < cap:
            cap = w[sp]
        base = cap
        for ci in range(starts[level], starts[level] + counts[level]):
            others = sorted(w[e] for e in rows[ci])
            t = _max_feasible(others, k)
            if t < cap:
                cap = t
        if cap < base:
            pruned += 1
        return cap

    level = 0
    wcur[0] = entry_cap(0)
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
                best_w = w.copy()
            wcur[level] -= 1
            continue
        level += 1
        wcur[level] = entry_cap(level)

    return best, best_w, explored, pruned, complete
