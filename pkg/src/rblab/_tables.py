"""Index tables shared by the compiled and pure branch-and-bound kernels.

The kernels assign edge weights in colex order ((1,2), (1,3), (2,3), (1,4),
...), which completes the cliques on each vertex prefix as early as possible;
every r-clique is registered at its colex-last edge, where its feasibility
cap can be evaluated with all other clique edges already assigned.
"""

from __future__ import annotations

from itertools import combinations
from math import comb


def colex_index(u: int, v: int) -> int:
    """Position of edge (u, v), u < v, in colex order."""
    return (v - 1) * (v - 2) // 2 + (u - 1)


def colex_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(2, n + 1) for u in range(1, v)]


def clique_tables(n: int, r: int):
    """Cliques grouped by closing edge.

    Returns (rows, starts, counts): rows[i] is the tuple of the i-th clique's
    edge positions other than its closing edge; rows[starts[e] : starts[e] +
    counts[e]] lists the cliques closed by edge position e.
    """
    edge_count = comb(n, 2)
    per_edge: list[list[tuple[int, ...]]] = [[] for _ in range(edge_count)]
    for subset in combinations(range(1, n + 1), r):
        edges = sorted(colex_index(u, v) for u, v in combinations(subset, 2))
        per_edge[edges[-1]].append(tuple(edges[:-1]))
    rows: list[tuple[int, ...]] = []
    starts: list[int] = []
    counts: list[int] = []
    for e in range(edge_count):
        starts.append(len(rows))
        counts.append(len(per_edge[e]))
        rows.extend(per_edge[e])
    return rows, starts, counts


def star_prev(n: int, symmetry: int) -> list[int]:
    """Symmetry cap: prev[e] is the star edge whose weight caps edge e, or -1.

    Level 1 orders vertex 1's star nonincreasingly along (1,2), ..., (1,n);
    every weighting has a relabeling in that form, so restricting the search
    this way preserves the optimum.  Level 0 imposes nothing.
    """
    prev = [-1] * comb(n, 2)
    if symmetry >= 1:
        for j in range(3, n + 1):
            prev[colex_index(1, j)] = colex_index(1, j - 1)
    return prev
