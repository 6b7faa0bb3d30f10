"""Rainbow-pattern detection in graph systems.

A system contains a rainbow copy of a pattern F when some injective vertex
embedding of F admits an assignment of its edges to pairwise-distinct member
graphs, each containing its assigned edge.  For a fixed embedding that is a
bipartite matching question between pattern edges and member indices, solved
here with plain augmenting paths (sides are at most C(6,2) and k).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ResourceLimitError
from .model import Edge, GraphSystem, PatternGraph, normalize_edge


@dataclass(frozen=True)
class RainbowCertificate:
    """Witness for a rainbow copy: vertex embedding plus edge-to-member assignment.

    vertex_map[i] is the image of pattern vertex i+1; assignment[j] is the
    1-based member index carrying the j-th pattern edge (indices pairwise
    distinct).
    """

    vertex_map: tuple[int, ...]
    assignment: tuple[int, ...]

    def mapped_edges(self, pattern: PatternGraph) -> list[Edge]:
        return [
            normalize_edge(self.vertex_map[u - 1], self.vertex_map[v - 1])
            for u, v in pattern.edges
        ]

    def is_valid_for(self, system: GraphSystem, pattern: PatternGraph) -> bool:
        """Independent re-check: injectivity plus membership of every edge."""
        if len(set(self.vertex_map)) != pattern.p:
            return False
        if len(set(self.assignment)) != len(pattern.edges):
            return False
        if not all(1 <= i <= system.k for i in self.assignment):
            return False
        for e, i in zip(self.mapped_edges(pattern), self.assignment):
            if e not in system.members[i - 1].edges:
                return False
        return True


def _augment(j: int, adj: list[int], owner: dict[int, int], seen: set[int]) -> bool:
    mask = adj[j] >> 1
    i = 1
    while mask:
        if mask & 1 and i not in seen:
            seen.add(i)
            if i not in owner or _augment(owner[i], adj, owner, seen):
                owner[i] = j
                return True
        mask >>= 1
        i += 1
    return False


def _max_matching(adj: list[int]) -> dict[int, int] | None:
    """Matching saturating all left vertices, as {member index: edge position}.

    adj[j] is a bitmask over 1-based member indices usable by pattern edge j.
    Returns None when some edge cannot be matched.
    """
    owner: dict[int, int] = {}
    for j in range(len(adj)):
        if not _augment(j, adj, owner, set()):
            return None
    return owner


def _edge_masks(system: GraphSystem, mapped: list[Edge]) -> list[int]:
    masks = []
    for e in mapped:
        m = 0
        for i, g in enumerate(system.members):
            if e in g.edges:
                m |= 1 << i
        masks.append(m << 1)  # member indices are 1-based in the bitmask
    return masks


def _lex_min_assignment(adj: list[int]) -> tuple[int, ...] | None:
    """Lexicographically smallest saturating assignment (i_1, ..., i_m), if any."""
    m = len(adj)
    if _max_matching(adj) is None:
        return None
    chosen: list[int] = []
    used = 0
    for j in range(m):
        mask = adj[j] & ~used
        i = 1
        placed = False
        while mask >> i:
            if (mask >> i) & 1:
                rest = [adj[t] & ~(used | (1 << i)) for t in range(j + 1, m)]
                if _max_matching(rest) is not None:
                    chosen.append(i)
                    used |= 1 << i
                    placed = True
                    break
            i += 1
        if not placed:  # unreachable: feasibility was checked up front
            return None
    return tuple(chosen)


def _embedding_images(system: GraphSystem, pattern: PatternGraph):
    """Yield injective vertex maps, grouped by lexicographically increasing image set.

    Clique patterns need one representative map per vertex subset; general
    patterns get every bijection onto the subset, pre-filtered on the union
    graph.
    """
    n = system.n
    union = system.union_graph().edges
    for subset in combinations(range(1, n + 1), pattern.p):
        if pattern.is_clique():
            if all(e in union for e in combinations(subset, 2)):
                yield subset
        else:
            for image in permutations(subset):
                mapped = (
                    normalize_edge(image[u - 1], image[v - 1]) for u, v in pattern.edges
                )
                if all(e in union for e in mapped):
                    yield image


def find_rainbow(system: GraphSystem, pattern: PatternGraph) -> RainbowCertificate | None:
    """First rainbow copy in deterministic order, or None if the system is free.

    Ties break toward the lexicographically smallest vertex set, then the
    smallest feasible member-index assignment.
    """
    m = len(pattern.edges)
    if pattern.p > system.n or m > system.k:
        return None  # vacuously rainbow-free
    for image in _embedding_images(system, pattern):
        mapped = [
            normalize_edge(image[u - 1], image[v - 1]) for u, v in pattern.edges
        ]
        assignment = _lex_min_assignment(_edge_masks(system, mapped))
        if assignment is not None:
            return RainbowCertificate(vertex_map=tuple(image), assignment=assignment)
    return None


def is_rainbow_free(system: GraphSystem, pattern: PatternGraph) -> bool:
    return find_rainbow(system, pattern) is None


def count_rainbow_embeddings(system: GraphSystem, pattern: PatternGraph) -> int:
    """Number of labeled injective embeddings admitting a rainbow assignment.

    Raw count: automorphic images of the same copy are counted separately.
    Guarded to n <= 10 and patterns on at most 5 vertices.
    """
    if system.n > 10 or pattern.p > 5:
        raise ResourceLimitError(
            f"embedding count guarded to n <= 10, pattern <= 5 vertices "
            f"(got n={system.n}, p={pattern.p})"
        )
    count = 0
    for image in permutations(range(1, system.n + 1), pattern.p):
        mapped = [normalize_edge(image[u - 1], image[v - 1]) for u, v in pattern.edges]
        if _max_matching(_edge_masks(system, mapped)) is not None:
            count += 1
    return count
