"""Core graph types, Turan arithmetic, and the two extremal constructions.

Vertices are 1-based integers in [n]; an edge is a sorted pair (u, v) with
u < v.  A GraphSystem is an ordered list of k simple graphs on the same
vertex set (order is kept for file fidelity; multiset-semantic operations
must not depend on it).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import InvalidParameterError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidParameterError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def all_pairs(n: int) -> list[Edge]:
    """Every pair of [n] in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class SimpleGraph:
    """A graph on vertex set [n], stored as a frozenset of sorted pairs."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise InvalidParameterError(f"edge ({u},{v}) outside [1,{self.n}]")

    @staticmethod
    def from_edges(n: int, edges) -> SimpleGraph:
        return SimpleGraph(n, frozenset(normalize_edge(u, v) for u, v in edges))

    @staticmethod
    def empty(n: int) -> SimpleGraph:
        return SimpleGraph(n, frozenset())

    @staticmethod
    def complete(n: int) -> SimpleGraph:
        return SimpleGraph(n, frozenset(all_pairs(n)))

    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, perm: dict[int, int]) -> SimpleGraph:
        """Apply a vertex permutation (a bijection of [n])."""
        return SimpleGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class GraphSystem:
    """An ordered multiset of k graphs on a common vertex set [n]."""

    n: int
    members: tuple[SimpleGraph, ...]

    def __post_init__(self):
        for g in self.members:
            if g.n != self.n:
                raise InvalidParameterError(
                    f"member on {g.n} vertices in a system on {self.n}"
                )

    @property
    def k(self) -> int:
        return len(self.members)

    def total_size(self) -> int:
        return sum(g.size() for g in self.members)

    def union_graph(self) -> SimpleGraph:
        edges: set[Edge] = set()
        for g in self.members:
            edges |= g.edges
        return SimpleGraph(self.n, frozenset(edges))

    def multiplicity(self, u: int, v: int) -> int:
        e = normalize_edge(u, v)
        return sum(1 for g in self.members if e in g.edges)

    def permuted_members(self, order) -> GraphSystem:
        return GraphSystem(self.n, tuple(self.members[i] for i in order))

    def relabel(self, perm: dict[int, int]) -> GraphSystem:
        return GraphSystem(self.n, tuple(g.relabel(perm) for g in self.members))


@dataclass(frozen=True)
class PatternGraph:
    """A small pattern with a fixed edge order (used for certificate reporting)."""

    p: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.p < 1:
            raise InvalidParameterError("pattern needs at least one vertex")
        if len(self.edges) < 1:
            raise InvalidParameterError("pattern needs at least one edge")
        seen = set()
        for u, v in self.edges:
            if not (1 <= u < v <= self.p):
                raise InvalidParameterError(f"pattern edge ({u},{v}) outside [1,{self.p}]")
            if (u, v) in seen:
                raise InvalidParameterError(f"duplicate pattern edge ({u},{v})")
            seen.add((u, v))

    @staticmethod
    def clique(r: int) -> PatternGraph:
        if r < 2:
            raise InvalidParameterError("clique pattern needs r >= 2")
        return PatternGraph(r, tuple(combinations(range(1, r + 1), 2)))

    def is_clique(self) -> bool:
        return len(self.edges) == comb(self.p, 2)


def turan_parts(n: int, parts: int) -> list[list[int]]:
    """Round-robin part assignment: vertex v joins part ((v-1) mod parts) + 1."""
    if parts < 1 or n < 1:
        raise InvalidParameterError(f"need n >= 1 and parts >= 1, got n={n} parts={parts}")
    out: list[list[int]] = [[] for _ in range(parts)]
    for v in range(1, n + 1):
        out[(v - 1) % parts].append(v)
    return out


def turan_graph(n: int, parts: int) -> SimpleGraph:
    """Complete multipartite graph on [n] with part sizes as equal as possible."""
    assignment = turan_parts(n, parts)
    part_of = {}
    for i, block in enumerate(assignment):
        for v in block:
            part_of[v] = i
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if part_of[u] != part_of[v]]
    return SimpleGraph.from_edges(n, edges)


def turan_number(n: int, parts: int) -> int:
    """Edge count of the Turan graph, via part sizes (no edge enumeration)."""
    if parts < 1 or n < 1:
        raise InvalidParameterError(f"need n >= 1 and parts >= 1, got n={n} parts={parts}")
    q, rem = divmod(n, parts)
    return comb(n, 2) - rem * comb(q + 1, 2) - (parts - rem) * comb(q, 2)


@dataclass(frozen=True)
class Thresholds:
    """The two k-regimes for a given (n, r).

    k2 is the smallest k at which the all-Turan construction overtakes the
    clique construction; k1 = k2 - 1 is the largest k where the clique
    construction still dominates.
    """

    r: int
    n: int
    k1: int
    k2: int
    turan: int
    clique_bound: int = field(repr=False)


def thresholds(n: int, r: int) -> Thresholds:
    if r < 3 or n < r - 1:
        raise InvalidParameterError(f"need n >= r-1 >= 2, got n={n} r={r}")
    t = turan_number(n, r - 1)
    clique_bound = (comb(r, 2) - 1) * comb(n, 2)
    k2 = -(-clique_bound // t)  # ceil division; t > 0 since n >= 2, r-1 >= 2
    # consistency: above the clique order, k2 clears C(r,2) strictly (r >= 4)
    assert not (r >= 4 and n >= r + 1) or k2 >= comb(r, 2) + 1
    return Thresholds(r=r, n=n, k1=k2 - 1, k2=k2, turan=t, clique_bound=clique_bound)


def conjectured_bound(n: int, r: int, k: int) -> int:
    """max{(C(r,2)-1)*C(n,2), k*t_{r-1}(n)}, the conjectured value of the optimum.

    Accepts k >= C(r,2)-1: at n = r the lower regime k1 equals C(r,2)-1 and the
    formula is still the meaningful reference value there.
    """
    if r < 3 or n < r - 1:
        raise InvalidParameterError(f"need n >= r-1 >= 2, got n={n} r={r}")
    if k < comb(r, 2) - 1:
        raise InvalidParameterError(f"need k >= C(r,2)-1 = {comb(r, 2) - 1}, got k={k}")
    return max((comb(r, 2) - 1) * comb(n, 2), k * turan_number(n, r - 1))


def gen_turan_system(n: int, r: int, k: int) -> GraphSystem:
    """k copies of the (r-1)-partite Turan graph; rainbow-K_r-free."""
    if r < 2 or n < r - 1 or k < 1:
        raise InvalidParameterError(f"need n >= r-1 >= 1 and k >= 1, got n={n} r={r} k={k}")
    g = turan_graph(n, r - 1)
    return GraphSystem(n, (g,) * k)


def gen_clique_system(n: int, r: int, k: int) -> GraphSystem:
    """C(r,2)-1 copies of the complete graph followed by empty graphs; rainbow-K_r-free."""
    h = comb(r, 2)
    if r < 2 or n < 1:
        raise InvalidParameterError(f"need r >= 2 and n >= 1, got n={n} r={r}")
    if k < h - 1:
        raise InvalidParameterError(f"need k >= C(r,2)-1 = {h - 1}, got k={k}")
    full = SimpleGraph.complete(n)
    empty = SimpleGraph.empty(n)
    return GraphSystem(n, (full,) * (h - 1) + (empty,) * (k - h + 1))
