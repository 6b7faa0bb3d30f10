"""Nesting transform and the equivalence with edge-weighted complete graphs.

Any system can be replaced by a nested one (H_k contained in ... contained
in H_1) with the same union and total size, by letting H_i collect the edges
of multiplicity at least i.  A nested system is the same data as a weighting
of the complete graph by values in {0..k}: the weight of an edge is the
number of members containing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ContractViolationError, InvalidParameterError
from .model import Edge, GraphSystem, SimpleGraph, all_pairs, normalize_edge


def is_nested(system: GraphSystem) -> bool:
    return all(
        system.members[i + 1].edges <= system.members[i].edges
        for i in range(system.k - 1)
    )


@dataclass(frozen=True)
class NestedSystem(GraphSystem):
    """A GraphSystem whose members form a decreasing chain of edge sets."""

    def __post_init__(self):
        super().__post_init__()
        if not is_nested(self):
            raise ContractViolationError("members are not nested")


@dataclass(frozen=True)
class WeightedGraph:
    """Complete graph on [n] with integer edge weights in {0..k}.

    Weights are stored densely, in lexicographic pair order (1,2), (1,3), ...,
    (1,n), (2,3), ...; the ceiling k is carried explicitly even when no edge
    attains it.
    """

    n: int
    k: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.k < 0:
            raise InvalidParameterError(f"need n >= 1 and k >= 0, got n={self.n} k={self.k}")
        if len(self.weights) != comb(self.n, 2):
            raise InvalidParameterError(
                f"expected {comb(self.n, 2)} weights, got {len(self.weights)}"
            )
        for w in self.weights:
            if not 0 <= w <= self.k:
                raise InvalidParameterError(f"weight {w} outside [0, {self.k}]")

    @staticmethod
    def pair_index(n: int, u: int, v: int) -> int:
        u, v = normalize_edge(u, v)
        if u < 1 or v > n:
            raise InvalidParameterError(f"pair ({u},{v}) outside [1,{n}]")
        # lexicographic rank of (u, v) among all pairs of [n]
        return comb(n, 2) - comb(n - u + 1, 2) + (v - u - 1)

    @staticmethod
    def from_map(n: int, k: int, weight_of: dict[Edge, int]) -> WeightedGraph:
        weights = [0] * comb(n, 2)
        for (u, v), w in weight_of.items():
            weights[WeightedGraph.pair_index(n, u, v)] = w
        return WeightedGraph(n, k, tuple(weights))

    @staticmethod
    def constant(n: int, k: int, w: int) -> WeightedGraph:
        return WeightedGraph(n, k, (w,) * comb(n, 2))

    @staticmethod
    def on_support(n: int, k: int, support: SimpleGraph, w: int) -> WeightedGraph:
        """Weight w on the edges of `support`, zero elsewhere."""
        return WeightedGraph.from_map(n, k, {e: w for e in support.edges})

    def weight(self, u: int, v: int) -> int:
        return self.weights[self.pair_index(self.n, u, v)]

    def total_weight(self) -> int:
        return sum(self.weights)

    def pairs(self):
        """(u, v, w) triples in lexicographic pair order."""
        return [(u, v, self.weights[i]) for i, (u, v) in enumerate(all_pairs(self.n))]

    def with_ceiling(self, k: int) -> WeightedGraph:
        return WeightedGraph(self.n, k, self.weights)

    def restrict(self, vertices) -> WeightedGraph:
        """Induced weighting on a vertex subset, relabeled to [len(subset)]."""
        vs = sorted(vertices)
        rank = {v: i + 1 for i, v in enumerate(vs)}
        return WeightedGraph.from_map(
            len(vs),
            self.k,
            {
                (rank[u], rank[v]): self.weight(u, v)
                for i, u in enumerate(vs)
                for v in vs[i + 1 :]
            },
        )


def nest(system: GraphSystem) -> NestedSystem:
    """Multiplicity-threshold transform: member i keeps edges of multiplicity >= i.

    Preserves the union graph and the total size; rainbow-freeness preservation
    is asserted empirically by the test suite rather than assumed.
    """
    mult: dict[Edge, int] = {}
    for g in system.members:
        for e in g.edges:
            mult[e] = mult.get(e, 0) + 1
    members = tuple(
        SimpleGraph(system.n, frozenset(e for e, c in mult.items() if c >= i))
        for i in range(1, system.k + 1)
    )
    return NestedSystem(system.n, members)


def to_weighted(system: GraphSystem) -> WeightedGraph:
    """Weight every pair by the number of members containing it (input must be nested)."""
    if not is_nested(system):
        raise ContractViolationError("to_weighted requires a nested system")
    weights = {}
    for g in system.members:
        for e in g.edges:
            weights[e] = weights.get(e, 0) + 1
    return WeightedGraph.from_map(system.n, system.k, weights)


def from_weighted(wg: WeightedGraph) -> NestedSystem:
    """Threshold sets H_i = {e : w(e) >= i}; exact inverse of to_weighted."""
    members = tuple(
        SimpleGraph(wg.n, frozenset((u, v) for u, v, w in wg.pairs() if w >= i))
        for i in range(1, wg.k + 1)
    )
    return NestedSystem(wg.n, members)


def truncate(system: NestedSystem, k_new: int) -> NestedSystem:
    """Keep the first k_new members of a nested system.

    The dropped tail weighs at most (k - k_new)/k_new of the kept head, which
    is asserted (it holds for every nested system).
    """
    if not 1 <= k_new <= system.k:
        raise InvalidParameterError(f"need 1 <= k' <= {system.k}, got {k_new}")
    head = NestedSystem(system.n, system.members[:k_new])
    tail_size = sum(g.size() for g in system.members[k_new:])
    assert k_new * tail_size <= (system.k - k_new) * head.total_size()
    return head
