from __future__ import annotations

from rblab.model import GraphSystem, SimpleGraph


def make_system(n: int, *edge_lists) -> GraphSystem:
    """System from per-member edge lists, e.g. make_system(3, [(1,2)], [])."""
    return GraphSystem(
        n, tuple(SimpleGraph.from_edges(n, edges) for edges in edge_lists)
    )
