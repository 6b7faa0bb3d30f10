from math import comb

import pytest

from rblab.errors import InvalidParameterError
from rblab.model import (
    SimpleGraph,
    conjectured_bound,
    gen_clique_system,
    gen_turan_system,
    thresholds,
    turan_graph,
    turan_number,
    turan_parts,
)


@pytest.mark.parametrize(
    "n,parts,edges",
    [(4, 2, 4), (5, 3, 8), (3, 3, 3), (4, 3, 5), (6, 1, 0), (3, 7, 3)],
)
def test_turan_graph_edge_counts(n, parts, edges):
    assert turan_graph(n, parts).size() == edges
    assert turan_number(n, parts) == edges


def test_turan_number_matches_enumeration():
    # oracle: literal edge count of the constructed multipartite graph
    for n in range(1, 35):
        for parts in range(1, n + 3):
            assert turan_number(n, parts) == turan_graph(n, parts).size()


def test_turan_parts_balanced():
    for n in range(1, 60):
        for parts in range(1, n + 2):
            sizes = [len(block) for block in turan_parts(n, parts)]
            assert sum(sizes) == n
            assert max(sizes) - min(sizes) <= 1


def test_turan_graph_is_multipartite():
    g = turan_graph(5, 3)
    blocks = turan_parts(5, 3)
    for block in blocks:
        for i, u in enumerate(block):
            for v in block[i + 1 :]:
                assert (u, v) not in g.edges


@pytest.mark.parametrize("n,parts", [(0, 2), (3, 0), (-1, 1)])
def test_turan_invalid(n, parts):
    with pytest.raises(InvalidParameterError):
        turan_number(n, parts)
    with pytest.raises(InvalidParameterError):
        turan_graph(n, parts)


def test_thresholds_examples():
    th = thresholds(4, 4)
    assert (th.k1, th.k2) == (5, 6)
    assert thresholds(5, 4).k2 == 7 == comb(4, 2) + 1
    th = thresholds(3, 3)
    assert th.turan == 2
    assert th.clique_bound == 6
    assert th.k2 == 3


def test_thresholds_bracket_invariant():
    for r in range(3, 9):
        for n in range(r - 1, 60):
            th = thresholds(n, r)
            assert th.k2 * th.turan >= th.clique_bound > th.k1 * th.turan


def test_thresholds_invalid():
    with pytest.raises(InvalidParameterError):
        thresholds(2, 4)
    with pytest.raises(InvalidParameterError):
        thresholds(5, 2)


@pytest.mark.parametrize(
    "n,r,k,value",
    [(5, 4, 7, 56), (5, 4, 6, 50), (3, 3, 3, 6), (4, 4, 5, 30), (4, 4, 6, 30)],
)
def test_conjectured_bound(n, r, k, value):
    assert conjectured_bound(n, r, k) == value


def test_conjectured_bound_invalid():
    with pytest.raises(InvalidParameterError):
        conjectured_bound(5, 4, 4)  # below C(r,2)-1
    with pytest.raises(InvalidParameterError):
        conjectured_bound(2, 4, 7)


def test_gen_turan_system():
    sys34 = gen_turan_system(4, 3, 3)
    assert sys34.k == 3 and sys34.total_size() == 12
    assert gen_turan_system(3, 3, 3).total_size() == 6
    assert gen_turan_system(7, 2, 5).total_size() == 0
    with pytest.raises(InvalidParameterError):
        gen_turan_system(4, 3, 0)


def test_gen_clique_system():
    s = gen_clique_system(4, 3, 3)
    assert s.total_size() == 12
    assert [g.size() for g in s.members] == [6, 6, 0]
    assert gen_clique_system(5, 4, 6).total_size() == 50
    assert gen_clique_system(2, 3, 3).total_size() == 2
    with pytest.raises(InvalidParameterError):
        gen_clique_system(4, 4, 4)  # k below C(r,2)-1


def test_simple_graph_validation():
    with pytest.raises(InvalidParameterError):
        SimpleGraph(3, frozenset({(1, 4)}))
    with pytest.raises(InvalidParameterError):
        SimpleGraph.from_edges(3, [(2, 2)])
    g = SimpleGraph.from_edges(3, [(2, 1), (3, 1)])
    assert g.edges == frozenset({(1, 2), (1, 3)})


def test_system_total_and_union():
    from conftest import make_system

    s = make_system(3, [(1, 2)], [(1, 2), (2, 3)], [])
    assert s.k == 3
    assert s.total_size() == 3
    assert s.union_graph().edges == frozenset({(1, 2), (2, 3)})
    assert s.multiplicity(1, 2) == 2 and s.multiplicity(1, 3) == 0
