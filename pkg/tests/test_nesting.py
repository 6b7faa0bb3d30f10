from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_system
from rblab.errors import ContractViolationError, InvalidParameterError
from rblab.model import PatternGraph
from rblab.nesting import (
    NestedSystem,
    WeightedGraph,
    from_weighted,
    is_nested,
    nest,
    to_weighted,
    truncate,
)
from rblab.rainbow import is_rainbow_free
from rblab.sampling import random_system, random_weighted


def test_nest_examples():
    s = make_system(3, [], [(1, 2), (1, 3), (2, 3)], [])
    nested = nest(s)
    assert [g.size() for g in nested.members] == [3, 0, 0]

    s = make_system(3, [(1, 2)], [(1, 2), (1, 3)])
    nested = nest(s)
    assert nested.members[0].edges == frozenset({(1, 2), (1, 3)})
    assert nested.members[1].edges == frozenset({(1, 2)})


def test_nest_idempotent_on_nested():
    s = make_system(4, [(1, 2), (1, 3), (3, 4)], [(1, 2), (1, 3)], [(1, 2)])
    assert nest(s).members == nest(nest(s)).members


def test_nest_preserves_union_and_size():
    rng = Random(42)
    for _ in range(200):
        s = random_system(rng, rng.randint(2, 6), rng.randint(1, 6))
        nested = nest(s)
        assert is_nested(nested)
        assert nested.total_size() == s.total_size()
        assert nested.union_graph() == s.union_graph()


def test_nest_never_creates_rainbow():
    # the transform can only lose rainbow copies, never gain one
    rng = Random(4242)
    for _ in range(150):
        s = random_system(rng, rng.randint(3, 6), rng.randint(1, 6))
        nested = nest(s)
        for r in (3, 4, 5):
            pat = PatternGraph.clique(r)
            if is_rainbow_free(s, pat):
                assert is_rainbow_free(nested, pat)


def test_to_weighted_examples():
    nested = NestedSystem(
        3, nest(make_system(3, [(1, 2), (1, 3), (2, 3)], [], [])).members
    )
    wg = to_weighted(nested)
    assert wg.weights == (1, 1, 1)

    s = make_system(3, [(1, 2), (1, 3)], [(1, 2)])
    wg = to_weighted(s)
    assert (wg.weight(1, 2), wg.weight(1, 3), wg.weight(2, 3)) == (2, 1, 0)
    assert wg.total_weight() == s.total_size()

    empty = make_system(4, [], [], [])
    assert to_weighted(empty).weights == (0,) * 6


def test_to_weighted_rejects_non_nested():
    s = make_system(3, [(1, 2)], [(2, 3)])
    with pytest.raises(ContractViolationError):
        to_weighted(s)


def test_from_weighted_examples():
    wg = WeightedGraph.constant(4, 3, 0)
    assert [g.size() for g in from_weighted(wg).members] == [0, 0, 0]

    wg = WeightedGraph.from_map(3, 2, {(1, 2): 2, (1, 3): 1})
    nested = from_weighted(wg)
    assert nested.members[0].edges == frozenset({(1, 2), (1, 3)})
    assert nested.members[1].edges == frozenset({(1, 2)})

    wg = WeightedGraph.constant(3, 2, 2)
    assert all(g.size() == 3 for g in from_weighted(wg).members)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_weighted_roundtrip(data):
    n = data.draw(st.integers(2, 6))
    k = data.draw(st.integers(0, 6))
    weights = data.draw(
        st.tuples(*[st.integers(0, k) for _ in range(n * (n - 1) // 2)])
    )
    wg = WeightedGraph(n, k, weights)
    assert to_weighted(from_weighted(wg)) == wg
    nested = from_weighted(wg)
    assert from_weighted(to_weighted(nested)).members == nested.members


def test_truncate():
    s = nest(make_system(3, [(1, 2), (1, 3)], [(1, 2)], []))
    assert truncate(s, 3).members == s.members
    t = truncate(s, 2)
    assert t.k == 2 and t.total_size() == 3
    with pytest.raises(InvalidParameterError):
        truncate(s, 0)
    with pytest.raises(InvalidParameterError):
        truncate(s, 4)


def test_truncate_equality_case():
    s = nest(make_system(4, *([[(1, 2), (3, 4)]] * 4)))
    for k_new in (1, 2, 3, 4):
        t = truncate(s, k_new)
        head = t.total_size()
        tail = s.total_size() - head
        assert k_new * tail == (s.k - k_new) * head


def test_weighted_graph_validation():
    with pytest.raises(InvalidParameterError):
        WeightedGraph(3, 2, (0, 1))  # wrong arity
    with pytest.raises(InvalidParameterError):
        WeightedGraph(3, 2, (0, 1, 3))  # weight above ceiling
    with pytest.raises(InvalidParameterError):
        WeightedGraph.pair_index(3, 0, 2)
    with pytest.raises(InvalidParameterError):
        WeightedGraph.pair_index(3, 1, 4)
    with pytest.raises(InvalidParameterError):
        WeightedGraph.pair_index(3, 2, 2)
    wg = random_weighted(Random(1), 5, 4)
    for u in range(1, 6):
        for v in range(u + 1, 6):
            assert 0 <= wg.weight(u, v) <= 4


def test_restrict_relabels():
    wg = WeightedGraph.from_map(4, 5, {(1, 3): 2, (3, 4): 5, (1, 4): 1})
    sub = wg.restrict([1, 3, 4])
    assert sub.n == 3
    assert sub.weight(1, 2) == 2  # old (1,3)
    assert sub.weight(2, 3) == 5  # old (3,4)
    assert sub.weight(1, 3) == 1  # old (1,4)
