from itertools import permutations
from random import Random

import pytest

from conftest import make_system
from rblab.errors import ResourceLimitError
from rblab.model import PatternGraph, SimpleGraph, gen_clique_system, normalize_edge
from rblab.rainbow import count_rainbow_embeddings, find_rainbow, is_rainbow_free
from rblab.sampling import random_system

K3 = PatternGraph.clique(3)
K4 = PatternGraph.clique(4)


def rainbow_by_enumeration(system, pattern) -> bool:
    """Oracle: try every injective embedding and every injective assignment."""
    n, k, m = system.n, system.k, len(pattern.edges)
    if pattern.p > n or m > k:
        return False
    for image in permutations(range(1, n + 1), pattern.p):
        mapped = [
            normalize_edge(image[u - 1], image[v - 1]) for u, v in pattern.edges
        ]
        for assign in permutations(range(1, k + 1), m):
            if all(
                mapped[j] in system.members[assign[j] - 1].edges for j in range(m)
            ):
                return True
    return False


def test_three_triangles_have_rainbow():
    s = make_system(3, [(1, 2), (1, 3), (2, 3)], [(1, 2), (1, 3), (2, 3)], [(1, 2), (1, 3), (2, 3)])
    cert = find_rainbow(s, K3)
    assert cert is not None
    assert cert.vertex_map == (1, 2, 3)
    assert cert.assignment == (1, 2, 3)  # lex-smallest feasible assignment
    assert cert.is_valid_for(s, K3)


def test_clique_construction_is_free():
    assert is_rainbow_free(gen_clique_system(4, 3, 3), K3)


def test_certificate_prefers_smallest_vertex_set():
    # rainbow triangles exist on {1,3,4} and {2,3,4} but nothing using edge 1-2
    member = [(1, 3), (1, 4), (3, 4), (2, 3), (2, 4)]
    s = make_system(4, member, member, member)
    cert = find_rainbow(s, K3)
    assert cert.vertex_map == (1, 3, 4)
    assert cert.assignment == (1, 2, 3)


def test_certificate_prefers_smallest_assignment():
    # member 1 lacks edge 1-2, so the lex-min assignment routes it to member 2
    full = [(1, 2), (1, 3), (2, 3)]
    s = make_system(3, [(1, 3), (2, 3)], full, full)
    cert = find_rainbow(s, K3)
    assert cert.vertex_map == (1, 2, 3)
    assert cert.assignment == (2, 1, 3)


def test_matching_needed_not_just_membership():
    # every edge present somewhere, but only 3! assignment checks tell the truth
    s = make_system(3, [(1, 2), (1, 3)], [(2, 3)], [])
    assert is_rainbow_free(s, K3)
    assert rainbow_by_enumeration(s, K3) is False


def test_detector_matches_enumeration_oracle():
    rng = Random(101)
    for _ in range(120):
        n = rng.randint(3, 5)
        k = rng.randint(1, 4)
        s = random_system(rng, n, k)
        for pat in (K3, PatternGraph(3, ((1, 2), (2, 3)))):
            assert is_rainbow_free(s, pat) == (not rainbow_by_enumeration(s, pat))


def test_certificates_always_valid():
    rng = Random(99)
    for _ in range(200):
        s = random_system(rng, rng.randint(3, 6), rng.randint(2, 6))
        cert = find_rainbow(s, K3)
        if cert is not None:
            assert cert.is_valid_for(s, K3)


def test_monotone_under_edge_addition():
    rng = Random(7)
    for _ in range(100):
        s = random_system(rng, 4, 4)
        if is_rainbow_free(s, K3):
            continue
        i = rng.randrange(s.k)
        enriched = list(s.members)
        enriched[i] = SimpleGraph.complete(4)
        assert not is_rainbow_free(type(s)(s.n, tuple(enriched)), K3)


def test_permutation_invariance():
    rng = Random(13)
    for _ in range(100):
        s = random_system(rng, 5, 4)
        verdict = is_rainbow_free(s, K3)
        order = list(range(s.k))
        rng.shuffle(order)
        assert is_rainbow_free(s.permuted_members(order), K3) == verdict
        relabel = dict(zip(range(1, 6), rng.sample(range(1, 6), 5)))
        assert is_rainbow_free(s.relabel(relabel), K3) == verdict


def test_vacuous_cases():
    s = make_system(3, [(1, 2), (1, 3), (2, 3)], [(1, 2), (1, 3), (2, 3)])
    assert is_rainbow_free(s, K3)  # k = 2 < 3 pattern edges
    assert is_rainbow_free(s, K4)  # pattern larger than the vertex set


def test_count_examples():
    s3 = make_system(3, *([[(1, 2), (1, 3), (2, 3)]] * 3))
    assert count_rainbow_embeddings(s3, K3) == 6
    free = gen_clique_system(4, 3, 3)
    assert count_rainbow_embeddings(free, K3) == 0
    k4 = make_system(4, *([[(u, v) for u in range(1, 4) for v in range(u + 1, 5)]] * 6))
    assert count_rainbow_embeddings(k4, K4) == 24


def test_count_guard():
    big = make_system(11, [(1, 2)])
    with pytest.raises(ResourceLimitError):
        count_rainbow_embeddings(big, K3)


def test_general_pattern_certificate():
    path = PatternGraph(3, ((1, 2), (2, 3)))
    s = make_system(4, [(1, 2)], [(2, 3)])
    cert = find_rainbow(s, path)
    assert cert is not None and cert.is_valid_for(s, path)


def test_nested_hall_criterion():
    # on nested systems the matching verdict reduces to sorted multiplicities:
    # a rainbow K_r exists iff some r-subset has a_i >= i at every position
    from itertools import combinations

    from rblab.nesting import from_weighted
    from rblab.sampling import random_weighted

    rng = Random(55)
    for _ in range(150):
        n = rng.randint(3, 6)
        k = rng.randint(1, 8)
        r = rng.choice((3, 4, 5))
        wg = random_weighted(rng, n, k)
        system = from_weighted(wg)
        by_matching = not is_rainbow_free(system, PatternGraph.clique(r))
        by_mult = any(
            all(
                a >= i
                for i, a in enumerate(
                    sorted(
                        system.multiplicity(u, v) for u, v in combinations(sub, 2)
                    ),
                    start=1,
                )
            )
            for sub in combinations(range(1, n + 1), r)
        ) if r <= n else False
        assert by_matching == by_mult
