import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from uniform_turan.catalog import k4minus, single_edge, wheel
from uniform_turan.errors import GuardExceeded
from uniform_turan.hypergraph import ThreeGraph, shadow
from uniform_turan.reduced import (EmbeddingWitness, InvalidReducedGraph, ReducedThreeGraph,
                                   check_witness, constituent_density, degree_square_stat, embeds,
                                   is_d_dense, planted_reduced, project_Q, random_reduced, s_set)


def brute_embeds(A, F, monotone=True):
    """Every phi and every psi, no pruning."""
    pairs = list(shadow(F))
    images = combinations(A.indices, F.n) if monotone else product(A.indices, repeat=F.n)
    for img in images:
        phi = dict(enumerate(img))
        if any(phi[u] == phi[v] for u, v in pairs):
            continue
        if not monotone and len(set(img)) < F.n:
            continue
        for choice in product(*(range(A.size(phi[u], phi[v])) for u, v in pairs)):
            psi = dict(zip(pairs, choice))
            if check_witness(A, F, EmbeddingWitness(phi, psi)):
                return True
    return False


def test_embeds_matches_brute_force():
    rng = random.Random(0)
    for trial in range(60):
        A = random_reduced(4, 2, rng.choice([0.05, 0.15, 0.3]), seed=trial)
        for F in (single_edge(), k4minus()):
            for all_orderings in (False, True):
                w = embeds(A, F, all_orderings=all_orderings)
                assert (w is not None) == brute_embeds(A, F, monotone=not all_orderings)


def test_planted_recovery():
    for seed in range(20):
        for F in (single_edge(), k4minus()):
            A, planted = planted_reduced(F, 6, 4, seed=seed)
            assert check_witness(A, F, planted)
            w = embeds(A, F)
            assert w is not None and check_witness(A, F, w)


def test_empty_reduced_graph_embeds_nothing():
    A = random_reduced(5, 3, 0.0, seed=0)
    assert embeds(A, single_edge()) is None
    # an edgeless target embeds trivially
    assert embeds(A, ThreeGraph(3)) is not None


def test_embedding_monotone_under_adding_edges():
    A, _ = planted_reduced(k4minus(), 5, 3, seed=11)
    extra = random_reduced(5, 3, 0.2, seed=12)
    cons = {t: A.constituents[t] | extra.constituents[t] for t in A.constituents}
    bigger = ReducedThreeGraph(A.indices, A.class_sizes, cons)
    assert embeds(bigger, k4minus()) is not None


def test_reverse_is_an_involution_and_preserves_embedding():
    for seed in range(15):
        A = random_reduced(5, 2, 0.2, seed=seed)
        R = A.reverse()
        assert R.reverse() == A
        for F in (single_edge(), k4minus(), wheel(5)):
            flipped = F.relabel([F.n - 1 - v for v in range(F.n)])
            assert (embeds(A, F) is None) == (embeds(R, flipped) is None)
            assert (embeds(A, F, all_orderings=True) is None) == (embeds(R, F, all_orderings=True) is None)


def test_density_checks():
    A = ReducedThreeGraph((1, 2, 3), {(1, 2): 2, (2, 3): 2, (1, 3): 1},
                          {(1, 2, 3): [(0, 0, 0), (1, 1, 0)]})
    assert constituent_density(A, (1, 2, 3)) == Fraction(1, 2)
    assert is_d_dense(A, Fraction(1, 2)).dense
    assert not is_d_dense(A, 0.51).dense
    empty_class = ReducedThreeGraph((1, 2, 3), {(1, 2): 0, (2, 3): 2, (1, 3): 1})
    with pytest.raises(InvalidReducedGraph):
        is_d_dense(empty_class, 0.1)


def test_validation_and_json():
    with pytest.raises(InvalidReducedGraph):
        ReducedThreeGraph((1, 2, 3), {(1, 2): 1, (2, 3): 1})
    with pytest.raises(InvalidReducedGraph):
        ReducedThreeGraph((1, 2, 3), {(1, 2): 1, (2, 3): 1, (1, 3): 1}, {(1, 2, 3): [(0, 1, 0)]})
    A = random_reduced(4, 3, 0.3, seed=2)
    assert ReducedThreeGraph.from_json(A.to_json()) == A
    with pytest.raises(InvalidReducedGraph):
        ReducedThreeGraph.from_dict({"indices": [1, 2]})


def test_guards():
    with pytest.raises(GuardExceeded):
        random_reduced(9, 2, 0.1)
    with pytest.raises(GuardExceeded):
        embeds(random_reduced(3, 2, 0.1), k4minus())


def recount(A, i, j, k, eps, r):
    cons = A.constituents[(i, j, k)]
    L, M, T = A.size(i, j), A.size(j, k), A.size(i, k)
    eps = Fraction(eps)
    q = {(u, v) for u in range(L) for v in range(T)
         if Fraction(sum((u, w, v) in cons for w in range(M)), M) >= eps * eps}
    deg = [sum((u, v) in q for u in range(L)) for v in range(T)]
    square = sum(x * x for x in deg)
    s = {v for v in range(T) if Fraction(deg[v], L) >= Fraction(1, 2) + r * eps * eps}
    return q, square, s


def test_projection_statistics_match_recount():
    rng = random.Random(9)
    for trial in range(50):
        size = rng.randint(2, 6)
        A = random_reduced(4, size, rng.uniform(0.2, 0.9), seed=trial)
        i, j, k = sorted(rng.sample(A.indices, 3))
        eps = Fraction(rng.randint(1, 9), 10)
        r = rng.randint(1, 3)
        q, square, s = recount(A, i, j, k, eps, r)
        Q = project_Q(A, i, j, k, eps)
        assert Q.edges == q
        stat = degree_square_stat(Q, eps)
        assert stat.value == square
        assert stat.holds == (square >= (Fraction(1, 4) + eps / 2) * size ** 3)
        assert s_set(A, i, j, k, eps, r) == s


def test_projection_argument_checks():
    A = random_reduced(3, 2, 0.5, seed=1)
    with pytest.raises(ValueError):
        project_Q(A, 2, 1, 3, 0.5)
    with pytest.raises(ValueError):
        project_Q(A, 1, 2, 3, 0)
    with pytest.raises(ValueError):
        s_set(A, 1, 2, 3, 0.5, 0)
