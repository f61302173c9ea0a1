import random
from itertools import combinations
from math import comb

import numpy as np
import pytest

from uniform_turan.catalog import k4minus
from uniform_turan.constructions import (PairColoringSource, density_audit, inherited_certificate,
                                         pair_rank, random_construction, splitmix64,
                                         splitmix64_array)
from uniform_turan.errors import InvalidGraph, TuranError
from uniform_turan.hypergraph import ThreeGraph, contains_sub, induced_sub
from uniform_turan.palette import verify


def test_splitmix_reference_values():
    # published outputs of splitmix64 for seeds 0 and 1234567
    assert [splitmix64(0, i) for i in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    assert splitmix64(1234567, 0) == 6457827717110365317


def test_splitmix_vector_matches_scalar():
    idx = np.arange(500)
    for seed in (0, 7, 2**63 + 5):
        vec = splitmix64_array(seed, idx)
        assert [int(x) for x in vec] == [splitmix64(seed, i) for i in range(500)]


def test_pair_rank_is_a_bijection():
    n = 12
    ranks = sorted(pair_rank(i, j) for i, j in combinations(range(n), 2))
    assert ranks == list(range(comb(n, 2)))
    assert pair_rank(3, 1) == pair_rank(1, 3)


def test_edge_rule_matches_direct_loop():
    src = PairColoringSource(25, seed=3)
    H = random_construction(25, source=src)
    expect = []
    for i, j, k in combinations(range(25), 3):
        pat = (src.color(i, j), src.color(j, k), src.color(i, k))
        if pat in (("red", "red", "blue"), ("blue", "blue", "red")):
            expect.append((i, j, k))
    assert list(H.edges) == expect


def test_determinism_and_seed_sensitivity():
    assert random_construction(40, 9) == random_construction(40, 9)
    assert random_construction(40, 9) != random_construction(40, 10)


def test_override_hook():
    all_red = PairColoringSource(10, override=lambda i, j: "red")
    assert len(random_construction(10, source=all_red)) == 0
    # blue exactly on pairs touching vertex 0: triples 0jk read (blue, red, blue) -> no edge
    star = PairColoringSource(6, override=lambda i, j: "blue" if i == 0 else "red")
    assert len(random_construction(6, source=star)) == 0
    # blue on the single pair (0, 2): triple 012 reads (red, red, blue)
    one = PairColoringSource(3, override=lambda i, j: "blue" if (i, j) == (0, 2) else "red")
    assert random_construction(3, source=one).edges == ((0, 1, 2),)
    with pytest.raises(InvalidGraph):
        random_construction(4, source=one)


def test_edge_density_concentrates_near_quarter():
    n = 80
    dens = [len(random_construction(n, s)) / comb(n, 3) for s in range(20)]
    assert all(0.22 < x < 0.28 for x in dens)
    assert abs(np.mean(dens) - 0.25) < 0.01


def test_inherited_certificates_verify():
    n, seed = 60, 4
    src = PairColoringSource(n, seed)
    H = random_construction(n, source=src)
    rng = random.Random(1)
    for _ in range(40):
        S = rng.sample(range(n), rng.randint(3, 8))
        assert verify(induced_sub(H, S), inherited_certificate(H, S, src))
    with pytest.raises(TuranError):
        inherited_certificate(H, [0, 1, 2], None)
    with pytest.raises(TuranError):
        inherited_certificate(H, [0, 1, 2], PairColoringSource(n + 1, seed))


def test_no_k4minus_in_construction():
    H = random_construction(30, 2)
    assert contains_sub(H, k4minus()) is None


def brute_deficit(H, d, mu, k):
    worst = -np.inf
    for U in combinations(range(H.n), k):
        s = set(U)
        e = sum(1 for x in H.edges if set(x) <= s)
        worst = max(worst, d * comb(k, 3) - e - mu * H.n ** 3)
    return worst


def test_audit_exact_mode_matches_brute_force():
    H = random_construction(10, 1)
    audit = density_audit(H, 0.25, 0.001, [4, 6], samples=1)
    assert all(s.exact for s in audit.per_size)
    expect = max(brute_deficit(H, 0.25, 0.001, 4), brute_deficit(H, 0.25, 0.001, 6))
    assert audit.worst_deficit == pytest.approx(expect)
    assert audit.passed == (expect <= 0)


def test_audit_sampled_is_seeded():
    H = random_construction(60, 0)
    a = density_audit(H, 0.25, 0.05, [30], samples=20, seed=3, exact_limit=10)
    b = density_audit(H, 0.25, 0.05, [30], samples=20, seed=3, exact_limit=10)
    assert a == b and not a.per_size[0].exact and a.samples == 20
    assert a.to_dict()["pass"] is a.passed


def test_audit_rejects_sparse_graph():
    empty = ThreeGraph(20)
    assert not density_audit(empty, 0.25, 0.001, [20], samples=1).passed
    with pytest.raises(ValueError):
        density_audit(empty, 0.25, 0.0, [21], samples=1)
