from __future__ import annotations

import random
from itertools import combinations

import pytest

from visipoly import (
    ParameterError,
    all_pairs_distances,
    clique_count,
    complete_graph,
    compute_stats,
    cycle_graph,
    disjoint_union,
    is_mutual_visibility_set,
    mu_complete_bipartite,
    path_graph,
    paw_graph,
    polynomial_pruned,
    star_graph,
)

from oracles import oracle_is_mv, oracle_mv_sets


def mv(g, x):
    return is_mutual_visibility_set(g, all_pairs_distances(g), x)


def test_whole_complete_graph_is_mv():
    for n in range(2, 7):
        assert mv(complete_graph(n), range(n))


def test_star_center_with_two_leaves_fails():
    g = star_graph(4)  # leaves 0..3, centre 4
    assert not mv(g, [4, 0, 1])
    assert mv(g, [0, 1, 2])
    assert mv(g, [4, 0])


def test_c4_triple_is_mv():
    g = cycle_graph(4)
    for combo in combinations(range(4), 3):
        assert mv(g, combo)


def test_small_sets_trivially_mv():
    g = path_graph(5)
    assert mv(g, [])
    assert mv(g, [3])
    for pair in combinations(range(5), 2):
        assert mv(g, pair)


def test_cross_component_pair_fails():
    g = disjoint_union([path_graph(2), path_graph(2)])
    assert not mv(g, [0, 2])
    assert mv(g, [0, 1])
    assert mv(g, [2])


def test_vertex_out_of_range():
    g = path_graph(3)
    with pytest.raises(ParameterError):
        mv(g, [0, 7])


def test_agrees_with_path_oracle_on_random_graphs(random_small_graphs):
    rng = random.Random(7)
    checked = 0
    for g in random_small_graphs:
        d = all_pairs_distances(g)
        for _ in range(5):
            k = rng.randint(0, g.n)
            x = rng.sample(range(g.n), k)
            assert is_mutual_visibility_set(g, d, x) == oracle_is_mv(g, x)
            checked += 1
    assert checked >= 500


def test_agrees_with_path_oracle_on_class_graphs():
    graphs = [complete_graph(n) for n in range(1, 7)]
    graphs += [path_graph(n) for n in range(1, 8)]
    graphs += [cycle_graph(n) for n in range(3, 8)]
    graphs += [star_graph(n) for n in range(0, 6)]
    graphs += [paw_graph(), disjoint_union([path_graph(3), cycle_graph(3)])]
    for g in graphs:
        d = all_pairs_distances(g)
        for k in range(g.n + 1):
            for x in combinations(range(g.n), k):
                assert is_mutual_visibility_set(g, d, x) == oracle_is_mv(g, x), (g, x)


def test_within_component_pairs_always_mv(random_small_graphs):
    from visipoly import components

    for g in random_small_graphs[:80]:
        d = all_pairs_distances(g)
        for part in components(g):
            for pair in combinations(part, 2):
                assert is_mutual_visibility_set(g, d, pair)


def test_mv_sets_are_downward_closed(random_small_graphs):
    for g in random_small_graphs[:60]:
        sets = oracle_mv_sets(g)
        for s in sets:
            for v in s:
                assert s - {v} in sets


def test_compute_stats_c6():
    stats = compute_stats(cycle_graph(6))
    assert stats.mu == 3
    assert stats.r_mu == 14
    assert stats.cliques[1] == 6
    assert stats.cliques[2] == 6
    assert stats.cliques[3] == 0
    assert stats.theta_count(2, 2) == 6
    assert stats.theta_count(3, 2) == 2
    assert stats.theta_count(1, 0) == 6
    assert stats.theta_count(1, 2) == 0


def test_compute_stats_paw():
    stats = compute_stats(paw_graph())
    assert stats.cliques[3] == 1
    assert stats.theta_count(3, 2) == 1
    assert stats.theta_count(2, 2) == 2


def test_compute_stats_k5():
    stats = compute_stats(complete_graph(5))
    assert stats.mu == 5
    assert stats.r_mu == 1


def test_stats_theta_sums_match_polynomial(random_small_graphs):
    for g in random_small_graphs[:80]:
        stats = compute_stats(g)
        poly = polynomial_pruned(g)
        for k in range(1, g.n + 1):
            total = sum(c for (kk, _), c in stats.theta.items() if kk == k)
            assert total == poly.coefficient(k)
        assert stats.mu == max(poly.degree, 0)
        if g.n:
            assert stats.r_mu == poly.coefficient(poly.degree)
        assert stats.cliques[0] == 1
        if g.n >= 1:
            assert stats.cliques[1] == g.n
        if g.n >= 2:
            assert stats.cliques[2] == g.edge_count
        assert all(d == 0 for (k, d) in stats.theta if k == 1)


def test_stats_kmax_bounds():
    g = cycle_graph(5)
    stats = compute_stats(g, k_max=2)
    assert set(stats.cliques) == {0, 1, 2}
    assert max(k for k, _ in stats.theta) == 2
    # mu still comes from the full enumeration
    assert stats.mu == 3
    with pytest.raises(ParameterError):
        compute_stats(g, k_max=9)


def test_stats_json_shape():
    payload = compute_stats(paw_graph()).to_json_dict()
    assert set(payload) == {"mu", "r_mu", "theta", "cliques"}
    assert [1, 0, 4] in payload["theta"]
    assert [3, 1] in payload["cliques"]


def test_clique_counts():
    assert clique_count(cycle_graph(6), 3) == 0
    assert clique_count(paw_graph(), 3) == 1
    assert clique_count(paw_graph(), 2) == 4
    assert clique_count(complete_graph(5), 0) == 1
    assert clique_count(complete_graph(5), 3) == 10
    with pytest.raises(ParameterError):
        clique_count(paw_graph(), 5)


def test_clique_counts_match_bruteforce(random_small_graphs):
    for g in random_small_graphs[:40]:
        for k in range(g.n + 1):
            expected = sum(
                1
                for combo in combinations(range(g.n), k)
                if all(g.adjacent(u, v) for u, v in combinations(combo, 2))
            )
            assert clique_count(g, k) == expected


def test_mu_complete_bipartite():
    assert mu_complete_bipartite(3, 3) == 4
    assert mu_complete_bipartite(3, 4) == 5
    assert mu_complete_bipartite(6, 6) == 10
    with pytest.raises(ParameterError):
        mu_complete_bipartite(2, 5)
