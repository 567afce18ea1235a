from __future__ import annotations

from math import comb

import pytest

from visipoly import (
    GuardrailError,
    Polynomial,
    complete_graph,
    components,
    compute_stats,
    count_by_size_and_diameter,
    cycle_graph,
    diamond_graph,
    disjoint_union,
    empty_graph,
    iter_mv_sets,
    path_graph,
    polynomial_bruteforce,
    polynomial_pruned,
    star_graph,
)

from oracles import oracle_polynomial


def test_bruteforce_examples():
    assert polynomial_bruteforce(complete_graph(4)) == Polynomial((1, 4, 6, 4, 1))
    assert polynomial_bruteforce(cycle_graph(4)) == Polynomial((1, 4, 6, 4))
    assert polynomial_bruteforce(diamond_graph()) == Polynomial((1, 4, 6, 4))


def test_pruned_examples():
    # 5-vertex star: x + 4x^2 + (1+x)^4 expanded
    assert polynomial_pruned(star_graph(4)) == Polynomial((1, 5, 10, 4, 1))
    assert polynomial_pruned(cycle_graph(7)) == Polynomial((1, 7, 21, 14))
    assert polynomial_pruned(path_graph(6)) == Polynomial((1, 6, 15))


def test_empty_graph_polynomial_is_one():
    assert polynomial_pruned(empty_graph(0)) == Polynomial((1,))
    assert polynomial_bruteforce(empty_graph(0)) == Polynomial((1,))


def test_bruteforce_guardrail():
    with pytest.raises(GuardrailError, match="pruned"):
        polynomial_bruteforce(empty_graph(26))
    # configurable limit
    assert polynomial_bruteforce(empty_graph(3), max_vertices=3) == Polynomial((1, 3))


def test_pruned_guardrail():
    with pytest.raises(GuardrailError):
        polynomial_pruned(empty_graph(65))


def test_engines_agree_with_oracle(random_small_graphs):
    for g in random_small_graphs[:60]:
        expected = oracle_polynomial(g)
        assert polynomial_bruteforce(g) == expected
        assert polynomial_pruned(g) == expected


def test_pruned_equals_bruteforce_on_whole_corpus(random_small_graphs):
    for g in random_small_graphs:
        assert polynomial_pruned(g) == polynomial_bruteforce(g)


def test_engines_agree_on_all_class_graphs():
    graphs = [complete_graph(n) for n in range(1, 9)]
    graphs += [path_graph(n) for n in range(1, 11)]
    graphs += [cycle_graph(n) for n in range(3, 11)]
    graphs += [star_graph(n) for n in range(0, 9)]
    graphs += [
        disjoint_union([path_graph(3), cycle_graph(4)]),
        disjoint_union([complete_graph(3), complete_graph(3), path_graph(2)]),
        disjoint_union([empty_graph(4), star_graph(3)]),
    ]
    for g in graphs:
        assert polynomial_pruned(g) == polynomial_bruteforce(g), g


def test_each_set_enumerated_once(random_small_graphs):
    for g in random_small_graphs[:50]:
        seen = set()
        for members, _ in iter_mv_sets(g):
            assert members not in seen
            seen.add(members)
        assert len(seen) == polynomial_pruned(g).evaluate(1) - 1


def test_low_coefficients(random_small_graphs):
    for g in random_small_graphs:
        poly = polynomial_pruned(g)
        assert poly.coefficient(0) == 1
        assert poly.coefficient(1) == g.n
        parts = components(g)
        cross_pairs = (
            comb(g.n, 2) - sum(comb(len(part), 2) for part in parts)
        )
        assert poly.coefficient(2) == comb(g.n, 2) - cross_pairs


def test_degree_and_leading_coefficient_match_stats(random_small_graphs):
    for g in random_small_graphs[:80]:
        poly = polynomial_pruned(g)
        stats = compute_stats(g)
        assert max(poly.degree, 0) == stats.mu
        if g.n:
            assert poly.coefficient(poly.degree) == stats.r_mu


def test_count_by_size_and_diameter():
    table = count_by_size_and_diameter(cycle_graph(6))
    assert table[(3, 2)] == 2
    assert table[(3, 3)] == 12
    assert (0, 0) not in table
    assert count_by_size_and_diameter(complete_graph(3))[(3, 1)] == 1


def test_diameter_table_matches_polynomial():
    for g in (cycle_graph(6), diamond_graph(), star_graph(4)):
        table = count_by_size_and_diameter(g)
        poly = polynomial_pruned(g)
        for k in range(1, g.n + 1):
            assert sum(c for (kk, _), c in table.items() if kk == k) == poly.coefficient(k)
