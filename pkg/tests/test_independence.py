"""alpha, MIS enumeration, core, corona, and alpha-critical edges,
cross-checked against subset-sweep oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from corekit import (
    BudgetExceededError,
    Budgets,
    Graph,
    alpha,
    core,
    corona,
    enumerate_mis,
    is_alpha_critical_edge,
    is_independent,
    random_connected,
    random_tree,
)
from helpers import oracle_alpha, oracle_core, oracle_corona, oracle_mis_family


def path(n):
    return Graph.from_edges([(f"v{i}", f"v{i+1}") for i in range(1, n)])


def cycle(n):
    edges = [(f"v{i}", f"v{i+1}") for i in range(1, n)] + [("v1", f"v{n}")]
    return Graph.from_edges(edges)


def complete(n):
    return Graph.from_edges(
        [(f"v{i}", f"v{j}") for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )


def test_alpha_closed_forms():
    for n in range(2, 26):
        assert alpha(path(n)) == (n + 1) // 2
    for n in range(3, 26):
        assert alpha(cycle(n)) == n // 2
    for n in range(2, 9):
        assert alpha(complete(n)) == 1
    # complete bipartite K_{3,4}
    kb = Graph.from_edges([(f"a{i}", f"b{j}") for i in range(3) for j in range(4)])
    assert alpha(kb) == 4


def test_alpha_matches_oracle_on_fixtures(all_fixtures):
    for name, g in all_fixtures.items():
        assert alpha(g) == oracle_alpha(g), name


def test_alpha_matches_oracle_on_small_corpora(trees_by_n, unicyclic_by_n, connected_by_n):
    for n in range(1, 9):
        for g in trees_by_n[n]:
            assert alpha(g) == oracle_alpha(g)
    for n in range(3, 9):
        for g in unicyclic_by_n[n]:
            assert alpha(g) == oracle_alpha(g)
    for n in range(1, 7):
        for g in connected_by_n[n]:
            assert alpha(g) == oracle_alpha(g)


def test_is_independent():
    g = path(4)
    assert is_independent(g, g.set_of(["v1", "v3"]))
    assert is_independent(g, g.empty_set())
    assert not is_independent(g, g.set_of(["v1", "v2"]))


def test_enumerate_mis_is_complete_sorted_and_deduplicated(all_fixtures):
    for name, g in all_fixtures.items():
        fam = enumerate_mis(g)
        as_sets = [frozenset(s.labels()) for s in fam]
        assert set(as_sets) == oracle_mis_family(g), name
        assert len(as_sets) == len(set(as_sets)), name
        keys = [s.labels() for s in fam]
        assert keys == sorted(keys), name
        for s in fam:
            assert is_independent(g, s)
            assert len(s) == alpha(g)


def test_enumerate_mis_respects_budget():
    g = path(21)
    with pytest.raises(BudgetExceededError):
        enumerate_mis(g, Budgets(enum_n=20))
    assert alpha(g) == 11  # the non-enumerating path is not budget-bound here


def test_core_and_corona_match_oracle(all_fixtures, unicyclic_by_n):
    for name, g in all_fixtures.items():
        assert frozenset(core(g).labels()) == oracle_core(g), name
        assert frozenset(corona(g).labels()) == oracle_corona(g), name
    for n in range(3, 9):
        for g in unicyclic_by_n[n]:
            assert frozenset(core(g).labels()) == oracle_core(g)
            assert frozenset(corona(g).labels()) == oracle_corona(g)


def test_core_corona_sandwich_every_mis(all_fixtures):
    for name, g in all_fixtures.items():
        c = core(g)
        cor = corona(g)
        for s in enumerate_mis(g):
            assert c <= s, name
            assert s <= cor, name


def test_alpha_critical_edges_match_direct_recomputation(all_fixtures):
    for name, g in all_fixtures.items():
        for u, v in g.edge_labels():
            direct = oracle_alpha(g.delete_edge(u, v)) == oracle_alpha(g) + 1
            assert is_alpha_critical_edge(g, u, v) == direct, (name, u, v)
    g = path(3)
    with pytest.raises(Exception):
        is_alpha_critical_edge(g, "v1", "v3")


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 9), seed=st.integers(0, 10**6))
def test_alpha_matches_oracle_on_random_connected(n, seed):
    g = random_connected(n, seed)
    assert alpha(g) == oracle_alpha(g)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 10), seed=st.integers(0, 10**6))
def test_mis_family_invariants_on_random_trees(n, seed):
    g = random_tree(n, seed)
    fam = enumerate_mis(g)
    a = alpha(g)
    inter = g.full_set()
    union = g.empty_set()
    for s in fam:
        assert len(s) == a
        assert is_independent(g, s)
        inter = inter & s
        union = union | s
    assert inter == core(g)
    assert union == corona(g)
