"""Cycle finding, pendant-tree decomposition, KE classification, and the
structural core/corona/ker shortcuts for unicyclic graphs."""

import pytest
from hypothesis import given, settings, strategies as st

from corekit import (
    Graph,
    NotUnicyclicError,
    PreconditionError,
    classify_ke_unicyclic,
    core,
    corona,
    decompose,
    find_cycle,
    fixture,
    is_alpha_critical_edge,
    is_koenig_egervary,
    ker,
    random_unicyclic,
    structural_core,
    structural_corona,
    structural_ker,
)
from helpers import oracle_core, oracle_corona, oracle_ker

from test_independence import cycle, path


def test_find_cycle_canonical_form():
    assert find_cycle(cycle(5)) == ("v1", "v2", "v3", "v4", "v5")
    assert find_cycle(fixture("k3")) == ("a", "b", "c")
    # starts at the smallest cycle label, walks toward its smaller neighbor
    g = Graph.from_edges([("d", "b"), ("b", "a"), ("a", "c"), ("c", "d"), ("d", "x")])
    assert find_cycle(g) == ("a", "b", "d", "c")


def test_find_cycle_requires_unicyclic():
    with pytest.raises(NotUnicyclicError):
        find_cycle(path(4))
    with pytest.raises(NotUnicyclicError):
        find_cycle(fixture("bicyclic9-nonke"))
    disconnected = Graph.from_edges(
        [("a", "b"), ("b", "c"), ("c", "a")], isolated=["z"]
    )
    with pytest.raises(NotUnicyclicError):
        find_cycle(disconnected)


def test_decompose_partitions_the_graph(all_fixtures):
    for name in ["uni7-ke", "uni10-nonke", "uni9-ke", "uni7-ke-kereq", "uni8-nonke", "c4", "c5", "k3"]:
        g = all_fixtures[name]
        dec = decompose(g)
        covered = set(dec.cycle)
        assert len(covered) == len(dec.cycle), name
        for pt in dec.pendant_trees:
            vs = set(pt.vertices.labels())
            assert pt.root in vs, name
            assert pt.anchor in dec.cycle, name
            assert not covered & vs, name
            covered |= vs
            # each pendant tree really is a tree containing its root
            assert pt.tree.n == len(vs), name
            assert pt.tree.m == pt.tree.n - 1, name
        assert covered == set(g.labels), name
        # roots are exactly the off-cycle vertices adjacent to the cycle
        cyc = g.set_of(dec.cycle)
        n1 = g.neighborhood(cyc) - cyc
        assert dec.outer_roots() == n1, name


def test_decompose_uni10_names():
    g = fixture("uni10-nonke")
    dec = decompose(g)
    assert set(dec.cycle) == {"y", "d", "t", "c", "w"}
    assert sorted(dec.outer_roots().labels()) == ["x"]
    (pt,) = dec.pendant_trees
    assert pt.root == "x"
    assert pt.anchor == "y"
    assert sorted(pt.vertices.labels()) == ["a", "b", "u", "v", "x"]


def test_classify_ke_unicyclic_consistency(unicyclic_by_n):
    for n in range(3, 9):
        for g in unicyclic_by_n[n]:
            cls = classify_ke_unicyclic(g)
            assert cls.koenig_egervary == (cls.alpha_plus_mu == g.n)
            assert cls.koenig_egervary == is_koenig_egervary(g)
            # LEM2 shape: non-KE iff every cycle edge is alpha-critical
            assert cls.all_cycle_edges_alpha_critical == (not cls.koenig_egervary)
            assert cls.all_cycle_edges_alpha_critical == (
                not cls.non_critical_cycle_edges
            )
            for u, v in cls.non_critical_cycle_edges:
                assert not is_alpha_critical_edge(g, u, v)


def test_structural_shortcuts_require_non_ke():
    for name in ["uni7-ke", "uni9-ke", "c4"]:
        g = fixture(name)
        for fn in (structural_core, structural_corona, structural_ker):
            with pytest.raises(PreconditionError):
                fn(g)
    with pytest.raises(NotUnicyclicError):
        structural_core(path(4))


def test_structural_shortcuts_match_bruteforce(unicyclic_by_n):
    checked = 0
    for n in range(3, 9):
        for g in unicyclic_by_n[n]:
            if is_koenig_egervary(g):
                continue
            checked += 1
            assert frozenset(structural_core(g).labels()) == oracle_core(g)
            assert frozenset(structural_corona(g).labels()) == oracle_corona(g)
            assert frozenset(structural_ker(g).labels()) == oracle_ker(g)
            assert structural_ker(g) == structural_core(g)
    assert checked > 0


@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 12), seed=st.integers(0, 10**6))
def test_decomposition_invariants_on_random_unicyclic(n, seed):
    g = random_unicyclic(n, seed)
    dec = decompose(g)
    # the cycle is a closed walk of distinct vertices whose edges all exist
    cyc = list(dec.cycle)
    assert len(set(cyc)) == len(cyc) >= 3
    for u, v in zip(cyc, cyc[1:] + cyc[:1]):
        assert g.has_edge(u, v)
    # vertex set partitions into cycle + pendant trees
    covered = set(cyc)
    for pt in dec.pendant_trees:
        vs = set(pt.vertices.labels())
        assert not covered & vs
        covered |= vs
        # every root has exactly one neighbor on the cycle
        root_nbrs = g.neighborhood(g.set_of([pt.root]))
        assert len(root_nbrs & g.set_of(cyc)) == 1
    assert covered == set(g.labels)


def test_structural_shortcuts_on_named_fixtures():
    g = fixture("uni10-nonke")
    assert frozenset(structural_core(g).labels()) == frozenset(core(g).labels())
    assert frozenset(structural_corona(g).labels()) == frozenset(corona(g).labels())
    assert frozenset(structural_ker(g).labels()) == frozenset(ker(g).labels())
    g = fixture("uni8-nonke")
    assert sorted(structural_core(g).labels()) == ["x", "y"]
