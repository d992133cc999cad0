"""Canonical keys, isomorphism, induced copies, tree keys."""

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domexc.canon import (
    CANON_CAP,
    IsoKey,
    are_isomorphic,
    canonical_key,
    induced_copies,
    iter_induced_copies,
    tree_key,
)
from domexc.graphs import (
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    edgeless,
    path,
)
from domexc.trees import enumerate_trees

from helpers import random_graph, shuffled


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 7), st.integers(0, 2**21 - 1), st.integers(0, 10**6))
def test_canonical_key_relabel_invariant(n, bits, seed):
    g = random_graph(n, bits)
    assert canonical_key(g) == canonical_key(shuffled(g, seed))


@settings(max_examples=60, deadline=None)
@given(st.integers(8, 12), st.integers(0, 2**66 - 1), st.integers(0, 10**6))
def test_canonical_key_relabel_invariant_larger(n, bits, seed):
    g = random_graph(n, bits)
    assert canonical_key(g) == canonical_key(shuffled(g, seed))


def test_canonical_key_is_canonical_form():
    # the key decodes to an isomorphic graph whose own key is itself
    g = shuffled(cycle(9), 5)
    key = canonical_key(g)
    rep = key.graph()
    assert are_isomorphic(rep, g)
    assert canonical_key(rep) == key


def test_exhaustive_small_orders():
    # keys induce exactly the isomorphism classes: 4 graphs on 3 vertices, 11 on 4
    for n, want in ((3, 4), (4, 11)):
        keys = set()
        for bits in range(1 << (n * (n - 1) // 2)):
            keys.add(canonical_key(random_graph(n, bits)))
        assert len(keys) == want


def test_are_isomorphic():
    assert are_isomorphic(cycle(6), shuffled(cycle(6), 3))
    assert not are_isomorphic(cycle(6), path(6))
    assert not are_isomorphic(complete(3), edgeless(3))
    # same degree sequence, different graphs
    a = disjoint_union([cycle(3), cycle(3)])
    b = cycle(6)
    assert not are_isomorphic(a, b)


def test_cap_enforced():
    with pytest.raises(ValueError):
        canonical_key(edgeless(CANON_CAP + 1))


def test_iso_key_graph6():
    key = canonical_key(complete(4))
    assert key.graph6() == "C~"
    assert isinstance(key, IsoKey)


def brute_copies(g, pattern):
    found = set()
    for combo in combinations(range(g.n), pattern.n):
        sub = g.induced(sum(1 << v for v in combo))
        for perm in permutations(range(pattern.n)):
            if all(
                sub.has_edge(perm[u], perm[v]) == pattern.has_edge(u, v)
                for u in range(pattern.n)
                for v in range(u + 1, pattern.n)
            ):
                found.add(sum(1 << v for v in combo))
                break
    return sorted(found)


def test_induced_copies_match_brute_force():
    cases = [
        (cycle(6), path(3)),
        (cycle(6), path(4)),
        (complete(5), complete(3)),
        (complete_multipartite([2, 2, 2]), cycle(4)),
        (random_graph(7, 0b101101110010101011011), path(4)),
        (random_graph(7, 0b101101110010101011011), complete(3)),
        (random_graph(7, 0b101101110010101011011), edgeless(3)),
        (path(5), disjoint_union([path(2), path(1)])),
    ]
    for g, pattern in cases:
        assert induced_copies(g, pattern) == brute_copies(g, pattern)


def test_induced_copies_counts():
    assert len(induced_copies(complete(5), complete(3))) == 10
    assert len(induced_copies(cycle(5), path(3))) == 5
    assert induced_copies(cycle(5), complete(3)) == []
    assert induced_copies(cycle(5), edgeless(1)) == [1, 2, 4, 8, 16]
    assert induced_copies(path(3), edgeless(0)) == [0]


def test_induced_copies_sorted_lazy_agreement():
    g = random_graph(7, 0b110010111010001100110)
    got = list(iter_induced_copies(g, path(3)))
    assert sorted(got) == induced_copies(g, path(3))


def test_pattern_cap():
    with pytest.raises(ValueError):
        induced_copies(complete(9), edgeless(9))


def test_tree_key_matches_canonical_classes():
    for n in range(1, 9):
        trees = enumerate_trees(n)
        tkeys = {tree_key(t) for t in trees}
        ckeys = {canonical_key(t) for t in trees}
        assert len(tkeys) == len(trees) == len(ckeys)
        for t in trees:
            assert tree_key(t) == tree_key(shuffled(t, 11))


def test_tree_key_rejects_non_trees():
    with pytest.raises(ValueError):
        tree_key(cycle(4))
