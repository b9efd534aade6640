"""Canonical keys: labeled vs isomorphism-class modes."""

import random

import pytest

from helpers import complete_position, random_corpus, scramble_ids
from paintbucket.canon import (
    canonical_key,
    find_isomorphism,
    isomorphic,
    iso_key,
    labeled_key,
    twin_classes,
)
from paintbucket.core import BipartitePosition, Color


def test_labeled_key_identifies_literal_positions():
    a = BipartitePosition({0}, {1, 2}, [(0, 1), (0, 2)])
    b = BipartitePosition({0}, {1, 2}, [(0, 1), (0, 2)])
    c = BipartitePosition({0}, {1, 3}, [(0, 1), (0, 3)])
    assert labeled_key(a) == labeled_key(b)
    assert labeled_key(a) != labeled_key(c)


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        canonical_key(complete_position(1, 1), "nope")


def test_iso_key_invariant_under_relabeling():
    rng = random.Random(7)
    for p in random_corpus(seed=3, count=30, max_side=5):
        key = iso_key(p)
        for _ in range(5):
            assert iso_key(scramble_ids(rng, p)) == key


def test_iso_key_separates_one_edge_difference():
    a = BipartitePosition({0, 1}, {2, 3}, [(0, 2), (0, 3), (1, 2), (1, 3)])
    b = BipartitePosition({0, 1}, {2, 3}, [(0, 2), (0, 3), (1, 2)])
    assert iso_key(a) != iso_key(b)


def test_k23_matches_100_scrambles():
    rng = random.Random(11)
    base = complete_position(2, 3)
    key = iso_key(base)
    for _ in range(100):
        assert iso_key(scramble_ids(rng, base)) == key


def test_color_swap_is_not_isomorphic():
    assert not isomorphic(complete_position(2, 3), complete_position(3, 2))


def test_iso_key_agrees_with_backtracking_matcher():
    # both directions: equal keys exactly when an explicit bijection exists
    corpus = random_corpus(seed=5, count=40, max_side=4)
    rng = random.Random(13)
    for i, a in enumerate(corpus):
        scrambled = scramble_ids(rng, a)
        assert isomorphic(a, scrambled)
        mapping = find_isomorphism(a, scrambled)
        assert mapping is not None
        for b, w in a.edges:
            assert (mapping[b], mapping[w]) in scrambled.edges
        other = corpus[(i + 1) % len(corpus)]
        assert isomorphic(a, other) == (find_isomorphism(a, other) is not None)


def test_twin_classes_partition_and_share_neighborhoods():
    p = complete_position(3, 4)
    classes = twin_classes(p)
    assert sorted(v for c in classes for v in c) == sorted(p.black | p.white)
    assert {frozenset(c) for c in classes} == {frozenset(p.black), frozenset(p.white)}
    adj = p.adjacency()
    for cls in classes:
        assert len({adj[v] for v in cls}) == 1


def test_iso_key_counts_twin_multiplicity():
    # one leaf versus two leaves on the same hub must differ
    one = BipartitePosition({0}, {1}, [(0, 1)])
    two = BipartitePosition({0, 2}, {1}, [(0, 1), (2, 1)])
    assert iso_key(one) != iso_key(two)
