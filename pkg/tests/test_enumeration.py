import pytest

from burnkit import enumerate_trees
from burnkit.enumeration import (
    canonical_key,
    count_trees_prufer,
    decode_prufer,
    free_tree_counts,
    level_successor,
    rooted_level_sequences,
    rooted_tree_counts,
    tree_from_levels,
)
from burnkit.errors import CapExceededError
from burnkit.graphs import all_pairs_distances

# Free-tree counts t(1..12); cross-checked below against two oracles.
KNOWN_FREE = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
# Rooted-tree counts r(1..10).
KNOWN_ROOTED = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def test_level_successor_basics():
    assert level_successor((0, 1, 2)) == (0, 1, 1)
    assert level_successor((0, 1, 1)) is None


def test_rooted_sequence_counts():
    for n, want in enumerate(KNOWN_ROOTED, start=1):
        assert sum(1 for _ in rooted_level_sequences(n)) == want


def test_rooted_counting_recurrence():
    assert rooted_tree_counts(10)[1:] == KNOWN_ROOTED


def test_free_counts_by_recurrence():
    assert free_tree_counts(12)[1:] == KNOWN_FREE


def test_tree_from_levels():
    t = tree_from_levels((0, 1, 2, 1))
    assert sorted(t.edges()) == [(0, 1), (0, 3), (1, 2)]


def test_enumeration_counts_match_recurrence():
    for n in range(1, 13):
        assert enumerate_trees(n).count() == KNOWN_FREE[n - 1]


def test_enumeration_no_isomorphic_duplicates():
    for n in range(1, 10):
        keys = set()
        for tree in enumerate_trees(n):
            key = canonical_key([list(tree.adj[v]) for v in range(n)])
            assert key not in keys
            keys.add(key)


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_trees(25)
    enumerate_trees(25, override=True)  # explicit override allowed


def test_enumeration_resume_is_a_suffix():
    full = list(enumerate_trees(8).items())
    midpoint = full[len(full) // 2][0]
    resumed = list(enumerate_trees(8, start=midpoint).items())
    assert [lv for lv, _ in resumed] == [lv for lv, _ in full[len(full) // 2 :]]


def test_growth_filter():
    # Caterpillar counts: 2^(n-4) + 2^(floor(n/2)-2) for n >= 5.
    for n, want in [(5, 3), (6, 6), (7, 10), (8, 20), (9, 36)]:
        assert enumerate_trees(n, growth_at_most=1).count() == want


def test_decode_prufer_star_and_path():
    assert sorted(decode_prufer([2])) == [(0, 2), (1, 2)]
    edges = decode_prufer([0, 1])  # caterpillar on 4 vertices
    assert len(edges) == 3


def test_decode_prufer_is_bijection_small():
    import itertools

    n = 6
    seen = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = tuple(sorted(tuple(sorted(e)) for e in decode_prufer(seq)))
        seen.add(edges)
    assert len(seen) == n ** (n - 2)  # Cayley: all labeled trees, no repeats


def test_prufer_oracle_small():
    for n in range(1, 8):
        assert count_trees_prufer(n) == KNOWN_FREE[n - 1]


def test_canonical_key_invariant_under_relabeling():
    import random

    rng = random.Random(7)
    for tree in enumerate_trees(7):
        adj = [list(tree.adj[v]) for v in range(tree.n)]
        base = canonical_key(adj)
        perm = list(range(tree.n))
        rng.shuffle(perm)
        relabeled = [[] for _ in range(tree.n)]
        for u in range(tree.n):
            for v in adj[u]:
                relabeled[perm[u]].append(perm[v])
        assert canonical_key(relabeled) == base


def test_enumerated_trees_are_trees():
    for tree in enumerate_trees(8):
        assert tree.m == tree.n - 1
        dist = all_pairs_distances(tree)
        assert all(max(row) < tree.n for row in dist)
