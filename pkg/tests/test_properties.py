"""Randomized property tests over seeded tree corpora."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from burnkit import (
    growth_of,
    unfold_burn,
    validate,
)
from burnkit.burning import SparkSet, is_set_burnable
from burnkit.corpus import random_tree
from burnkit.graphs import ball, bfs_distances, remove_vertices
from burnkit.util import ceil_sqrt


@st.composite
def seeded_tree(draw, max_n=40):
    n = draw(st.integers(min_value=1, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_tree(n, random.Random(seed))


@given(seeded_tree())
@settings(max_examples=60, deadline=None)
def test_unfold_certificate_always_valid(t):
    cert = unfold_burn(t)
    assert cert.valid
    assert len(cert) <= ceil_sqrt(2 * t.n)


@given(seeded_tree(max_n=20), st.integers(min_value=0, max_value=6))
@settings(max_examples=60, deadline=None)
def test_ball_matches_distance_table(t, radius):
    for center in (0, t.n - 1):
        dist = bfs_distances(t, center)
        assert ball(t, center, radius) == {
            v for v in range(t.n) if dist[v] <= radius
        }


@given(seeded_tree(max_n=25))
@settings(max_examples=40, deadline=None)
def test_growth_shrinks_when_leaves_go(t):
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    if len(leaves) == t.n:
        return
    smaller, _ = remove_vertices(t, leaves)
    assert growth_of(smaller).growth <= growth_of(t).growth
    # One pruning round is exactly what the growth computation counts.
    if growth_of(t).growth > 0:
        assert growth_of(smaller).growth == growth_of(t).growth - 1


@given(seeded_tree(max_n=12), st.sets(st.integers(0, 5), min_size=1, max_size=4))
@settings(max_examples=50, deadline=None)
def test_witnesses_always_validate(t, radii):
    witness = is_set_burnable(t, SparkSet.of(radii))
    if witness is not None:
        assert validate(t, witness).valid
