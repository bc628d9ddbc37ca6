import itertools

import pytest

from burnkit import (
    BurnAssignment,
    BurnCertificate,
    CapExceededError,
    SparkSet,
    burning_number_exact,
    is_set_burnable,
    path_graph,
    resolve_center_collisions,
    simulate_classic,
    star_graph,
    validate,
)
from burnkit.burning import coverage
from burnkit.errors import GraphError
from burnkit.util import ceil_sqrt

from conftest import brute_force_burnable, trees_up_to


def test_spark_set_rejects_duplicates():
    with pytest.raises(GraphError):
        SparkSet.checked([1, 1, 2])


def test_spark_set_sorted():
    assert SparkSet.of([3, 0, 2]).radii == (0, 2, 3)


def test_assignment_rejects_repeated_center():
    with pytest.raises(GraphError):
        BurnAssignment.of([(0, 1), (1, 1)])


def test_assignment_rejects_repeated_radius():
    with pytest.raises(GraphError):
        BurnAssignment.of([(1, 0), (1, 2)])


def test_simulate_single_vertex():
    snaps = simulate_classic(path_graph(1), [0])
    assert snaps == [{0}]


def test_simulate_p9_three_steps():
    # b(P_9) = ceil(sqrt(9)) = 3; centers chosen so balls 2,1,0 tile the path.
    snaps = simulate_classic(path_graph(9), [2, 6, 8])
    assert snaps[-1] == set(range(9))
    assert len(snaps) == 3


def test_simulate_p4_not_done_after_one_step():
    snaps = simulate_classic(path_graph(4), [0])
    assert snaps[-1] != set(range(4))


def test_simulate_rejects_duplicates():
    with pytest.raises(GraphError):
        simulate_classic(path_graph(3), [1, 1])


def test_classic_equals_ball_union():
    for t in trees_up_to(10):
        for k in (1, 2, 3):
            for seq in itertools.permutations(range(t.n), min(k, t.n)):
                snaps = simulate_classic(t, seq)
                union = coverage(
                    t, [(len(seq) - 1 - i, v) for i, v in enumerate(seq)]
                )
                assert snaps[-1] == union


def test_is_set_burnable_p5_yes():
    # Brute force over all center tuples shows {0,2} suffices on P_5.
    assert brute_force_burnable(path_graph(5), (2, 0)) is not None
    a = is_set_burnable(path_graph(5), SparkSet.of([0, 2]))
    assert a is not None
    assert validate(path_graph(5), a).valid


def test_is_set_burnable_p5_no():
    # Max coverage of {0,1} on a path is 1 + 3 = 4 < 5.
    assert brute_force_burnable(path_graph(5), (1, 0)) is None
    assert is_set_burnable(path_graph(5), SparkSet.of([0, 1])) is None


def test_is_set_burnable_single_vertex():
    a = is_set_burnable(path_graph(1), SparkSet.of([0]))
    assert a is not None and a.sparks == ((0, 0),)


def test_is_set_burnable_matches_brute_force():
    # Strict regime only: with |B| <= n the search must agree exactly with
    # the all-center-tuples reference.
    radii_sets = [(0,), (1,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    for t in trees_up_to(7):
        for radii in radii_sets:
            if len(radii) > t.n:
                continue
            got = is_set_burnable(t, SparkSet.of(radii))
            want = brute_force_burnable(t, radii)
            assert (got is None) == (want is None)
            if got is not None:
                assert validate(t, got).valid
                assert set(got.radii) == set(radii)


def test_is_set_burnable_degenerate_relaxation():
    # More sparks than vertices: coverage still achieved, surplus smallest
    # radii silently omitted from the witness (distinctness is enforced).
    got = is_set_burnable(path_graph(1), SparkSet.of([0, 1]))
    assert got is not None and got.sparks == ((1, 0),)
    got2 = is_set_burnable(path_graph(2), SparkSet.of([0, 1, 2]))
    assert got2 is not None and len(got2) == 2
    assert validate(path_graph(2), got2).valid


def test_is_set_burnable_monotone():
    for t in trees_up_to(7):
        for radii in [(0, 1), (0, 2), (1, 2)]:
            base = is_set_burnable(t, SparkSet.of(radii))
            if base is None:
                continue
            for extra in range(4):
                bigger = set(radii) | {extra}
                if len(bigger) > t.n:
                    continue
                assert is_set_burnable(t, SparkSet.of(bigger)) is not None


def test_burning_number_p9():
    k, a = burning_number_exact(path_graph(9))
    assert k == 3
    assert validate(path_graph(9), a).valid


def test_burning_number_single():
    assert burning_number_exact(path_graph(1))[0] == 1


def test_burning_number_star():
    # Brute force over all 1- and 2-assignments: K_{1,5} needs exactly 2.
    g = star_graph(5)
    assert brute_force_burnable(g, (0,)) is None
    assert brute_force_burnable(g, (1, 0)) is not None
    k, a = burning_number_exact(g)
    assert k == 2 and validate(g, a).valid


def test_burning_number_cap():
    with pytest.raises(CapExceededError):
        burning_number_exact(path_graph(30))
    k, _ = burning_number_exact(path_graph(30), override=True)
    assert k == ceil_sqrt(30)


def test_path_formula_small():
    for n in range(1, 26):
        assert burning_number_exact(path_graph(n), override=True)[0] == ceil_sqrt(n)


def test_validate_examples():
    g = path_graph(5)
    good = validate(g, BurnAssignment.of([(2, 2)]))
    assert good.valid and good.covered == 5
    bad = validate(g, BurnAssignment.of([(0, 0)]))
    assert not bad.valid and bad.covered == 1


def test_validate_p7_three_sparks():
    g = path_graph(7)
    cert = validate(g, BurnAssignment.of([(1, 1), (0, 6), (2, 3)]))
    assert cert.valid and cert.covered == 7


def test_subtree_bound_on_spanning_trees():
    # Burning any spanning tree never beats burning the graph itself.
    from burnkit.graphs import bfs_tree

    from conftest import connected_graphs

    for g in connected_graphs(5):
        kg, _ = burning_number_exact(g)
        for root in range(g.n):
            kt, _ = burning_number_exact(bfs_tree(g, root))
            assert kg <= kt


def test_subtree_bound_sampled_larger_graphs():
    # Spot check on random connected graphs with 6..8 vertices.
    import random

    from burnkit.corpus import random_tree
    from burnkit.graphs import bfs_tree, build_graph

    rng = random.Random(77)
    for _ in range(30):
        n = rng.randrange(6, 9)
        base = random_tree(n, rng)
        edges = set(base.edges())
        for _ in range(rng.randrange(0, n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        g = build_graph(n, sorted(edges))
        kg, _ = burning_number_exact(g)
        kt, _ = burning_number_exact(bfs_tree(g, rng.randrange(n)))
        assert kg <= kt


def test_resolve_collisions_subset_ball():
    g = path_graph(5)
    a = resolve_center_collisions(g, [(2, 2), (1, 2)])
    assert (2, 2) in a.sparks
    centers = a.centers
    assert len(set(centers)) == 2


def test_resolve_collisions_identity():
    g = path_graph(5)
    a = resolve_center_collisions(g, [(2, 1), (0, 4)])
    assert a == BurnAssignment.of([(2, 1), (0, 4)])


def test_resolve_collisions_drops_surplus():
    g = path_graph(3)
    a = resolve_center_collisions(g, [(0, 1), (1, 1), (2, 1), (3, 1)])
    assert len(a) == 3  # smallest radius dropped, one spark per vertex
    assert validate(g, a).valid


def test_resolve_collisions_rejects_duplicate_radii():
    with pytest.raises(GraphError):
        resolve_center_collisions(path_graph(3), [(1, 0), (1, 2)])


def test_certificate_json_round_trip():
    g = path_graph(7)
    cert = validate(g, BurnAssignment.of([(1, 1), (0, 6), (2, 3)]))
    data = cert.to_json_dict()
    back = BurnCertificate.from_json_dict(data)
    assert back == cert


def test_leftover_sparks_are_parked():
    # Coverage finishes early; remaining radii land on unused vertices.
    a = is_set_burnable(path_graph(5), SparkSet.of([0, 1, 2]))
    assert a is not None and len(a) == 3
    assert len(set(a.centers)) == 3
