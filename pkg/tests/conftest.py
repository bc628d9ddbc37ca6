"""Shared corpus helpers for the burnkit test suite."""

from functools import lru_cache
from itertools import combinations, permutations

import pytest

from burnkit import enumerate_trees
from burnkit.graphs import all_pairs_distances, build_graph


@lru_cache(maxsize=None)
def trees_up_to(n_max, n_min=1):
    """All non-isomorphic trees with n_min <= n <= n_max (cached tuples)."""
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(enumerate_trees(n))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n):
    """All connected labeled graphs on n vertices (small n only)."""
    verts = range(n)
    all_edges = list(combinations(verts, 2))
    out = []
    for k in range(n - 1, len(all_edges) + 1):
        for chosen in combinations(all_edges, k):
            degree_ok = True
            seen = [False] * n
            adj = {v: [] for v in verts}
            for u, v in chosen:
                adj[u].append(v)
                adj[v].append(u)
            stack = [0]
            seen[0] = True
            cnt = 1
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        cnt += 1
                        stack.append(y)
            if cnt == n:
                out.append(build_graph(n, chosen))
    return tuple(out)


def brute_force_burnable(g, radii):
    """Reference check for set burnability: try every center tuple."""
    dist = all_pairs_distances(g)
    radii = tuple(radii)
    if len(radii) > g.n:
        return None
    for centers in permutations(range(g.n), len(radii)):
        covered = set()
        for r, c in zip(radii, centers):
            covered.update(x for x in range(g.n) if dist[c][x] <= r)
        if len(covered) == g.n:
            return tuple(zip(radii, centers))
    return None


@pytest.fixture(scope="session")
def small_trees():
    return trees_up_to(9)
