"""Seeded random instance generators used by tests and the CLI."""

from __future__ import annotations

import random
from typing import Optional

from .enumeration import decode_prufer
from .graphs import Graph, Tree, build_graph, build_tree


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labeled tree on n vertices via a random Prufer code."""
    if n <= 0:
        raise ValueError("n must be positive")
    if n == 1:
        return build_tree(1, [])
    if n == 2:
        return build_tree(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_tree(n, decode_prufer(seq))


def random_min_degree_graph(n: int, min_degree: int, rng: random.Random) -> Graph:
    """Random connected simple graph with every degree >= min_degree.

    Starts from a random spanning tree and keeps adding edges at
    lowest-degree vertices until the degree floor is met.
    """
    if n <= min_degree:
        raise ValueError(f"need n > {min_degree} for min degree {min_degree}")
    tree = random_tree(n, rng)
    adj = {v: set(tree.adj[v]) for v in range(n)}
    while True:
        deficient = [v for v in range(n) if len(adj[v]) < min_degree]
        if not deficient:
            break
        v = min(deficient, key=lambda x: (len(adj[x]), x))
        candidates = [w for w in range(n) if w != v and w not in adj[v]]
        if not candidates:
            raise ValueError("cannot satisfy degree floor (n too small)")
        # Prefer raising another low-degree vertex at the same time.
        lowest = min(len(adj[w]) for w in candidates)
        pool = [w for w in candidates if len(adj[w]) == lowest]
        w = pool[rng.randrange(len(pool))]
        adj[v].add(w)
        adj[w].add(v)
    edges = [(u, w) for u in range(n) for w in adj[u] if u < w]
    return build_graph(n, edges)


def random_tree_sizes(
    count: int, lo: int, hi: int, rng: random.Random
) -> list[int]:
    """Log-uniform sizes in [lo, hi]: mostly small, a few near the cap."""
    import math

    out = []
    for _ in range(count):
        x = math.exp(rng.uniform(math.log(lo), math.log(hi)))
        out.append(max(lo, min(hi, int(round(x)))))
    return out


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def hypercube_graph(dim: int) -> Graph:
    n = 1 << dim
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)]
    return build_graph(n, edges)


def spider(leg_lengths: list[int]) -> Tree:
    """Tree with one junction vertex 0 and legs of the given lengths."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_tree(nxt, edges)
