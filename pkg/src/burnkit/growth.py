"""Growth (distance to a best-covering path), spine extraction, and the
burning-set predicate for trees.

The growth of a tree is the smallest k such that every vertex lies within
distance k of some path; trees of growth <= k are the k-caterpillars.
Growth is computed by iterated leaf pruning, which is validated against a
brute-force oracle on every small tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BurnkitError, CapExceededError
from .graphs import PathWitness, Tree, all_pairs_distances

GROWTH_ORACLE_CAP = 14


@dataclass(frozen=True)
class GrowthCertificate:
    """Growth value with a witness spine and the distance-to-spine table."""

    growth: int
    spine: PathWitness
    dist_to_spine: tuple[int, ...]

    def __post_init__(self) -> None:
        if max(self.dist_to_spine) != self.growth:
            raise BurnkitError("distance table does not realize the growth")


def _is_path_subgraph(degree: dict[int, int]) -> bool:
    """Whether the (alive) degrees describe a simple path or a single vertex."""
    n = len(degree)
    if n <= 2:
        return True
    ones = sum(1 for d in degree.values() if d == 1)
    twos = sum(1 for d in degree.values() if d == 2)
    return ones == 2 and twos == n - 2


def growth_of(t: Tree) -> GrowthCertificate:
    """Growth by iterated leaf pruning.

    Delete all leaves simultaneously until the remainder is a path; the
    number of rounds is the growth and the surviving path is a spine.  The
    rounds strictly decrease distances to the survivor set (a pruned vertex
    always keeps a surviving neighbor one round longer), so every vertex ends
    within round-count distance of the spine.
    """
    alive = set(range(t.n))
    degree = {v: t.degree(v) for v in range(t.n)}
    rounds = 0
    while not _is_path_subgraph(degree):
        leaves = [v for v in alive if degree[v] <= 1]
        for v in leaves:
            alive.discard(v)
            del degree[v]
            for w in t.adj[v]:
                if w in alive:
                    degree[w] -= 1
        rounds += 1

    spine = _order_survivor_path(t, alive, degree)
    dist = _distances_to_set(t, spine)
    return GrowthCertificate(rounds, spine, tuple(dist))


def _order_survivor_path(t: Tree, alive: set[int], degree: dict[int, int]) -> PathWitness:
    if len(alive) == 1:
        return (next(iter(alive)),)
    ends = sorted(v for v in alive if degree[v] == 1)
    start = ends[0]  # lexicographically smallest sequence
    order = [start]
    prev = -1
    cur = start
    while True:
        nxt = [w for w in t.adj[cur] if w in alive and w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return tuple(order)


def _distances_to_set(t: Tree, sources) -> list[int]:
    dist = [-1] * t.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in t.adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def growth_oracle(t: Tree, cap: int = GROWTH_ORACLE_CAP) -> int:
    """Exact growth by exhausting all simple paths (unique per vertex pair).

    For a tree, the distance of w to the u-v path is
    (d(w,u) + d(w,v) - d(u,v)) / 2, so the scan is cubic.
    """
    if t.n > cap:
        raise CapExceededError(f"n={t.n} exceeds growth-oracle cap {cap}")
    dist = all_pairs_distances(t)
    best = t.n
    for u in range(t.n):
        du = dist[u]
        for v in range(u, t.n):
            dv = dist[v]
            duv = du[v]
            worst = 0
            for w in range(t.n):
                dw = (du[w] + dv[w] - duv) // 2
                if dw > worst:
                    worst = dw
            if worst < best:
                best = worst
    return best


def is_burning_set(t: Tree, b) -> bool:
    """Whether b contains {0..k} for k the growth of t and its total ball
    budget sum(2i+1) reaches n."""
    k = growth_of(t).growth
    radii = set(b)
    if not all(i in radii for i in range(k + 1)):
        return False
    return sum(2 * i + 1 for i in radii) >= t.n
