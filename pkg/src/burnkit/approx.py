"""Certified approximation burners and the min-degree pipelines.

Three constructions, each returning a certificate that is re-validated
against the input graph:

* ``unfold_burn``: burn the doubled DFS outline of a spanning tree like a
  path; at most ceil(sqrt(2n)) sparks.
* ``four_thirds_burn``: repeatedly carve a large ball-contained subtree off
  the remainder; radii within {0..ceil(sqrt(4n/3))+1}.
* ``mindeg_burn``: leafy spanning tree, delete leaves, burn the core with
  the four-thirds burner, grow every radius by one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .burning import (
    BurnAssignment,
    BurnCertificate,
    SparkSet,
    coverage,
    is_set_burnable,
    resolve_center_collisions,
    validate,
)
from .errors import GraphError, InternalContradictionError
from .graphs import (
    Graph,
    Tree,
    bfs_tree,
    diameter_and_longest_path,
    eulerian_unfold,
    remove_vertices,
    tree_center,
)
from .util import ceil_sqrt, ceil_sqrt_ratio


# ---------------------------------------------------------------------------
# Unfold burner


def _max_degree_vertex(g: Graph) -> int:
    return max(range(g.n), key=lambda v: (g.degree(v), -v))


def unfold_burn(g: Graph) -> BurnCertificate:
    """Valid certificate with at most ceil(sqrt(2n)) sparks.

    A spanning tree's DFS outline visits at most 2n-1 positions with
    consecutive positions adjacent, so burning the outline like a path with
    radii p-1, ..., 0 placed segment by segment covers the graph.
    """
    n = g.n
    tree = g if isinstance(g, Tree) else bfs_tree(g, _max_degree_vertex(g))
    seq = eulerian_unfold(tree, _max_degree_vertex(tree))
    length = len(seq)
    p = ceil_sqrt(2 * n)
    raw: list[tuple[int, int]] = []
    segment_start = 0
    for r in range(p - 1, -1, -1):
        if segment_start >= length:
            break
        center_pos = min(segment_start + r, length - 1)
        raw.append((r, seq[center_pos]))
        segment_start += 2 * r + 1
    assignment = resolve_center_collisions(g, raw)
    return validate(g, assignment, requested=SparkSet.of(r for r, _ in raw))


# ---------------------------------------------------------------------------
# Subtree index and guaranteed extraction


@dataclass(frozen=True)
class RootedSubtreeIndex:
    """Prefix subtrees T(0) c T(1) c ... along a longest path r_0..r_l.

    The tree is rooted at r_l, so T(j) is everything hanging at spine
    positions <= j.  ``attach[v]`` is the spine position where v's walk to
    the root first meets the path, ``dist_to_spine[v]`` its distance there,
    ``off[j]`` the deepest hang at position j, and ``prefix_size[j]`` the
    size of T(j) (strictly increasing).
    """

    path: tuple[int, ...]
    attach: tuple[int, ...]
    dist_to_spine: tuple[int, ...]
    off: tuple[int, ...]
    prefix_size: tuple[int, ...]

    @classmethod
    def build(cls, t: Tree) -> "RootedSubtreeIndex":
        diam, path = diameter_and_longest_path(t)
        pos = {v: i for i, v in enumerate(path)}
        attach = [-1] * t.n
        dist = [-1] * t.n
        queue = deque()
        for i, v in enumerate(path):
            attach[v] = i
            dist[v] = 0
            queue.append(v)
        while queue:
            u = queue.popleft()
            for w in t.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    attach[w] = attach[u]
                    queue.append(w)
        ell = len(path) - 1
        off = [0] * (ell + 1)
        hang = [0] * (ell + 1)
        for v in range(t.n):
            a = attach[v]
            if dist[v] > off[a]:
                off[a] = dist[v]
            if dist[v] > 0:
                hang[a] += 1
        prefix = []
        total = 0
        for j in range(ell + 1):
            total += 1 + hang[j]
            prefix.append(total)
        return cls(tuple(path), tuple(attach), tuple(dist), tuple(off), tuple(prefix))

    @property
    def diameter(self) -> int:
        return len(self.path) - 1

    def subtree_vertices(self, j: int) -> frozenset[int]:
        return frozenset(v for v in range(len(self.attach)) if self.attach[v] <= j)

    def largest_contained_prefix(self, radius: int) -> int:
        """Largest j <= l-1 with T(j) inside the ball of ``radius`` at
        spine position ``radius``; -1 when even T(0) does not fit.

        For x attached at position tau, d(x, r_b) = |tau - b| + hang depth,
        so T(j) fits iff off[tau] <= tau for tau <= min(j, b) and
        tau + off[tau] <= 2b for b < tau <= j.
        """
        b = radius
        ell = self.diameter
        j = -1
        while j + 1 <= min(b, ell - 1) and self.off[j + 1] <= j + 1:
            j += 1
        if j < b:
            return j
        while j + 1 <= ell - 1 and (j + 1) + self.off[j + 1] <= 2 * b:
            j += 1
        return j


@dataclass(frozen=True)
class SmallDiameter:
    """Outcome when the whole remainder fits in one ball of the top spark."""

    diameter: int


@dataclass(frozen=True)
class ExtractionStep:
    """A carve-off: ball-contained subtree X of guaranteed size whose removal
    keeps the remainder connected."""

    radius: int
    center: int
    extracted: frozenset[int]
    remaining: int
    spark_count: int

    @property
    def min_extracted(self) -> int:
        # Guaranteed lower bound on |X| at this step.
        return self.radius + (self.spark_count - 1) // 2 + 1


ExtractionOutcome = Union[SmallDiameter, ExtractionStep]


def find_extraction(t: Tree, b: SparkSet) -> ExtractionOutcome:
    """Either the remainder has small diameter, or carve a guaranteed-size
    subtree using one of the top half of the sparks.

    Scans spark indices i from k down to floor(k/2) and accepts the first
    whose largest ball-contained prefix subtree reaches size
    b_i + floor(k/2) + 1 (anything smaller is a smoulder).  Exhausting the
    scan is impossible and raises InternalContradictionError.
    """
    radii = b.radii
    k = len(radii) - 1
    if k < 3:
        raise ValueError("find_extraction needs at least 4 sparks")
    index = RootedSubtreeIndex.build(t)
    if index.diameter <= radii[k]:
        return SmallDiameter(index.diameter)
    for i in range(k, k // 2 - 1, -1):
        bi = radii[i]
        j = index.largest_contained_prefix(bi)
        if j < 0:
            continue
        size = index.prefix_size[j]
        if size >= bi + k // 2 + 1:
            return ExtractionStep(
                radius=bi,
                center=index.path[bi],
                extracted=index.subtree_vertices(j),
                remaining=t.n - size,
                spark_count=k + 1,
            )
    raise InternalContradictionError(
        "extraction scan exhausted: every candidate smoulders "
        f"(n={t.n}, radii={radii})"
    )


def four_thirds_burn(
    t: Tree, trace: Optional[list] = None
) -> BurnCertificate:
    """Valid certificate with distinct radii within {0..ceil(sqrt(4n/3))+1}.

    Repeatedly extracts ball-contained subtrees; once the remainder has
    diameter at most the top spark, one central spark finishes it; if the
    spark pool drops below four with vertices left, the exact set-burnability
    oracle must succeed on the remainder (its failure would contradict the
    bound and is surfaced loudly).
    """
    p = ceil_sqrt_ratio(4 * t.n, 3) + 1
    pool = list(range(p + 1))
    cur = t
    orig_of = list(range(t.n))
    raw: list[tuple[int, int]] = []
    while True:
        if len(pool) < 4:
            witness = is_set_burnable(cur, SparkSet(tuple(pool)))
            if witness is None:
                raise InternalContradictionError(
                    f"fallback oracle failed on remainder n={cur.n} "
                    f"with sparks {pool}"
                )
            for r, c in witness.sparks:
                raw.append((r, orig_of[c]))
            if trace is not None:
                trace.append(
                    {"phase": "fallback", "covered": cur.n, "sparks": list(pool)}
                )
            break
        outcome = find_extraction(cur, SparkSet(tuple(pool)))
        if isinstance(outcome, SmallDiameter):
            top = pool[-1]
            center = tree_center(cur)
            raw.append((top, orig_of[center]))
            if trace is not None:
                trace.append(
                    {
                        "phase": "small-diameter",
                        "radius": top,
                        "diameter": outcome.diameter,
                        "covered": cur.n,
                    }
                )
            break
        step = outcome
        raw.append((step.radius, orig_of[step.center]))
        if trace is not None:
            trace.append(
                {
                    "phase": "extract",
                    "radius": step.radius,
                    "extracted": len(step.extracted),
                    "min_extracted": step.min_extracted,
                    "remaining": step.remaining,
                    "spark_count": step.spark_count,
                }
            )
        cur, old_ids = remove_vertices(cur, step.extracted)
        orig_of = [orig_of[o] for o in old_ids]
        pool.remove(step.radius)
    assignment = resolve_center_collisions(t, raw)
    return validate(t, assignment, requested=SparkSet.of(r for r, _ in raw))


# ---------------------------------------------------------------------------
# Leafy spanning trees and the min-degree pipelines


def _leafy_expansion(g: Graph) -> tuple[list[set[int]], list[int]]:
    """Grow a spanning tree expanding at leaves with many outside neighbors.

    Returns (tree adjacency sets, tree degrees).  The priority order (leaf
    with >= 2 outside neighbors; otherwise absorb the unique outside
    neighbor of a live leaf, preferring an internal attach point) amortizes
    to at least (n+5)/4 leaves when every degree is >= 3.
    """
    n = g.n
    root = _max_degree_vertex(g)
    in_tree = bytearray(n)
    tadj: list[set[int]] = [set() for _ in range(n)]
    outside = [0] * n  # neighbors outside the tree, tracked for tree vertices

    def add(host: int, w: int) -> None:
        in_tree[w] = 1
        tadj[host].add(w)
        tadj[w].add(host)
        cnt = 0
        for z in g.adj[w]:
            if in_tree[z]:
                outside[z] -= 1
            else:
                cnt += 1
        outside[w] = cnt

    in_tree[root] = 1
    outside[root] = g.degree(root)
    for w in g.adj[root]:
        add(root, w)
    size = 1 + g.degree(root)

    while size < n:
        leaves = [v for v in range(n) if in_tree[v] and len(tadj[v]) == 1]
        rich = [v for v in leaves if outside[v] >= 2]
        if rich:
            x = min(rich)
            for w in sorted(g.adj[x]):
                if not in_tree[w]:
                    add(x, w)
                    size += 1
            continue
        live = [v for v in leaves if outside[v] == 1]
        if live:
            x = min(live)
            y = next(w for w in g.adj[x] if not in_tree[w])
            y_out = sum(1 for z in g.adj[y] if not in_tree[z])
            if y_out >= 2:
                add(x, y)
                size += 1
                for z in sorted(g.adj[y]):
                    if not in_tree[z]:
                        add(y, z)
                        size += 1
                continue
            internal = [
                u for u in g.adj[y] if in_tree[u] and len(tadj[u]) != 1
            ]
            host = min(internal) if internal else x
            add(host, y)
            size += 1
            continue
        # No live leaves: extend from an internal vertex.
        u = min(
            v for v in range(n) if in_tree[v] and outside[v] > 0
        )
        y = min(w for w in g.adj[u] if not in_tree[w])
        add(u, y)
        size += 1

    return tadj, [len(tadj[v]) for v in range(n)]


def _leaf_target(n: int, min_degree: int) -> tuple[int, int]:
    """Leaf bound as an exact rational: (num, den) with leaves*den >= num."""
    if min_degree == 3:
        return n + 4, 4  # leaves >= n/4 + 1
    return 2 * n + 8, 5  # leaves >= (2n+8)/5


def _improve_leaves(g: Graph, tadj: list[set[int]], target_num: int, target_den: int) -> None:
    """Edge swaps that strictly increase the leaf count, applied until the
    exact target leaves*den >= num is met (or no improving swap exists)."""
    n = g.n

    def leaf_count() -> int:
        return sum(1 for v in range(n) if len(tadj[v]) == 1)

    def tree_path(a: int, b: int) -> list[int]:
        parent = {a: a}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                break
            for w in tadj[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        return path

    leaves = leaf_count()
    while leaves * target_den < target_num:
        improved = False
        for a in range(n):
            for bb in g.adj[a]:
                if bb <= a or bb in tadj[a]:
                    continue
                cycle = tree_path(a, bb)
                for c, d in zip(cycle, cycle[1:]):
                    affected = {a, bb, c, d}
                    delta = 0
                    for v in affected:
                        before = len(tadj[v])
                        after = before + (v in (a, bb)) - (v in (c, d))
                        delta += (after == 1) - (before == 1)
                    if delta > 0:
                        tadj[c].discard(d)
                        tadj[d].discard(c)
                        tadj[a].add(bb)
                        tadj[bb].add(a)
                        leaves += delta
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
        if not improved:
            break


def leafy_spanning_tree(g: Graph, min_degree: int) -> Tree:
    """Spanning tree with provably many leaves for min-degree 3 or 4 graphs.

    Guarantees leaves >= n/4 + 1 (min_degree 3) and >= (2n+8)/5
    (min_degree 4), checked exactly.
    """
    if min_degree not in (3, 4):
        raise ValueError("min_degree must be 3 or 4")
    bad = [v for v in range(g.n) if g.degree(v) < min_degree]
    if bad:
        raise GraphError(
            f"vertex {bad[0]} has degree {g.degree(bad[0])} < {min_degree}"
        )
    tadj, _ = _leafy_expansion(g)
    num, den = _leaf_target(g.n, min_degree)
    _improve_leaves(g, tadj, num, den)
    tree = Tree(g.n, tuple(tuple(sorted(tadj[u])) for u in range(g.n)))
    leaves = sum(1 for v in range(g.n) if tree.degree(v) == 1)
    if leaves * den < num:
        raise InternalContradictionError(
            f"leafy tree has {leaves} leaves, below the guaranteed bound "
            f"{num}/{den} (n={g.n}, min_degree={min_degree})"
        )
    return tree


def degree4_threshold(limit: int = 10**6) -> int:
    """Smallest n0 such that ceil(sqrt((4/3)((3n-8)/5))) + 2 <= ceil(sqrt(n))
    for every n >= n0, by direct scan up to limit."""
    last_violation = 0
    for n in range(5, limit + 1):
        lhs = ceil_sqrt_ratio(12 * n - 32, 15) + 2
        if lhs > ceil_sqrt(n):
            last_violation = n
    return last_violation + 1


def mindeg_burn(g: Graph, min_degree: int) -> BurnCertificate:
    """Burn a min-degree-3 or -4 graph through a leaf-deleted leafy tree.

    Builds a leafy spanning tree T, deletes its leaves, burns the core with
    the four-thirds burner, then raises every radius by one; any leaf sits
    next to a covered internal vertex, so the lifted balls cover everything.
    Length is at most ceil(sqrt(n))+2 for min_degree 3, and at most
    ceil(sqrt(n)) for min_degree 4 once n >= degree4_threshold().
    """
    tree = leafy_spanning_tree(g, min_degree)
    leaves = [v for v in range(tree.n) if tree.degree(v) == 1]
    if tree.n - len(leaves) <= 1:
        # Star-like tree: its single internal vertex reaches everything.
        center = next(v for v in range(tree.n) if tree.degree(v) != 1)
        assignment = BurnAssignment.of([(1, center)])
        return validate(g, assignment)
    core, old_ids = remove_vertices(tree, leaves)
    core_cert = four_thirds_burn(core)
    raw = [(r + 1, old_ids[c]) for r, c in core_cert.assignment.sparks]
    lifted = resolve_center_collisions(g, raw)
    cert = validate(g, lifted, requested=SparkSet.of(r for r, _ in raw))
    if not cert.valid:
        # The radius-0 spark is unused after the shift; spend it on a gap.
        gap = min(set(range(g.n)) - coverage(g, lifted.sparks))
        lifted = resolve_center_collisions(g, list(lifted.sparks) + [(0, gap)])
        cert = validate(g, lifted)
    return cert
