"""Path reduction for trees: shrink the instance along a path, burn the
smaller tree, then lift the schedule back with one extra spark.

Given a path P with endpoints u, v, the components of T minus the path
interior containing u and v form T1 and T2; the reduced tree is T1 u T2
plus the edge uv.  Whenever d(u,v) + 2*max_dist(P, rest) <= 2p + 2, any
assignment burning the reduced tree without its top spark p lifts to one
burning T: the top spark lands on a path position chosen so that its ball
mops up everything the contracted edge used to hide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .burning import (
    BurnAssignment,
    SparkSet,
    is_set_burnable,
    resolve_center_collisions,
    validate,
)
from .errors import GraphError, InternalContradictionError
from .graphs import (
    PathWitness,
    Tree,
    bfs_distances,
    build_tree,
    diameter_and_longest_path,
    is_simple_path,
    tree_path,
)


@dataclass(frozen=True)
class ReductionInstance:
    """Everything the lift needs: the split, the reduced tree, id maps, and
    the interior geometry (attach positions and depths off the path)."""

    tree: Tree
    path: PathWitness
    u: int
    v: int
    t1: frozenset[int]
    t2: frozenset[int]
    tp: frozenset[int]
    reduced: Tree
    orig_of_reduced: tuple[int, ...]
    d: int
    m: int
    attach_pos: tuple[int, ...]  # path position whose hang contains x (-1 off)
    dist_to_path: tuple[int, ...]


def build_reduction(t: Tree, path: PathWitness) -> ReductionInstance:
    """Split t along a simple path and build the reduced tree with id maps."""
    path = tuple(path)
    if len(path) < 2:
        raise GraphError("reduction path needs at least two vertices")
    if not is_simple_path(t, path):
        raise GraphError("reduction path is not a simple path of the tree")
    u, v = path[0], path[-1]
    d = len(path) - 1
    interior = set(path[1:-1])

    def component(start: int) -> frozenset[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for w in t.adj[x]:
                if w not in interior and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)

    t1 = component(u)
    t2 = component(v)
    tp = frozenset(range(t.n)) - (t1 | t2)

    # Distance and attach position of every vertex relative to the path.
    pos = {x: i for i, x in enumerate(path)}
    dist = [-1] * t.n
    attach = [-1] * t.n
    queue = deque()
    for i, x in enumerate(path):
        dist[x] = 0
        attach[x] = i
        queue.append(x)
    while queue:
        x = queue.popleft()
        for w in t.adj[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                attach[w] = attach[x]
                queue.append(w)
    m = max((dist[x] for x in tp), default=0)

    keep = sorted(t1 | t2)
    new_of_old = {old: new for new, old in enumerate(keep)}
    edges = {
        (new_of_old[a], new_of_old[b])
        for a, b in t.edges()
        if a in new_of_old and b in new_of_old
    }
    uv = (new_of_old[u], new_of_old[v])
    edges.add((min(uv), max(uv)))
    reduced = build_tree(len(keep), sorted(edges))

    return ReductionInstance(
        tree=t,
        path=path,
        u=u,
        v=v,
        t1=t1,
        t2=t2,
        tp=tp,
        reduced=reduced,
        orig_of_reduced=tuple(keep),
        d=d,
        m=m,
        attach_pos=tuple(attach),
        dist_to_path=tuple(dist),
    )


def reduction_applicable(inst: ReductionInstance, p: int) -> bool:
    """The lift works iff d(u,v) + 2*max_dist <= 2p + 2."""
    if p < 0:
        raise GraphError("p must be non-negative")
    return inst.d + 2 * inst.m <= 2 * p + 2


def lift_assignment(
    inst: ReductionInstance, b: SparkSet, reduced_assignment: BurnAssignment
) -> BurnAssignment:
    """Lift an assignment of the reduced tree for B minus its top spark p to
    an assignment of the original tree for all of B.

    The placed sparks keep their vertices.  The top spark goes on the path:
    with val the largest (radius - distance to {u,v}) over placed sparks,
    every cross-covered vertex sits within val-1 of the far endpoint and
    every interior vertex missed by the val-spark constrains the position by
    |pos - q| <= p - depth.  The applicability inequality makes these
    one-dimensional constraints pairwise compatible, so a feasible position
    always exists; the closed-form position d - (p - (val-1)) is clamped
    into the feasible interval.
    """
    p = b.max_radius
    rest = b.without(p)
    if set(reduced_assignment.radii) != set(rest.radii):
        raise GraphError("reduced assignment must use exactly B minus max B")
    if not validate(inst.reduced, reduced_assignment).valid:
        raise GraphError("reduced assignment does not burn the reduced tree")
    if not reduction_applicable(inst, p):
        raise GraphError("reduction inequality fails; lift not guaranteed")

    t = inst.tree
    translated = [
        (r, inst.orig_of_reduced[c]) for r, c in reduced_assignment.sparks
    ]
    du = bfs_distances(t, inst.u)
    dv = bfs_distances(t, inst.v)

    val = -1
    val_center = inst.u
    for r, c in sorted(translated):  # ascending radius; later wins ties
        value = r - min(du[c], dv[c])
        if value >= val:
            val = value
            val_center = c
    side_is_u = du[val_center] <= dv[val_center]

    d = inst.d

    def oriented(posx: int) -> int:
        return posx if side_is_u else d - posx

    lo, hi = 0, d
    if val >= 1:
        lo = max(lo, d + val - 1 - p)
    for w in inst.tp:
        r_w = oriented(inst.attach_pos[w])
        depth_w = inst.dist_to_path[w]
        if r_w + depth_w > val:  # missed by the val-spark
            lo = max(lo, r_w - (p - depth_w))
            hi = min(hi, r_w + (p - depth_w))
    if lo > hi:
        raise InternalContradictionError(
            f"no feasible top-spark position (d={d}, m={inst.m}, p={p}, val={val})"
        )
    q = min(max(d - (p - (val - 1)), lo), hi)
    assert 0 <= q <= d  # the feasible interval lives on the path
    ordered_path = inst.path if side_is_u else tuple(reversed(inst.path))
    raw = translated + [(p, ordered_path[q])]
    assignment = resolve_center_collisions(t, raw)
    cert = validate(t, assignment)
    if not cert.valid:
        raise InternalContradictionError(
            f"lifted assignment misses {t.n - cert.covered} vertices "
            f"(d={d}, m={inst.m}, p={p}, val={val}, q={q})"
        )
    return assignment


def lift_classic_assignment(
    inst: ReductionInstance, p: int, reduced_assignment: BurnAssignment
) -> BurnAssignment:
    """Burning-number form: a p-step schedule of the reduced tree becomes a
    (p+1)-step schedule of the original (radii {0..p-1} -> {0..p})."""
    return lift_assignment(inst, SparkSet(tuple(range(p + 1))), reduced_assignment)


@dataclass(frozen=True)
class ReductionTrace:
    """Chain of reductions ending at an exact-oracle base case."""

    instance: Optional[ReductionInstance]
    assignment: BurnAssignment
    sub: Optional["ReductionTrace"]

    def depth(self) -> int:
        return 0 if self.sub is None else 1 + self.sub.depth()


def _candidate_paths(t: Tree) -> list[PathWitness]:
    from .growth import growth_of

    endpoints: set[int] = set()
    _, diam_path = diameter_and_longest_path(t)
    endpoints.update((diam_path[0], diam_path[-1]))
    spine = growth_of(t).spine
    endpoints.update((spine[0], spine[-1]))
    pts = sorted(endpoints)
    paths = []
    seen = set()
    for i, a in enumerate(pts):
        for bb in pts[i + 1 :]:
            path = tree_path(t, a, bb)
            if len(path) >= 2 and path not in seen:
                seen.add(path)
                paths.append(path)
    return paths


def search_reduction(t: Tree, b: SparkSet) -> Optional[ReductionTrace]:
    """Recursive prover: find a path whose reduction applies, burn the reduced
    tree for B minus max B (recursively, bottoming out at the exact oracle),
    and lift.  Absence of a chain is a normal outcome, not an error."""
    if len(b) == 0:
        return None
    p = b.max_radius
    rest = b.without(p)
    if len(rest) > 0:
        for path in _candidate_paths(t):
            inst = build_reduction(t, path)
            if not reduction_applicable(inst, p):
                continue
            sub = search_reduction(inst.reduced, rest)
            if sub is None:
                continue
            lifted = lift_assignment(inst, b, sub.assignment)
            return ReductionTrace(inst, lifted, sub)
    witness = is_set_burnable(t, b)
    if witness is not None and set(witness.radii) == set(b.radii):
        return ReductionTrace(None, witness, None)
    return None
