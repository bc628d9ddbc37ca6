"""Immutable connected simple graphs and trees, with the distance and
traversal primitives every other module builds on.

Vertices are dense 0-indexed integers.  Graphs are validated eagerly at
construction (simple, undirected, connected), so downstream algorithms never
re-check connectivity.  Removal operations return an id-remapping table so
certificates computed on a shrunken tree can be translated back.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    GraphError,
    NotATreeError,
    SelfLoopError,
    VertexRangeError,
)

# An ordered vertex list forming a simple path in a host graph.
PathWitness = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph given by sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("graphs must have at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length differs from vertex count")
        for u, row in enumerate(self.adj):
            prev = -1
            for v in row:
                if not 0 <= v < self.n:
                    raise VertexRangeError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise SelfLoopError(f"self-loop at vertex {u}")
                if v <= prev:
                    raise DuplicateEdgeError(
                        f"adjacency of {u} not strictly increasing at {v}"
                    )
                prev = v
        m2 = sum(len(row) for row in self.adj)
        if m2 % 2 != 0:
            raise GraphError("asymmetric adjacency")
        # Symmetry: every arc must have its reverse.
        arcs = {(u, v) for u, row in enumerate(self.adj) for v in row}
        for u, v in arcs:
            if (v, u) not in arcs:
                raise GraphError(f"edge {u}-{v} missing its reverse arc")
        if not _is_connected(self.adj):
            raise DisconnectedError("graph is not connected")

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield (u, v)


@dataclass(frozen=True)
class Tree(Graph):
    """A Graph with exactly n-1 edges; optionally rooted."""

    root: Optional[int] = None

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.m != self.n - 1:
            raise NotATreeError(f"{self.m} edges on {self.n} vertices is not a tree")
        if self.root is not None and not 0 <= self.root < self.n:
            raise VertexRangeError(f"root {self.root} out of range")


def _is_connected(adj: Sequence[Sequence[int]]) -> bool:
    n = len(adj)
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == n


def _adjacency_from_edges(n: int, edges: Iterable[tuple[int, int]]):
    rows: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
        seen.add(key)
        rows[u].append(v)
        rows[v].append(u)
    return tuple(tuple(sorted(row)) for row in rows)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a connected simple Graph from an edge list."""
    return Graph(n, _adjacency_from_edges(n, edges))


def build_tree(n: int, edges: Iterable[tuple[int, int]], root: Optional[int] = None) -> Tree:
    return Tree(n, _adjacency_from_edges(n, edges), root)


def as_tree(g: Graph, root: Optional[int] = None) -> Tree:
    """Reinterpret a graph as a tree (raises NotATreeError if m != n-1)."""
    if isinstance(g, Tree) and g.root == root:
        return g
    return Tree(g.n, g.adj, root)


def path_graph(n: int) -> Tree:
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Tree:
    """Star K_{1,leaves} with the center at vertex 0."""
    return build_tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source to every vertex (graph is connected)."""
    if not 0 <= source < g.n:
        raise VertexRangeError(f"source {source} out of range")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_parents(g: Graph, source: int) -> list[int]:
    """BFS parent of every vertex (source maps to itself)."""
    parent = [-1] * g.n
    parent[source] = source
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if parent[v] < 0:
                parent[v] = u
                queue.append(v)
    return parent


def bfs_tree(g: Graph, root: int) -> Tree:
    """BFS spanning tree of g rooted at root."""
    parent = bfs_parents(g, root)
    edges = [(v, parent[v]) for v in range(g.n) if v != root]
    return build_tree(g.n, edges, root)


def all_pairs_distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def ball(g: Graph, center: int, radius: int) -> set[int]:
    """All vertices within hop distance <= radius of center (inclusive)."""
    if not 0 <= center < g.n:
        raise VertexRangeError(f"center {center} out of range")
    if radius < 0:
        raise GraphError("radius must be non-negative")
    out = {center}
    frontier = [center]
    adj = g.adj
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in out:
                    out.add(v)
                    nxt.append(v)
        if not nxt:
            break
        frontier = nxt
    return out


def _farthest(g: Graph, source: int) -> tuple[int, list[int], list[int]]:
    """(farthest vertex, dist table, parent table); ties -> smallest id."""
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    parent[source] = source
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                parent[v] = u
                queue.append(v)
    best = 0
    for v in range(1, g.n):
        if dist[v] > dist[best]:
            best = v
    return best, dist, parent


def diameter_and_longest_path(t: Tree) -> tuple[int, PathWitness]:
    """Exact diameter of a tree and a witness path (double-BFS method)."""
    a, _, _ = _farthest(t, 0)
    b, dist, parent = _farthest(t, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return dist[b], tuple(path)


def tree_centers(t: Tree) -> tuple[int, ...]:
    """The one or two middle vertices of a longest path (tree centers)."""
    d, path = diameter_and_longest_path(t)
    if d % 2 == 0:
        return (path[d // 2],)
    pair = sorted((path[d // 2], path[d // 2 + 1]))
    return tuple(pair)


def tree_center(t: Tree) -> int:
    """A deterministic center: smallest id among the centers."""
    return min(tree_centers(t))


def tree_path(t: Tree, u: int, v: int) -> PathWitness:
    """The unique simple path from u to v in a tree."""
    parent = bfs_parents(t, u)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def is_simple_path(g: Graph, vertices: Sequence[int]) -> bool:
    """True iff vertices form a simple path in g (consecutive adjacency)."""
    if len(vertices) == 0:
        return False
    if len(set(vertices)) != len(vertices):
        return False
    for u in vertices:
        if not 0 <= u < g.n:
            return False
    for u, v in zip(vertices, vertices[1:]):
        if v not in g.adj[u]:
            return False
    return True


def eulerian_unfold(t: Tree, root: int) -> list[int]:
    """DFS visit sequence of a tree, with repetition on backtracking.

    Traverses each edge twice, so the sequence has length 2n-1; consecutive
    entries are adjacent in the tree and every vertex appears at least once.
    Iterative so that path-shaped trees of any size do not hit the recursion
    limit.
    """
    if not 0 <= root < t.n:
        raise VertexRangeError(f"root {root} out of range")
    seq = [root]
    # Stack holds (vertex, iterator position) pairs.
    iters = [iter(t.adj[root])]
    stack = [root]
    seen = bytearray(t.n)
    seen[root] = 1
    while stack:
        u = stack[-1]
        advanced = False
        for v in iters[-1]:
            if not seen[v]:
                seen[v] = 1
                seq.append(v)
                stack.append(v)
                iters.append(iter(t.adj[v]))
                advanced = True
                break
        if not advanced:
            stack.pop()
            iters.pop()
            if stack:
                seq.append(stack[-1])
    return seq


def remove_vertices(t: Tree, drop: Iterable[int]) -> tuple[Tree, tuple[int, ...]]:
    """Induced subtree on V minus drop, plus the old-id table of the new tree.

    The remainder must be nonempty and connected; entry i of the returned
    table is the original id of new vertex i.
    """
    dropped = set(drop)
    for v in dropped:
        if not 0 <= v < t.n:
            raise VertexRangeError(f"vertex {v} out of range")
    keep = [v for v in range(t.n) if v not in dropped]
    if not keep:
        raise GraphError("removal would empty the tree")
    new_of_old = {old: new for new, old in enumerate(keep)}
    edges = [
        (new_of_old[u], new_of_old[v])
        for u, v in t.edges()
        if u not in dropped and v not in dropped
    ]
    if len(edges) != len(keep) - 1:
        raise DisconnectedError("removal disconnects the tree")
    # Edge count n-1 plus acyclicity (inherited) implies connectivity, but the
    # Tree constructor re-checks it anyway.
    return build_tree(len(keep), edges), tuple(keep)
