"""Non-isomorphic free-tree enumeration and its independent counting oracles.

The enumerator generates canonical rooted level sequences with the classic
successor algorithm (each subtree's sequence in non-increasing lexicographic
order), then keeps exactly one center-rooted representative per free tree.
Two independent oracles back it: exhaustive Prufer-code decoding with
isomorphism dedup (desk scale), and the rooted/free counting recurrences.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import CapExceededError
from .graphs import Tree, build_tree

ENUMERATION_CAP = 18
_PRUFER_PY_CAP = 8  # pure-python oracle; larger n dispatches to the jit path


def level_successor(levels: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Next canonical rooted level sequence (root level 0), or None at the end."""
    n = len(levels)
    p = -1
    for i in range(n - 1, -1, -1):
        if levels[i] >= 2:
            p = i
            break
    if p < 0:
        return None
    q = -1
    for i in range(p - 1, -1, -1):
        if levels[i] == levels[p] - 1:
            q = i
            break
    out = list(levels[:p])
    span = p - q
    for i in range(p, n):
        out.append(out[i - span])
    return tuple(out)


def rooted_level_sequences(
    n: int, start: Optional[Sequence[int]] = None
) -> Iterator[tuple[int, ...]]:
    """All canonical rooted level sequences on n vertices, from start onward."""
    if n == 1:
        if start is None or tuple(start) == (0,):
            yield (0,)
        return
    cur: Optional[tuple[int, ...]] = (
        tuple(range(n)) if start is None else tuple(start)
    )
    while cur is not None:
        yield cur
        cur = level_successor(cur)


def tree_from_levels(levels: Sequence[int]) -> Tree:
    """Rooted tree whose preorder depth sequence is the given levels."""
    parent_at: dict[int, int] = {0: 0}
    edges = []
    for i in range(1, len(levels)):
        lev = levels[i]
        edges.append((parent_at[lev - 1], i))
        parent_at[lev] = i
    return build_tree(len(levels), edges, root=0)


def _adj_from_levels(levels: Sequence[int]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in levels]
    parent_at = {0: 0}
    for i in range(1, len(levels)):
        p = parent_at[levels[i] - 1]
        adj[p].append(i)
        adj[i].append(p)
        parent_at[levels[i]] = i
    return adj


def _centers(adj: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Tree centers by simultaneous leaf pruning."""
    n = len(adj)
    if n <= 2:
        return tuple(range(n))
    degree = [len(row) for row in adj]
    removed = [False] * n
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        for v in layer:
            removed[v] = True
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                if not removed[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(v for v in range(n) if not removed[v]))


def canonical_seq(adj: Sequence[Sequence[int]], root: int) -> tuple[int, ...]:
    """Lex-greatest preorder depth sequence of the tree rooted at root."""

    def rec(v: int, parent: int, depth: int) -> tuple[int, ...]:
        subs = sorted(
            (rec(w, v, depth + 1) for w in adj[v] if w != parent), reverse=True
        )
        out = [depth]
        for s in subs:
            out.extend(s)
        return tuple(out)

    return rec(root, -1, 0)


def _is_free_canonical(levels: tuple[int, ...], adj: list[list[int]]) -> bool:
    """Keep one rooted representative per free tree: root at a center, and for
    bicentral trees the lexicographically larger of the two rootings."""
    centers = _centers(adj)
    if 0 not in centers:
        return False
    if len(centers) == 1:
        return True
    other = centers[0] if centers[1] == 0 else centers[1]
    return levels >= canonical_seq(adj, other)


def canonical_key(adj: Sequence[Sequence[int]]):
    """Isomorphism-invariant key of a free tree (center-rooted canonical form)."""
    centers = _centers(adj)
    if len(centers) == 1:
        return (1, canonical_seq(adj, centers[0]))
    forms = sorted(
        (canonical_seq(adj, centers[0]), canonical_seq(adj, centers[1])),
        reverse=True,
    )
    return (2, forms[0], forms[1])


@dataclass
class TreeEnumeration:
    """Stream of canonical non-isomorphic free trees on n vertices."""

    n: int
    growth_at_most: Optional[int] = None
    start: Optional[tuple[int, ...]] = None

    def items(self) -> Iterator[tuple[tuple[int, ...], Tree]]:
        from .growth import growth_of

        for levels in rooted_level_sequences(self.n, self.start):
            adj = _adj_from_levels(levels)
            if not _is_free_canonical(levels, adj):
                continue
            tree = build_tree(self.n, [(u, v) for u in range(self.n) for v in adj[u] if u < v], root=0)
            if self.growth_at_most is not None:
                if growth_of(tree).growth > self.growth_at_most:
                    continue
            yield levels, tree

    def __iter__(self) -> Iterator[Tree]:
        for _, tree in self.items():
            yield tree

    def count(self) -> int:
        return sum(1 for _ in self)


def enumerate_trees(
    n: int,
    growth_at_most: Optional[int] = None,
    start: Optional[Sequence[int]] = None,
    cap: int = ENUMERATION_CAP,
    override: bool = False,
) -> TreeEnumeration:
    if n > cap and not override:
        raise CapExceededError(f"n={n} exceeds enumeration cap {cap}")
    if n < 1:
        raise ValueError("n must be positive")
    return TreeEnumeration(n, growth_at_most, tuple(start) if start else None)


# ---------------------------------------------------------------------------
# Prufer machinery


def decode_prufer(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of the labeled tree on len(seq)+2 vertices with this Prufer code."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def _count_prufer_python(n: int) -> int:
    keys = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = decode_prufer(seq)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        keys.add(canonical_key(adj))
    return len(keys)


def count_trees_prufer(n: int, force_python: bool = False) -> int:
    """Number of non-isomorphic trees on n vertices by exhaustive Prufer-code
    decoding and isomorphism dedup.

    Independent of the level-sequence enumerator.  Dispatches to a
    numba-compiled kernel for n >= 9 (n=10 walks all 10^8 labeled trees).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 3:
        return 1
    if force_python or n <= _PRUFER_PY_CAP:
        return _count_prufer_python(n)
    from ._prufer_fast import count_trees_prufer_fast

    return count_trees_prufer_fast(n)


# ---------------------------------------------------------------------------
# Counting recurrences (second independent oracle, no enumeration at all)


def rooted_tree_counts(n_max: int) -> list[int]:
    """r[n] = number of rooted trees on n unlabeled vertices, r[0] unused."""
    r = [0] * (n_max + 1)
    if n_max >= 1:
        r[1] = 1
    s = [0] * (n_max + 1)
    for n in range(2, n_max + 1):
        j = n - 1
        s[j] = sum(d * r[d] for d in range(1, j + 1) if j % d == 0)
        total = sum(s[j] * r[n - j] for j in range(1, n))
        r[n] = total // (n - 1)
    return r


def free_tree_counts(n_max: int) -> list[int]:
    """t[n] = number of free trees, via the rooted counts (dissimilarity)."""
    r = rooted_tree_counts(n_max)
    t = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        pair_sum = sum(r[i] * r[n - i] for i in range(1, n))
        half = r[n // 2] if n % 2 == 0 else 0
        t[n] = r[n] - (pair_sum - half) // 2
    return t
