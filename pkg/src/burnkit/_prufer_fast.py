"""Numba kernel for the exhaustive Prufer-dedup tree-counting oracle.

Walks every Prufer sequence on n vertices (n^(n-2) labeled trees), computes
an isomorphism-invariant key per tree (center-rooted canonical form packed
into an int64), and counts distinct keys in a small open-addressing table.
Only worth compiling for n >= 9; n = 10 visits 10^8 sequences.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_TABLE_BITS = 14  # 16384 slots; distinct free trees at n=10 is 106


@njit(cache=True)
def _subtree_code(adj, deg, root, n, parent, order, depth, code, clen, child_codes):
    """Canonical int code of the tree rooted at root.

    Children are ordered by (bit length, value) of their codes, which is
    isomorphism-invariant.  code(leaf) = 0b10; code(v) = 1 . children . 0.
    """
    # BFS to get parent/order/depth.
    order[0] = root
    parent[root] = -1
    depth[root] = 0
    head = 0
    tail = 1
    while head < tail:
        u = order[head]
        head += 1
        for j in range(deg[u]):
            w = adj[u, j]
            if w != parent[u]:
                parent[w] = u
                depth[w] = depth[u] + 1
                order[tail] = w
                tail += 1
    # Process deepest-first so children are ready before their parent.
    for idx in range(n - 1, -1, -1):
        v = order[idx]
        nchild = 0
        for j in range(deg[v]):
            w = adj[v, j]
            if w != root and parent[w] == v:
                child_codes[nchild, 0] = clen[w]
                child_codes[nchild, 1] = code[w]
                nchild += 1
        # Insertion sort, descending by (length, value).
        for a in range(1, nchild):
            kl = child_codes[a, 0]
            kv = child_codes[a, 1]
            b = a - 1
            while b >= 0 and (
                child_codes[b, 0] < kl
                or (child_codes[b, 0] == kl and child_codes[b, 1] < kv)
            ):
                child_codes[b + 1, 0] = child_codes[b, 0]
                child_codes[b + 1, 1] = child_codes[b, 1]
                b -= 1
            child_codes[b + 1, 0] = kl
            child_codes[b + 1, 1] = kv
        val = np.int64(1)
        length = np.int64(1)
        for a in range(nchild):
            val = (val << child_codes[a, 0]) | child_codes[a, 1]
            length += child_codes[a, 0]
        val = val << 1
        length += 1
        code[v] = val
        clen[v] = length
    return code[root]


@njit(cache=True)
def count_trees_prufer_kernel(n):
    total = np.int64(1)
    for _ in range(n - 2):
        total *= n

    seq = np.zeros(n - 2, dtype=np.int64)
    degree = np.empty(n, dtype=np.int64)
    adj = np.empty((n, n), dtype=np.int64)
    deg = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    depth = np.empty(n, dtype=np.int64)
    code = np.empty(n, dtype=np.int64)
    clen = np.empty(n, dtype=np.int64)
    child_codes = np.empty((n, 2), dtype=np.int64)
    prune_deg = np.empty(n, dtype=np.int64)
    removed = np.empty(n, dtype=np.bool_)
    layer = np.empty(n, dtype=np.int64)
    nxt = np.empty(n, dtype=np.int64)

    cap = 1 << _TABLE_BITS
    mask = cap - 1
    table = np.zeros(cap, dtype=np.int64)
    distinct = 0

    for _ in range(total):
        # Decode the Prufer sequence into adjacency lists.
        for v in range(n):
            degree[v] = 1
            deg[v] = 0
        for i in range(n - 2):
            degree[seq[i]] += 1
        ptr = 0
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
        for i in range(n - 2):
            x = seq[i]
            adj[leaf, deg[leaf]] = x
            deg[leaf] += 1
            adj[x, deg[x]] = leaf
            deg[x] += 1
            degree[x] -= 1
            if degree[x] == 1 and x < ptr:
                leaf = x
            else:
                ptr += 1
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
        adj[leaf, deg[leaf]] = n - 1
        deg[leaf] += 1
        adj[n - 1, deg[n - 1]] = leaf
        deg[n - 1] += 1

        # Centers by simultaneous leaf pruning.
        nl = 0
        for v in range(n):
            prune_deg[v] = deg[v]
            removed[v] = False
            if deg[v] == 1:
                layer[nl] = v
                nl += 1
        remaining = n
        while remaining > 2:
            for i in range(nl):
                removed[layer[i]] = True
            remaining -= nl
            nn = 0
            for i in range(nl):
                v = layer[i]
                for j in range(deg[v]):
                    w = adj[v, j]
                    if not removed[w]:
                        prune_deg[w] -= 1
                        if prune_deg[w] == 1:
                            nxt[nn] = w
                            nn += 1
            for i in range(nn):
                layer[i] = nxt[i]
            nl = nn
        c1 = -1
        c2 = -1
        for v in range(n):
            if not removed[v]:
                if c1 < 0:
                    c1 = v
                else:
                    c2 = v

        if c2 < 0:
            key = _subtree_code(
                adj, deg, c1, n, parent, order, depth, code, clen, child_codes
            ) + np.int64(1)
        else:
            k1 = _subtree_code(
                adj, deg, c1, n, parent, order, depth, code, clen, child_codes
            )
            k2 = _subtree_code(
                adj, deg, c2, n, parent, order, depth, code, clen, child_codes
            )
            hi = k1 if k1 >= k2 else k2
            lo = k2 if k1 >= k2 else k1
            key = ((hi << 22) | lo) + (np.int64(1) << 50)

        # Open-addressing insert (0 means empty; keys are positive).
        h = np.int64(key * np.int64(0x9E3779B9)) & mask
        while True:
            cur = table[h]
            if cur == key:
                break
            if cur == 0:
                table[h] = key
                distinct += 1
                break
            h = (h + 1) & mask

        # Odometer increment.
        pos = n - 3
        while pos >= 0:
            seq[pos] += 1
            if seq[pos] < n:
                break
            seq[pos] = 0
            pos -= 1

    return distinct


def count_trees_prufer_fast(n: int) -> int:
    if n > 10:
        raise ValueError("Prufer-dedup oracle is only feasible up to n=10")
    return int(count_trees_prufer_kernel(n))
