"""Burning semantics: schedule simulation, set-burnability, and the exact
solver used as ground truth everywhere else.

A graph is burnable for a set of radii B when balls with exactly those radii,
placed at pairwise-distinct centers, cover every vertex.  The classic
k-step burning process is the special case B = {0, ..., k-1}.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import CapExceededError, GraphError
from .graphs import Graph, all_pairs_distances, ball

#: Default vertex cap for the exact solver; the problem is NP-hard.
EXACT_SOLVER_CAP = 24


@dataclass(frozen=True)
class SparkSet:
    """A set of distinct non-negative radii, stored strictly increasing."""

    radii: tuple[int, ...]

    def __post_init__(self) -> None:
        for r in self.radii:
            if r < 0:
                raise GraphError(f"negative radius {r}")
        for a, b in zip(self.radii, self.radii[1:]):
            if a >= b:
                raise GraphError("radii must be strictly increasing (no multisets)")

    @classmethod
    def of(cls, radii: Iterable[int]) -> "SparkSet":
        return cls(tuple(sorted(set(radii))))

    @classmethod
    def checked(cls, radii: Iterable[int]) -> "SparkSet":
        """Like of(), but rejects duplicates instead of collapsing them."""
        items = list(radii)
        if len(set(items)) != len(items):
            raise GraphError("duplicate radii are not allowed")
        return cls(tuple(sorted(items)))

    def __iter__(self):
        return iter(self.radii)

    def __len__(self) -> int:
        return len(self.radii)

    def __contains__(self, r: int) -> bool:
        return r in self.radii

    @property
    def max_radius(self) -> int:
        if not self.radii:
            raise GraphError("empty spark set has no maximum")
        return self.radii[-1]

    def without(self, r: int) -> "SparkSet":
        return SparkSet(tuple(x for x in self.radii if x != r))


@dataclass(frozen=True)
class BurnAssignment:
    """(radius, center) pairs with pairwise-distinct radii and centers."""

    sparks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        radii = [r for r, _ in self.sparks]
        centers = [c for _, c in self.sparks]
        if len(set(radii)) != len(radii):
            raise GraphError("assignment radii must be distinct")
        if len(set(centers)) != len(centers):
            raise GraphError("assignment centers must be distinct")
        for r, c in self.sparks:
            if r < 0:
                raise GraphError(f"negative radius {r}")
            if c < 0:
                raise GraphError(f"negative center {c}")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "BurnAssignment":
        return cls(tuple(sorted(pairs)))

    @property
    def radii(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.sparks)

    @property
    def centers(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.sparks)

    def __len__(self) -> int:
        return len(self.sparks)

    def __iter__(self):
        return iter(self.sparks)


@dataclass(frozen=True)
class BurnCertificate:
    """A validated assignment: covered count, validity, and dropped radii.

    ``dropped`` flags the degenerate relaxation where a producer had more
    sparks than vertices and discarded the smallest surplus radii.
    """

    assignment: BurnAssignment
    covered: int
    valid: bool
    dropped: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.assignment)

    @property
    def max_radius(self) -> int:
        return max(self.assignment.radii)

    def to_json_dict(self) -> dict:
        return {
            "sparks": [
                {"radius": r, "center": c} for r, c in self.assignment.sparks
            ],
            "valid": self.valid,
            "covered": self.covered,
            "dropped": list(self.dropped),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BurnCertificate":
        assignment = BurnAssignment.of(
            (int(s["radius"]), int(s["center"])) for s in data["sparks"]
        )
        return cls(
            assignment=assignment,
            covered=int(data["covered"]),
            valid=bool(data["valid"]),
            dropped=tuple(int(r) for r in data.get("dropped", [])),
        )


def simulate_classic(g: Graph, sequence: Sequence[int]) -> list[set[int]]:
    """Step-by-step burned sets of the classic process.

    Step 1 ignites sequence[0]; every later step first spreads the fire one
    hop, then ignites the next vertex.  Returns one burned set per step; the
    set after step k equals the union of balls of radii k-1, ..., 0 at the
    sequence vertices.
    """
    if len(set(sequence)) != len(sequence):
        raise GraphError("burning sequence vertices must be distinct")
    for v in sequence:
        if not 0 <= v < g.n:
            raise GraphError(f"sequence vertex {v} out of range")
    snapshots: list[set[int]] = []
    burned: set[int] = set()
    for i, v in enumerate(sequence):
        if i > 0:
            spread = set()
            for u in burned:
                spread.update(g.adj[u])
            burned |= spread
        burned.add(v)
        snapshots.append(set(burned))
    return snapshots


def coverage(g: Graph, pairs: Iterable[tuple[int, int]]) -> set[int]:
    """Union of the balls of an iterable of (radius, center) pairs."""
    out: set[int] = set()
    for r, c in pairs:
        out |= ball(g, c, r)
    return out


def validate(
    g: Graph,
    assignment: BurnAssignment,
    requested: Optional[SparkSet] = None,
) -> BurnCertificate:
    """Recompute the ball union from scratch and certify the assignment.

    When ``requested`` is given, radii of the request missing from the
    assignment are recorded as dropped.
    """
    covered = coverage(g, assignment.sparks)
    dropped: tuple[int, ...] = ()
    if requested is not None:
        present = set(assignment.radii)
        dropped = tuple(r for r in requested if r not in present)
    return BurnCertificate(
        assignment=assignment,
        covered=len(covered),
        valid=len(covered) == g.n,
        dropped=dropped,
    )


def resolve_center_collisions(
    g: Graph, raw: Sequence[tuple[int, int]]
) -> BurnAssignment:
    """Turn raw (radius, center) pairs with possible repeats into a valid
    assignment.

    The largest radius keeps a contested center; displaced smaller sparks move
    to unused vertices (smallest id first).  If there are more sparks than
    vertices, the smallest surplus radii are dropped; this is safe because
    after resolution every vertex hosts a spark, and the resulting coverage is
    re-checked against the raw coverage.
    """
    radii = [r for r, _ in raw]
    if len(set(radii)) != len(radii):
        raise GraphError("raw sparks must have distinct radii")
    for r, c in raw:
        if not 0 <= c < g.n:
            raise GraphError(f"center {c} out of range")

    pairs = sorted(raw, reverse=True)  # largest radius first
    dropped_any = len(pairs) > g.n
    if dropped_any:
        pairs = pairs[: g.n]

    taken: set[int] = set()
    kept: list[tuple[int, int]] = []
    displaced: list[tuple[int, int]] = []
    for r, c in pairs:
        if c in taken:
            displaced.append((r, c))
        else:
            taken.add(c)
            kept.append((r, c))
    free = [v for v in range(g.n) if v not in taken]
    free.reverse()  # pop() yields smallest id first
    for r, _ in displaced:
        kept.append((r, free.pop()))
    result = BurnAssignment.of(kept)
    if dropped_any:
        # Dropping reduced the spark count to n, so every vertex hosts one and
        # coverage must still dominate the raw coverage.
        if coverage(g, result.sparks) < coverage(g, raw):
            raise GraphError("dropping surplus sparks lost coverage")
    return result


class _BallSizes:
    """Per-center ball sizes from a distance matrix, queried by radius."""

    def __init__(self, dist: list[list[int]]):
        self._sorted = [sorted(row) for row in dist]

    def size(self, center: int, radius: int) -> int:
        return bisect.bisect_right(self._sorted[center], radius)

    def max_size(self, radius: int) -> int:
        return max(self.size(c, radius) for c in range(len(self._sorted)))


def is_set_burnable(g: Graph, b: SparkSet) -> Optional[BurnAssignment]:
    """Exhaustive search for an assignment witnessing that g is B-burnable.

    Backtracks over which remaining radius covers a deepest uncovered vertex
    and where; prunes with a ball-size coverage bound.  Complete, hence usable
    as an oracle on desk-scale instances.  When coverage finishes with radii
    left over, the leftovers are parked on unused vertices; if vertices run
    out, the smallest surplus radii are omitted from the result.
    """
    n = g.n
    if len(b) == 0:
        return None
    dist = all_pairs_distances(g)
    sizes = _BallSizes(dist)
    ecc = [max(row) for row in dist]
    max_ball = {r: sizes.max_size(r) for r in b}

    def search(
        uncovered: frozenset[int],
        remaining: tuple[int, ...],
        used: set[int],
    ) -> Optional[list[tuple[int, int]]]:
        if not uncovered:
            return []
        if sum(max_ball[r] for r in remaining) < len(uncovered):
            return None
        # Deepest uncovered vertex; every completion must cover it.
        u = min(uncovered, key=lambda x: (-ecc[x], x))
        for idx, r in enumerate(remaining):
            du = dist[u]
            candidates = [c for c in range(n) if c not in used and du[c] <= r]
            if not candidates:
                continue
            rest = remaining[:idx] + remaining[idx + 1 :]
            scored = sorted(
                candidates,
                key=lambda c: (-sum(1 for x in uncovered if dist[c][x] <= r), c),
            )
            for c in scored:
                new_uncovered = frozenset(
                    x for x in uncovered if dist[c][x] > r
                )
                used.add(c)
                sub = search(new_uncovered, rest, used)
                used.discard(c)
                if sub is not None:
                    return [(r, c)] + sub
        return None

    remaining = tuple(sorted(b.radii, reverse=True))
    used: set[int] = set()
    placed = search(frozenset(range(n)), remaining, used)
    if placed is None:
        return None
    # Park leftover radii on unused vertices, largest radius first; drop the
    # smallest surplus when vertices run out.
    taken = {c for _, c in placed}
    leftovers = sorted(set(b.radii) - {r for r, _ in placed}, reverse=True)
    free = [v for v in range(n) if v not in taken]
    free.reverse()
    for r in leftovers:
        if not free:
            break
        placed.append((r, free.pop()))
    return BurnAssignment.of(placed)


def burning_number_exact(
    g: Graph, cap: int = EXACT_SOLVER_CAP, override: bool = False
) -> tuple[int, BurnAssignment]:
    """Minimal k such that g is {0,...,k-1}-burnable, with a witness.

    Iterative deepening from k=1; each level is decided by the exhaustive
    set-burnability search.  Guarded by a soft vertex cap.
    """
    if g.n > cap and not override:
        raise CapExceededError(
            f"n={g.n} exceeds exact-solver cap {cap}; pass override=True"
        )
    for k in range(1, g.n + 1):
        witness = is_set_burnable(g, SparkSet(tuple(range(k))))
        if witness is not None:
            return k, witness
    raise AssertionError("unreachable: B={0..n-1} always burns")
