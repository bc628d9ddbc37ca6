"""Exhaustive desk-scale verification of the square-root burning bound, the
burning-set conjecture, and the growth corollary, over enumerated trees.

Runs are deterministic: two runs with the same parameters produce identical
reports apart from the wall-time field, and sharded runs fold their partial
results in shard order so parallel equals sequential.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .burning import EXACT_SOLVER_CAP, SparkSet, burning_number_exact, is_set_burnable
from .enumeration import enumerate_trees
from .errors import CapExceededError
from .graphs import Tree
from .growth import growth_of
from .util import ceil_sqrt

BURNING_SET_CAP = 10


@dataclass
class VerificationReport:
    """Aggregate outcome of one enumeration sweep."""

    mode: str
    n_max: int
    growth_at_most: Optional[int]
    trees_checked: int
    checks_passed: dict
    violations: list
    elapsed_seconds: float
    shards: int = 1
    per_n: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n_max": self.n_max,
            "growth_at_most": self.growth_at_most,
            "trees_checked": self.trees_checked,
            "checks_passed": self.checks_passed,
            "violations": self.violations,
            "elapsed_seconds": self.elapsed_seconds,
            "shards": self.shards,
            "per_n": self.per_n,
            "extra": self.extra,
        }


def _tree_witness(tree: Tree) -> list[list[int]]:
    return [[u, v] for u, v in tree.edges()]


def _conjecture_shard(args) -> dict:
    n, growth_at_most, shard, shards, start = args
    checked = 0
    violations = []
    bound = ceil_sqrt(n)
    for idx, (levels, tree) in enumerate(
        enumerate_trees(n, growth_at_most, start=start).items()
    ):
        if idx % shards != shard:
            continue
        checked += 1
        b, _ = burning_number_exact(tree, cap=max(EXACT_SOLVER_CAP, n))
        if b > bound:
            violations.append(
                {
                    "n": n,
                    "index": idx,
                    "burning_number": b,
                    "bound": bound,
                    "edges": _tree_witness(tree),
                }
            )
    return {"n": n, "shard": shard, "checked": checked, "violations": violations}


def _run_shards(worker, jobs: list, shards: int) -> list[dict]:
    if shards <= 1:
        return [worker(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=shards) as pool:
        results = list(pool.map(worker, jobs))
    return results


def verify_conjecture(
    n_max: int,
    growth_at_most: Optional[int] = None,
    shards: int = 1,
    resume: Optional[tuple[int, tuple[int, ...]]] = None,
) -> VerificationReport:
    """Check exact burning number <= ceil(sqrt(n)) on every enumerated tree."""
    if n_max > EXACT_SOLVER_CAP:
        raise CapExceededError(
            f"n_max={n_max} exceeds the exact solver cap {EXACT_SOLVER_CAP}"
        )
    t0 = time.perf_counter()
    n_start = resume[0] if resume else 1
    jobs = []
    for n in range(n_start, n_max + 1):
        start = resume[1] if (resume and n == resume[0]) else None
        for shard in range(shards):
            jobs.append((n, growth_at_most, shard, shards, start))
    results = _run_shards(_conjecture_shard, jobs, shards)
    results.sort(key=lambda r: (r["n"], r["shard"]))
    per_n: dict = {}
    violations = []
    checked = 0
    for r in results:
        checked += r["checked"]
        per_n[str(r["n"])] = per_n.get(str(r["n"]), 0) + r["checked"]
        violations.extend(r["violations"])
    violations.sort(key=lambda v: (v["n"], v["index"]))
    extra = {}
    if resume is not None:
        # Record the checkpoint this run started from, so partial reports
        # compose: rerun with --resume to cover a prefix-interrupted range.
        extra["resumed_from"] = {"n": resume[0], "levels": list(resume[1])}
    return VerificationReport(
        mode="conjecture",
        n_max=n_max,
        growth_at_most=growth_at_most,
        trees_checked=checked,
        checks_passed={"sqrt_bound": checked - len(violations)},
        violations=violations,
        elapsed_seconds=round(time.perf_counter() - t0, 3),
        shards=shards,
        per_n=per_n,
        extra=extra,
    )


def verify_burning_sets(
    n_max: int = BURNING_SET_CAP, radius_cap: Optional[int] = None
) -> VerificationReport:
    """For every tree and every burning set over the capped radius universe,
    check that the tree is actually set-burnable.

    A violation here would be publishable information rather than a bug, so
    witnesses carry the full tree and set.
    """
    if n_max > BURNING_SET_CAP:
        raise CapExceededError(
            f"n_max={n_max} exceeds the burning-set sweep cap {BURNING_SET_CAP}"
        )
    if radius_cap is None:
        radius_cap = n_max
    t0 = time.perf_counter()
    trees_checked = 0
    pairs_checked = 0
    passed = 0
    violations = []
    per_n: dict = {}
    universe = list(range(radius_cap + 1))
    for n in range(1, n_max + 1):
        for idx, tree in enumerate(enumerate_trees(n)):
            trees_checked += 1
            per_n[str(n)] = per_n.get(str(n), 0) + 1
            k = growth_of(tree).growth
            need_mask = (1 << (k + 1)) - 1
            burnable_masks: list[int] = []
            # Masks ordered by popcount so burnable subsets are found first.
            masks = sorted(
                range(1, 1 << len(universe)), key=lambda m: (bin(m).count("1"), m)
            )
            for mask in masks:
                if mask & need_mask != need_mask:
                    continue
                total = 0
                for i in universe:
                    if mask >> i & 1:
                        total += 2 * i + 1
                if total < n:
                    continue
                pairs_checked += 1
                if any(mask & known == known for known in burnable_masks):
                    passed += 1
                    continue
                radii = tuple(i for i in universe if mask >> i & 1)
                witness = is_set_burnable(tree, SparkSet(radii))
                if witness is not None:
                    passed += 1
                    burnable_masks.append(mask)
                else:
                    violations.append(
                        {
                            "n": n,
                            "index": idx,
                            "radii": list(radii),
                            "growth": k,
                            "edges": _tree_witness(tree),
                        }
                    )
    return VerificationReport(
        mode="burning-sets",
        n_max=n_max,
        growth_at_most=None,
        trees_checked=trees_checked,
        checks_passed={"burning_sets_burnable": passed},
        violations=violations,
        elapsed_seconds=round(time.perf_counter() - t0, 3),
        per_n=per_n,
        extra={"pairs_checked": pairs_checked, "radius_cap": radius_cap},
    )


def verify_corollary_bounds(n_max: int) -> VerificationReport:
    """Check exact burning number <= ceil(sqrt(n + 20k^2)) with k the growth,
    reporting margin statistics."""
    if n_max > EXACT_SOLVER_CAP:
        raise CapExceededError(
            f"n_max={n_max} exceeds the exact solver cap {EXACT_SOLVER_CAP}"
        )
    t0 = time.perf_counter()
    checked = 0
    violations = []
    per_n: dict = {}
    min_margin: Optional[int] = None
    margin_total = 0
    for n in range(1, n_max + 1):
        for idx, tree in enumerate(enumerate_trees(n)):
            checked += 1
            per_n[str(n)] = per_n.get(str(n), 0) + 1
            k = growth_of(tree).growth
            bound = ceil_sqrt(n + 20 * k * k)
            b, _ = burning_number_exact(tree, cap=max(EXACT_SOLVER_CAP, n))
            margin = bound - b
            margin_total += margin
            if min_margin is None or margin < min_margin:
                min_margin = margin
            if b > bound:
                violations.append(
                    {
                        "n": n,
                        "index": idx,
                        "burning_number": b,
                        "bound": bound,
                        "growth": k,
                        "edges": _tree_witness(tree),
                    }
                )
    return VerificationReport(
        mode="corollary",
        n_max=n_max,
        growth_at_most=None,
        trees_checked=checked,
        checks_passed={"growth_corollary": checked - len(violations)},
        violations=violations,
        elapsed_seconds=round(time.perf_counter() - t0, 3),
        per_n=per_n,
        extra={
            "min_margin": min_margin if min_margin is not None else 0,
            "mean_margin": round(margin_total / checked, 3) if checked else 0.0,
        },
    )
