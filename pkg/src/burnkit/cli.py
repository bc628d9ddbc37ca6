"""Command-line surface: burn, validate, growth, reduce, leafy-tree,
enumerate, verify.

Exit codes: 0 success; 1 invalid certificate verdict; 2 usage; 3 unreadable
or malformed input; 4 desk-scale cap exceeded; 70 internal contradiction
(a constructive guarantee failed -- never ignore this one).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from . import io as bio
from .approx import (
    degree4_threshold,
    four_thirds_burn,
    leafy_spanning_tree,
    mindeg_burn,
    unfold_burn,
)
from .burning import (
    EXACT_SOLVER_CAP,
    SparkSet,
    burning_number_exact,
    is_set_burnable,
    validate,
)
from .corpus import random_min_degree_graph, random_tree
from .enumeration import enumerate_trees
from .errors import (
    BurnkitError,
    CapExceededError,
    GraphError,
    InternalContradictionError,
    ParseError,
)
from .graphs import Graph, as_tree, bfs_tree
from .growth import growth_of
from .reduction import build_reduction, lift_assignment, search_reduction
from .util import ceil_sqrt, ceil_sqrt_ratio
from .verify import verify_burning_sets, verify_conjecture, verify_corollary_bounds

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAP = 4
EXIT_CONTRADICTION = 70

_EPILOG = """\
inputs: a file path (edge-list "n m" format, or .g6/.graph6), or a generator
spec "random-tree:N", "random-mindeg3:N", "random-mindeg4:N" with --seed.

exit codes: 0 ok; 1 invalid certificate; 2 usage; 3 bad input; 4 cap
exceeded (see --force); 70 internal contradiction (a step with a proven
guarantee failed; report it, never silence it).
"""


def _load_input(spec: str, seed: int) -> Graph:
    if spec.startswith("random-tree:"):
        return random_tree(int(spec.split(":")[1]), random.Random(seed))
    if spec.startswith("random-mindeg3:"):
        return random_min_degree_graph(int(spec.split(":")[1]), 3, random.Random(seed))
    if spec.startswith("random-mindeg4:"):
        return random_min_degree_graph(int(spec.split(":")[1]), 4, random.Random(seed))
    return bio.load_graph(spec)


def _emit(args, payload: dict) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(bio.dump_json(payload))


def _cmd_burn(args) -> int:
    g = _load_input(args.input, args.seed)
    spanning = g if g.m == g.n - 1 else bfs_tree(g, max(range(g.n), key=g.degree))
    trace: Optional[list] = [] if args.trace else None
    if args.algo == "exact":
        k, assignment = burning_number_exact(
            g, cap=args.cap, override=args.force
        )
        cert = validate(g, assignment)
        print(f"burning number k = {k} (ceil sqrt n = {ceil_sqrt(g.n)})")
    elif args.algo == "unfold":
        cert = unfold_burn(g)
        print(f"unfold burner: {len(cert)} sparks, bound {ceil_sqrt(2 * g.n)}")
    elif args.algo == "four-thirds":
        tree_cert = four_thirds_burn(as_tree(spanning), trace=trace)
        cert = validate(g, tree_cert.assignment)
        print(
            f"four-thirds burner: {len(cert)} sparks, radii <= "
            f"{ceil_sqrt_ratio(4 * g.n, 3) + 1}"
        )
    else:  # mindeg3 / mindeg4
        deg = 3 if args.algo == "mindeg3" else 4
        cert = mindeg_burn(g, deg)
        promise = ceil_sqrt(g.n) + 2 if deg == 3 else ceil_sqrt(g.n)
        print(f"min-degree-{deg} pipeline: {len(cert)} sparks (promise {promise})")
    print(f"valid: {cert.valid}, covered {cert.covered}/{g.n}")
    for r, c in cert.assignment.sparks:
        print(f"  radius {r} at vertex {c}")
    if args.trace and trace is not None:
        Path(args.trace).write_text(
            "".join(json.dumps(t, sort_keys=True) + "\n" for t in trace)
        )
    if args.output:
        bio.write_certificate(cert, args.output)
    return EXIT_OK if cert.valid else EXIT_INVALID


def _cmd_validate(args) -> int:
    g = _load_input(args.graph, args.seed)
    cert = bio.read_certificate(args.certificate)
    fresh = validate(g, cert.assignment)
    verdict = "VALID" if fresh.valid else "INVALID"
    print(f"{verdict}: {fresh.covered}/{g.n} vertices covered by {len(fresh)} sparks")
    _emit(args, fresh.to_json_dict())
    return EXIT_OK if fresh.valid else EXIT_INVALID


def _cmd_growth(args) -> int:
    g = _load_input(args.input, args.seed)
    cert = growth_of(as_tree(g))
    print(f"growth k = {cert.growth}")
    print("spine: " + " ".join(map(str, cert.spine)))
    _emit(args, {"growth": cert.growth, "spine": list(cert.spine)})
    return EXIT_OK


def _cmd_reduce(args) -> int:
    g = _load_input(args.input, args.seed)
    t = as_tree(g)
    radii = SparkSet.checked(int(x) for x in args.radii.split(","))
    if args.path:
        path = tuple(int(x) for x in args.path.split(","))
        inst = build_reduction(t, path)
        p = radii.max_radius
        print(
            f"reduction: d={inst.d}, m={inst.m}, |T'|={inst.reduced.n}, "
            f"applicable={inst.d + 2 * inst.m <= 2 * p + 2}"
        )
        reduced = is_set_burnable(inst.reduced, radii.without(p))
        if reduced is None or set(reduced.radii) != set(radii.without(p).radii):
            print("reduced tree is not strictly burnable with B minus max B")
            return EXIT_INVALID
        assignment = lift_assignment(inst, radii, reduced)
    else:
        trace = search_reduction(t, radii)
        if trace is None:
            print("no reduction chain found")
            return EXIT_INVALID
        print(f"reduction chain of depth {trace.depth()}")
        assignment = trace.assignment
    cert = validate(t, assignment)
    print(f"valid: {cert.valid}")
    for r, c in cert.assignment.sparks:
        print(f"  radius {r} at vertex {c}")
    _emit(args, cert.to_json_dict())
    return EXIT_OK if cert.valid else EXIT_INVALID


def _cmd_leafy_tree(args) -> int:
    g = _load_input(args.input, args.seed)
    tree = leafy_spanning_tree(g, args.min_degree)
    leaves = sum(1 for v in range(tree.n) if tree.degree(v) == 1)
    if args.min_degree == 3:
        bound = f"n/4+1 = {g.n / 4 + 1:.2f}"
    else:
        bound = f"(2n+8)/5 = {(2 * g.n + 8) / 5:.2f}"
    print(f"leafy spanning tree: {leaves} leaves (bound {bound})")
    _emit(
        args,
        {"leaves": leaves, "edges": [[u, v] for u, v in tree.edges()]},
    )
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    start = tuple(int(x) for x in args.start.split(",")) if args.start else None
    enum = enumerate_trees(args.n, args.growth, start=start, override=args.force)
    count = 0
    for levels, tree in enum.items():
        count += 1
        if args.list:
            print(" ".join(f"{u}-{v}" for u, v in tree.edges()))
    print(f"{count} trees on {args.n} vertices" + (
        f" with growth <= {args.growth}" if args.growth is not None else ""
    ))
    _emit(args, {"n": args.n, "growth_at_most": args.growth, "count": count})
    return EXIT_OK


def _cmd_verify(args) -> int:
    resume = None
    if args.resume:
        head, seq = args.resume.split(":")
        resume = (int(head), tuple(int(x) for x in seq.split(",")))
    if args.mode == "conjecture":
        report = verify_conjecture(
            args.n_max, args.growth, shards=args.shards, resume=resume
        )
    elif args.mode == "burning-sets":
        report = verify_burning_sets(args.n_max)
    else:
        report = verify_corollary_bounds(args.n_max)
    print(
        f"{report.mode}: {report.trees_checked} trees checked, "
        f"{len(report.violations)} violations, {report.elapsed_seconds}s"
    )
    for v in report.violations:
        print(f"  VIOLATION: {v}")
    _emit(args, report.to_json_dict())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burnkit",
        description="graph-burning toolkit: exact and certified approximate burners",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="seed for generator specs")
        p.add_argument("-o", "--output", help="write JSON artifact here")

    p = sub.add_parser("burn", help="burn a graph with a chosen algorithm")
    p.add_argument("input")
    p.add_argument(
        "--algo",
        choices=["exact", "unfold", "four-thirds", "mindeg3", "mindeg4"],
        default="exact",
    )
    p.add_argument("--cap", type=int, default=EXACT_SOLVER_CAP)
    p.add_argument("--force", action="store_true", help="override the cap")
    p.add_argument("--trace", help="write one JSON line per extraction step")
    common(p)
    p.set_defaults(func=_cmd_burn)

    p = sub.add_parser("validate", help="re-check a certificate against a graph")
    p.add_argument("certificate")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("growth", help="growth and spine of a tree")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("reduce", help="path reduction with schedule lifting")
    p.add_argument("input")
    p.add_argument("--radii", required=True, help="comma list, e.g. 0,1,2")
    p.add_argument("--path", help="explicit path as comma list of vertices")
    common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("leafy-tree", help="spanning tree with many leaves")
    p.add_argument("input")
    p.add_argument("--min-degree", type=int, choices=[3, 4], required=True)
    common(p)
    p.set_defaults(func=_cmd_leafy_tree)

    p = sub.add_parser("enumerate", help="non-isomorphic trees on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--growth", type=int)
    p.add_argument("--list", action="store_true")
    p.add_argument("--start", help="resume level sequence, comma list")
    p.add_argument("--force", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive desk-scale conjecture checks")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--growth", type=int)
    p.add_argument(
        "--mode",
        choices=["conjecture", "burning-sets", "corollary"],
        default="conjecture",
    )
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--resume", help='checkpoint "n:l0,l1,..."')
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("threshold", help="min-degree-4 guarantee threshold n0")
    p.add_argument("--limit", type=int, default=10**6)
    common(p)
    p.set_defaults(func=_cmd_threshold)

    return parser


def _cmd_threshold(args) -> int:
    n0 = degree4_threshold(args.limit)
    print(f"degree-4 sqrt(n) guarantee holds for all n >= {n0} (scan to {args.limit})")
    _emit(args, {"threshold": n0, "scan_limit": args.limit})
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalContradictionError as exc:
        print(f"INTERNAL CONTRADICTION: {exc}", file=sys.stderr)
        print(
            "a step guaranteed by the underlying theory failed; "
            "this result must not be trusted or suppressed",
            file=sys.stderr,
        )
        return EXIT_CONTRADICTION
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, GraphError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BurnkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
