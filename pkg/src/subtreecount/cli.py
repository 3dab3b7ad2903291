"""Command-line front end.

Subcommands:

* ``subtrees``     degree-capped subtree counts of a tree
* ``bc``           degree-capped BC-subtree counts
* ``oracle``       the brute-force reference counts (small trees only)
* ``random-tree``  emit a seeded uniformly random labeled tree
* ``ratio``        density sweep over random trees, written as CSV

Trees are read from a trailing file path, or from standard input when no
path is given.  Counting commands print a plain decimal count; with
``--genfun`` they print the generating function instead (canonical text,
or the JSON term list with ``--json``).  Weights are fixed to the standard
initialization here; callers needing custom weights use the library API.

Exit codes: 0 success, 1 usage error, 2 data error (bad tree, unknown
vertex, k below the operation's minimum, oracle input too large).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bc_enum, oracle, subtree_enum
from .bipoly import BiPoly
from .errors import KTooSmall, SubtreeCountError
from .experiments import emit_csv, ratio_sweep
from .tree import Tree, parse_edge_list, random_tree, render_edge_list


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; remap to the usage exit code.
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subtreecount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_counting(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--k", type=int, required=True, help="maximum degree bound")
        p.add_argument(
            "--contains",
            metavar="L[,L2]",
            help="count only subtrees containing this vertex (or vertex pair)",
        )
        p.add_argument(
            "--genfun",
            action="store_true",
            help="print the generating function instead of the count",
        )
        p.add_argument(
            "--json",
            action="store_true",
            help="with --genfun, print the polynomial as JSON term records",
        )
        p.add_argument(
            "--exact-degree",
            action="store_true",
            help="count maximum degree exactly k instead of at most k",
        )
        p.add_argument(
            "tree",
            nargs="?",
            metavar="FILE",
            help="edge-list file (default: read standard input)",
        )
        return p

    add_counting("subtrees", "count subtrees with maximum degree <= k")
    add_counting("bc", "count BC-subtrees with maximum degree <= k")
    p_oracle = add_counting("oracle", "brute-force reference counts (small trees)")
    p_oracle.add_argument(
        "--family",
        choices=("subtree", "bc"),
        default="subtree",
        help="which family to count (default: subtree)",
    )

    p_rand = sub.add_parser("random-tree", help="emit a seeded random labeled tree")
    p_rand.add_argument("--n", type=int, required=True, help="number of vertices")
    p_rand.add_argument("--seed", type=int, required=True, help="generator seed")

    p_ratio = sub.add_parser("ratio", help="density sweep over random trees")
    p_ratio.add_argument("--n", type=int, required=True, help="vertices per sample")
    p_ratio.add_argument("--samples", type=int, required=True, help="sample count")
    p_ratio.add_argument("--kmax", type=int, required=True, help="largest cap swept")
    p_ratio.add_argument("--seed", type=int, required=True, help="master seed")
    p_ratio.add_argument(
        "--family", choices=("subtree", "bc"), default="subtree", help="count family"
    )
    p_ratio.add_argument("--out", required=True, help="CSV output path")
    return parser


def _load_tree(args) -> Tree:
    if args.tree is not None:
        with open(args.tree, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    return parse_edge_list(text)


def _anchors(args) -> tuple[str, ...]:
    if args.contains is None:
        return ()
    labels = tuple(part.strip() for part in args.contains.split(","))
    if not all(labels) or len(labels) > 2:
        raise _UsageError(f"--contains takes one or two labels, got {args.contains!r}")
    return labels


def _count_poly(args, t: Tree) -> BiPoly:
    anchors = _anchors(args)
    k = args.k
    if args.command == "subtrees":
        if args.exact_degree:
            return subtree_enum.count_exact_degree(t, k, anchors)
        if len(anchors) == 0:
            return subtree_enum.count_all(t, k)
        if len(anchors) == 1:
            return subtree_enum.count_containing(t, k, anchors[0])
        return subtree_enum.count_containing_pair(t, k, *anchors)
    if args.command == "bc":
        if args.exact_degree:
            return bc_enum.count_bc_exact_degree(t, k, anchors)
        if len(anchors) == 0:
            return bc_enum.count_bc_all(t, k)
        if len(anchors) == 1:
            return bc_enum.count_bc_containing(t, k, anchors[0])
        return bc_enum.count_bc_containing_pair(t, k, *anchors)
    # oracle
    if args.exact_degree:
        floor = 3 if args.family == "bc" else 1
        if k < floor:
            raise KTooSmall(f"exact-degree needs k >= {floor}, got {k}")
        high = oracle.oracle_count(t, k, args.family, anchors)
        if args.family == "subtree" and len(anchors) == 2 and k == 1:
            return high
        return high - oracle.oracle_count(t, k - 1, args.family, anchors)
    return oracle.oracle_count(t, k, args.family, anchors)


def _run(args) -> int:
    if args.command == "random-tree":
        sys.stdout.write(render_edge_list(random_tree(args.n, args.seed)))
        return 0
    if args.command == "ratio":
        floor = 3 if args.family == "bc" else 2
        if args.n < floor:
            raise _UsageError(f"--n must be >= {floor} for family {args.family}")
        if args.samples < 1:
            raise _UsageError("--samples must be >= 1")
        if not 1 <= args.kmax <= args.n - 1:
            raise _UsageError(f"--kmax must lie in 1..{args.n - 1}")
        records = ratio_sweep(args.n, args.samples, args.kmax, args.seed, args.family)
        emit_csv(records, args.out)
        return 0
    if args.json and not args.genfun:
        raise _UsageError("--json only applies to --genfun output")
    poly = _count_poly(args, _load_tree(args))
    if args.genfun:
        if args.json:
            print(json.dumps(poly.to_json()))
        else:
            print(poly)
    else:
        print(poly.eval_counts())
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SubtreeCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
