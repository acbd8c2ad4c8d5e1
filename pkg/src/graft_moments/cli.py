"""Command-line front end.

Subcommands:
  indices    index report for one graph under one weight spec
  graft      build a graft product from a spec file
  verify     run one closed-form formula against the oracle on random instances
  isomoment  enumerate permutation products, bucket by isomorphism, compare moments
  theta      tabulate cycle distance-matrix row sums against the closed form

Standard output is deterministic for fixed inputs and seed (timings go
to stderr), so runs can be diffed byte for byte.  Exit codes: 0 success,
1 verification failure, 2 unreadable/malformed input, 3 domain error
(disconnected graph, bad orders, and the like).  The seed defaults to
the GRAFT_MOMENTS_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from typing import Sequence

from .closed_forms import cycle_distance_row_sum
from .errors import GraftMomentsError, GraphFormatError, OrderMismatch
from .graph import (
    Graph,
    are_isomorphic,
    cycle_graph,
    distance_matrix,
    graph_from_json_dict,
    graph_to_json_dict,
)
from .moments import indices, moment
from .products import graft, graft_product_to_json_dict, graft_spec_from_json_dict, permutation_graph
from .verify import FORMULAS, run_verification
from .weights import format_rational, parse_weight_spec

SEED_ENV_VAR = "GRAFT_MOMENTS_SEED"
FULL_ENUMERATION_MAX = 8


def _load_json_file(path: str) -> object:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"{path}: {exc}") from None


def _emit_json(obj: object, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise GraphFormatError(
                f"{SEED_ENV_VAR}={env!r} is not an integer"
            ) from None
    return 0


def cmd_indices(args: argparse.Namespace) -> int:
    graph = graph_from_json_dict(_load_json_file(args.graph))
    weights = parse_weight_spec(args.weights)
    report = indices(graph, weights)
    _emit_json(report.to_json_dict())
    return 0


def cmd_graft(args: argparse.Namespace) -> int:
    spec = graft_spec_from_json_dict(
        _load_json_file(args.spec),
        base_dir=os.path.dirname(os.path.abspath(args.spec)),
    )
    product = graft(spec)
    _emit_json(graft_product_to_json_dict(product), out=args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(
        args.formula, args.count, _resolve_seed(args), args.max_size
    )
    _emit_json(report.to_json_dict())
    print(f"elapsed_seconds: {report.elapsed_seconds:.3f}", file=sys.stderr)
    return 0 if report.ok else 1


def _isomorphism_classes(
    products: Sequence[tuple[tuple[int, ...], Graph]], cap: int
) -> list[dict]:
    """Bucket (sigma, graph) pairs by graph isomorphism."""
    classes: list[dict] = []
    for sigma, graph in products:
        for cls in classes:
            if are_isomorphic(cls["graph"], graph, cap=cap):
                cls["size"] += 1
                break
        else:
            classes.append({"sigma": list(sigma), "graph": graph, "size": 1})
    return classes


def cmd_isomoment(args: argparse.Namespace) -> int:
    host = graph_from_json_dict(_load_json_file(args.host))
    branch = graph_from_json_dict(_load_json_file(args.branch))
    r = host.order
    if branch.order != r:
        raise OrderMismatch(
            f"host and branch must have equal order, got {r} and {branch.order}"
        )
    weight_specs = [w.strip() for w in args.weights.split(",") if w.strip()]
    if not weight_specs:
        raise GraphFormatError("no weight specs given")
    weight_functions = {w: parse_weight_spec(w) for w in weight_specs}

    if r <= FULL_ENUMERATION_MAX:
        sigmas = list(itertools.permutations(range(1, r + 1)))
        enumeration = "full"
    else:
        rng = random.Random(_resolve_seed(args))
        sigmas = [tuple(rng.sample(range(1, r + 1), r)) for _ in range(args.count)]
        enumeration = "sampled"
        print(
            f"warning: {r}! permutations is too many; "
            f"sampling {args.count} seeded permutations",
            file=sys.stderr,
        )

    products = [
        (sigma, permutation_graph(host, branch, sigma).graph) for sigma in sigmas
    ]
    cap = max(16, r * r)
    classes = _isomorphism_classes(products, cap)

    all_equal = True
    moments_out: dict[str, str] = {}
    for spec_name, weights in weight_functions.items():
        values = {moment(graph, weights) for _, graph in products}
        if len(values) != 1:
            all_equal = False
            moments_out[spec_name] = sorted(format_rational(v) for v in values)
        else:
            moments_out[spec_name] = format_rational(values.pop())

    _emit_json(
        {
            "order": r,
            "enumeration": enumeration,
            "permutations": len(sigmas),
            "classes": [
                {
                    "sigma": cls["sigma"],
                    "size": cls["size"],
                    "graph": graph_to_json_dict(cls["graph"]),
                }
                for cls in classes
            ],
            "moments": moments_out,
            "all_equal": all_equal,
        }
    )
    return 0 if all_equal else 1


def cmd_theta(args: argparse.Namespace) -> int:
    if args.max_r < 1:
        raise GraphFormatError("--max-r must be at least 1")
    failures = 0
    for r in range(1, args.max_r + 1):
        theta = cycle_distance_row_sum(r)
        row_sums = distance_matrix(cycle_graph(r)).row_sums
        ok = all(s == theta for s in row_sums)
        if not ok:
            failures += 1
        print(f"r={r} theta={theta} row_sums={'ok' if ok else 'MISMATCH'}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graft-moments",
        description="Weighted distance moments, graft products, and exact "
        "closed-form index formulas for connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_indices = sub.add_parser(
        "indices", help="index report for a graph JSON file"
    )
    p_indices.add_argument("graph", help="path to a graph JSON file")
    p_indices.add_argument(
        "--weights",
        default="unit",
        help="weight spec: unit | half | degree | const:p/q | file:PATH",
    )
    p_indices.set_defaults(func=cmd_indices)

    p_graft = sub.add_parser(
        "graft", help="build the graft product of a spec JSON file"
    )
    p_graft.add_argument("spec", help="path to a graft spec JSON file")
    p_graft.add_argument(
        "--out", default=None, help="write the product JSON here instead of stdout"
    )
    p_graft.set_defaults(func=cmd_graft)

    p_verify = sub.add_parser(
        "verify", help="check one closed-form formula against the oracle"
    )
    p_verify.add_argument("formula", choices=FORMULAS)
    p_verify.add_argument("--count", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument(
        "--max-size", type=int, default=None, help="cap generated graph orders"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_iso = sub.add_parser(
        "isomoment",
        help="bucket permutation products by isomorphism; compare their moments",
    )
    p_iso.add_argument("host", help="path to the host graph JSON file")
    p_iso.add_argument("branch", help="path to the branch graph JSON file")
    p_iso.add_argument(
        "--weights",
        default="unit",
        help="comma-separated weight specs evaluated on each product",
    )
    p_iso.add_argument(
        "--count",
        type=int,
        default=100,
        help="sample size when the order exceeds the full-enumeration cap",
    )
    p_iso.add_argument("--seed", type=int, default=None)
    p_iso.set_defaults(func=cmd_isomoment)

    p_theta = sub.add_parser(
        "theta", help="tabulate cycle row sums against floor(r/2)*floor((r+1)/2)"
    )
    p_theta.add_argument("--max-r", type=int, default=16)
    p_theta.set_defaults(func=cmd_theta)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraftMomentsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
