"""Command-line surface.

Subcommands: ``test`` (one hypothesis test), ``cluster`` (full recursive
bipartition), ``simulate`` (named Monte Carlo recipes), ``eval`` (score a
tree against ground truth) and ``validate`` (structural check of a tree
file).  Every subcommand is deterministic given --seed; reruns produce
byte-identical data files (the manifest carries the only timestamp).

Exit codes: 0 success, 2 input error, 3 numeric degeneracy, 4 solver
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import (
    DegenerateBootstrapError,
    DegenerateDensityError,
    DegenerateGraphError,
    EigensolverError,
    GraphInputError,
    IsolatedNodeError,
)
from .graphs import read_edge_list, remove_isolated_nodes
from .htest import TestConfig, test_graph
from .manifest import MANIFEST_NAME, RunManifest
from .metrics import (
    adjusted_rand_index,
    hierarchical_f_measure,
    read_flat_labels,
    read_truth_sets,
)
from .partition import (
    PartitionConfig,
    dict_flatten_leaves,
    recursive_bipartition,
    tree_to_dict,
    validate_tree_dict,
    write_ordering_files,
)
from .recipes import RECIPES, run_recipe

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_SOLVER = 4


def _add_test_flags(p):
    p.add_argument("--statistic", choices=["adjacency", "laplacian"],
                   default="adjacency")
    p.add_argument("--bootstrap-samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for bootstrap replicates")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twclust",
        description="Decide how many communities a graph holds by recursive "
                    "bipartitioning with Tracy-Widom eigenvalue tests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="hypothesis test on one graph")
    p.add_argument("graph", help="edge-list file")
    _add_test_flags(p)

    p = sub.add_parser("cluster", help="recursive bipartition of one graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--min-size", type=int, default=10,
                   help="do not test subgraphs below this size (0 disables)")
    p.add_argument("--tau", type=float, default=None,
                   help="bipartition regularizer (default: average degree)")
    p.add_argument("--out", required=True, help="output directory")
    _add_test_flags(p)

    p = sub.add_parser("simulate", help="run a named Monte Carlo recipe")
    p.add_argument("recipe", help=f"one of: {', '.join(RECIPES)}")
    p.add_argument("--runs", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--config", default=None,
                   help="override the recipe's versioned config file")

    p = sub.add_parser("eval", help="score a cluster tree against ground truth")
    p.add_argument("tree", help="tree JSON from `twclust cluster`")
    p.add_argument("truth", help="ground-truth file")
    p.add_argument("--metric", choices=["ari", "hf"], required=True,
                   help="ari: flat labels file; hf: one cluster per line")

    p = sub.add_parser("validate", help="structural check of a tree JSON file")
    p.add_argument("tree")

    return parser


def _load_graph(path):
    g = read_edge_list(path)
    reduced, _ = remove_isolated_nodes(g)
    return reduced, g.n - reduced.n


def _load_tree(path):
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise GraphInputError(f"cannot read tree file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path} is not valid JSON: {exc}") from exc
    return doc.get("tree", doc)


def cmd_test(args):
    g, removed = _load_graph(args.graph)
    cfg = TestConfig(bootstrap_samples=args.bootstrap_samples,
                     statistic_variant=args.statistic, seed=args.seed)
    manifest = RunManifest("test", {
        "graph": args.graph, "statistic": args.statistic,
        "bootstrap_samples": args.bootstrap_samples,
    }, args.seed, inputs=[args.graph])
    report = test_graph(g, cfg, jobs=args.jobs)
    doc = {
        "report": report.to_dict(),
        "isolated_nodes_removed": removed,
        "manifest": manifest.finish(),
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_cluster(args):
    g, removed = _load_graph(args.graph)
    cfg = PartitionConfig(
        alpha=args.alpha,
        min_size=args.min_size,
        tau=args.tau,
        test=TestConfig(bootstrap_samples=args.bootstrap_samples,
                        statistic_variant=args.statistic, seed=args.seed),
    )
    manifest = RunManifest("cluster", {
        "graph": args.graph, "alpha": args.alpha, "min_size": args.min_size,
        "statistic": args.statistic, "tau": args.tau,
        "bootstrap_samples": args.bootstrap_samples,
        "isolated_nodes_removed": removed,
    }, args.seed, inputs=[args.graph])

    tree = recursive_bipartition(g, cfg, jobs=args.jobs)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    doc = {"tree": tree_to_dict(tree, labels=g.labels), "manifest": MANIFEST_NAME}
    (out / "tree.json").write_text(json.dumps(doc, indent=2) + "\n")
    write_ordering_files(tree, out / "ordering.txt", out / "blocks.csv",
                         labels=g.labels, manifest_name=MANIFEST_NAME)
    manifest.write(out)
    leaves = [node for node in tree.walk() if node.is_leaf]
    print(f"wrote {out / 'tree.json'}: {len(leaves)} leaves")
    return EXIT_OK


def cmd_simulate(args):
    run_recipe(args.recipe, args.out, runs=args.runs, seed=args.seed,
               jobs=args.jobs, config_path=args.config)
    print(f"recipe {args.recipe} finished; outputs in {args.out}")
    return EXIT_OK


def cmd_eval(args):
    tree = _load_tree(args.tree)
    if args.metric == "ari":
        truth = read_flat_labels(args.truth)
        prediction = {}
        for cid, members in enumerate(dict_flatten_leaves(tree)):
            for node in members:
                prediction[node] = cid
        print(adjusted_rand_index(prediction, truth))
    else:
        truth_sets = read_truth_sets(args.truth)
        print(hierarchical_f_measure(truth_sets, tree))
    return EXIT_OK


def cmd_validate(args):
    problems = validate_tree_dict(_load_tree(args.tree))
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_INPUT
    print("ok")
    return EXIT_OK


_COMMANDS = {
    "test": cmd_test,
    "cluster": cmd_cluster,
    "simulate": cmd_simulate,
    "eval": cmd_eval,
    "validate": cmd_validate,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (GraphInputError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DegenerateDensityError, DegenerateGraphError,
            IsolatedNodeError, DegenerateBootstrapError) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except EigensolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
