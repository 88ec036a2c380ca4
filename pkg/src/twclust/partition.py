"""Recursive bipartitioning driven by the moment-corrected TW test.

Each node of the produced :class:`ClusterTree` covers a subset of the root
graph.  A node is split when the test rejects the flat-graph null at level
``alpha`` and both sides of the regularized spectral bipartition are
nonempty; it becomes a leaf when the test accepts, the subgraph is too
small, or the density estimate is degenerate.  Every stop records its
reason.  Zero-degree nodes inside a subgraph cannot carry spectral
information, so they are peeled off as singleton leaves before testing the
remaining core.

All randomness flows from sub-seeds derived from (root seed, node path), so
subtrees are reproducible independently of evaluation order.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse.linalg as spla

from .errors import (
    DegenerateBootstrapError,
    DegenerateGraphError,
    EigensolverError,
)
from .graphs import NodeSubset, estimate_edge_density, induced_subgraph
from .htest import TestConfig, run_test
from .spectral import (
    DEFAULT_EIG_TOL,
    DENSE_FALLBACK_N,
    Variant,
    _deterministic_v0,
    adjacency_statistic,
    laplacian_statistic,
)

logger = logging.getLogger(__name__)

# leaf stop reasons
ACCEPTED = "accepted"
MIN_SIZE = "min_size"
DEGENERATE_GRAPH = "degenerate_graph"
DEGENERATE_DENSITY = "degenerate_density"
DEGENERATE_BOOTSTRAP = "degenerate_bootstrap"
ISOLATED = "isolated"


@dataclass(frozen=True)
class PartitionConfig:
    """Recursion parameters.

    ``alpha`` is the rejection cutoff (0.01 in the simulation studies,
    1e-4 for the real networks).  Subgraphs below ``min_size`` are never
    tested; 0 disables that rule.  ``tau`` regularizes the bipartition
    step; None means "average degree of the subgraph".
    """

    alpha: float = 0.01
    min_size: int = 10
    test: TestConfig = field(default_factory=TestConfig)
    tau: float = None

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must be in (0, 1)")
        if self.min_size < 0:
            raise ValueError("min_size must be >= 0 (0 disables)")


@dataclass
class ClusterTree:
    """Binary hierarchy of node subsets with test annotations.

    ``members`` always refers to root-graph indices.  ``p_value`` is absent
    when no test ran at this node; leaves carry a ``stop_reason``.
    """

    node_id: int
    members: np.ndarray
    p_hat: float
    p_value: float
    stop_reason: str
    children: tuple
    depth: int

    @property
    def size(self):
        return int(self.members.size)

    @property
    def is_leaf(self):
        return not self.children

    def walk(self):
        """Depth-first preorder over all nodes."""
        yield self
        for child in self.children:
            yield from child.walk()

    def leaves(self):
        return [node for node in self.walk() if node.is_leaf]


# -- bipartition step ---------------------------------------------------------


def _two_means_split(coord):
    """Exact 1-d 2-means split point by sorted sweep; both sides nonempty."""
    n = coord.size
    order = np.argsort(coord, kind="stable")
    x = coord[order]
    csum = np.cumsum(x)
    csq = np.cumsum(x * x)
    total, total_sq = csum[-1], csq[-1]
    k = np.arange(1, n)
    left_ss = csq[:-1] - csum[:-1] ** 2 / k
    right_ss = (total_sq - csq[:-1]) - (total - csum[:-1]) ** 2 / (n - k)
    best = int(np.argmin(left_ss + right_ss)) + 1
    return order[:best], order[best:]


def _second_eigenvector_regularized(g, tau, eig_tol):
    """Eigenvector for the second largest eigenvalue of the regularized
    degree-normalized matrix D_tau^(-1/2) (A + (tau/n) J) D_tau^(-1/2)."""
    n = g.n
    d = g.degrees.astype(float)
    dtau = d + tau
    invsqrt = 1.0 / np.sqrt(dtau)
    if n <= DENSE_FALLBACK_N:
        dense = (g.adjacency.toarray() + tau / n) * np.outer(invsqrt, invsqrt)
        _, vecs = np.linalg.eigh(dense)
        return vecs[:, -2]
    a = g.adjacency

    def mv(x):
        x = np.asarray(x, dtype=float).ravel()
        y = invsqrt * x
        return invsqrt * (a @ y + (tau / n) * y.sum())

    op = spla.LinearOperator((n, n), matvec=mv, dtype=float)
    vals, vecs = spla.eigsh(op, k=2, which="LA", tol=eig_tol / 4.0,
                            v0=_deterministic_v0(n), maxiter=10 * n,
                            ncv=min(n, 24))
    # eigsh returns ascending, so column 0 is the second largest
    return vecs[:, 0]


def spectral_bipartition(g, tau=None, eig_tol=DEFAULT_EIG_TOL):
    """Split a graph in two with regularized spectral clustering.

    The all-ones regularizer (tau/n) J keeps low-degree graphs from handing
    the eigensolver a disconnected operator; 1-d 2-means on the second
    eigenvector replaces multi-dimensional k-means so the step is exact and
    deterministic.  Numerically flat coordinates fall back to a balanced
    median split (logged).
    """
    if g.n < 2:
        raise DegenerateGraphError("cannot bipartition fewer than 2 nodes")
    if tau is None:
        tau = 2.0 * g.num_edges / g.n
    if g.num_edges == 0 or tau <= 0.0:
        coord = np.zeros(g.n)
    else:
        coord = _second_eigenvector_regularized(g, float(tau), eig_tol)

    if np.ptp(coord) <= 1e-12 * max(1.0, float(np.abs(coord).max())):
        logger.warning(
            "spectral_bipartition: flat spectral coordinates on n=%d nodes; "
            "falling back to a balanced median split", g.n,
        )
        half = g.n // 2
        idx = np.arange(g.n)
        return NodeSubset(g, idx[:half]), NodeSubset(g, idx[half:])

    left, right = _two_means_split(coord)
    return NodeSubset(g, left), NodeSubset(g, right)


# -- recursion ----------------------------------------------------------------


def _node_seed(root_seed, path):
    ss = np.random.SeedSequence(int(root_seed), spawn_key=tuple(path))
    return int(ss.generate_state(1, np.uint64)[0])


def _leaf(members, p_hat, reason, depth, p_value=None):
    return ClusterTree(
        node_id=-1, members=members, p_hat=p_hat, p_value=p_value,
        stop_reason=reason, children=(), depth=depth,
    )


def _singleton_chain(members, depth):
    """Binary chain whose leaves are the given nodes, one per leaf."""
    members = np.asarray(members)
    node = _leaf(members[-1:], None, ISOLATED, depth + members.size - 1)
    for i in range(members.size - 2, -1, -1):
        d = depth + i
        node = ClusterTree(
            node_id=-1, members=members[i:], p_hat=0.0, p_value=None,
            stop_reason=None,
            children=(_leaf(members[i:i + 1], None, ISOLATED, d + 1), node),
            depth=d,
        )
    return node


def recursive_bipartition(g, cfg=None, jobs=1):
    """Build the full cluster tree for a graph.

    Returns the root :class:`ClusterTree`; node ids are assigned in
    depth-first preorder.  ``jobs`` parallelizes each node's bootstrap
    replicates; the tree itself is identical for any jobs value because all
    randomness is derived from (root seed, node path).
    """
    cfg = cfg or PartitionConfig()
    stat_fn = (adjacency_statistic
               if cfg.test.statistic_variant == Variant.ADJACENCY
               else laplacian_statistic)

    def recurse(members, path, depth):
        n_m = members.size
        if n_m < 2:
            return _leaf(members, None, DEGENERATE_GRAPH, depth)
        sub = induced_subgraph(g, NodeSubset(g, members))
        p_hat = estimate_edge_density(sub)
        if cfg.min_size and n_m < cfg.min_size:
            return _leaf(members, p_hat, MIN_SIZE, depth)
        if p_hat == 0.0 or p_hat == 1.0:
            return _leaf(members, p_hat, DEGENERATE_DENSITY, depth)

        isolated = members[sub.degrees == 0]
        if isolated.size:
            core = members[sub.degrees > 0]
            chain = (_singleton_chain(isolated, depth + 1)
                     if isolated.size > 1
                     else _leaf(isolated, None, ISOLATED, depth + 1))
            return ClusterTree(
                node_id=-1, members=members, p_hat=p_hat, p_value=None,
                stop_reason=None,
                children=(recurse(core, path + (0,), depth + 1), chain),
                depth=depth,
            )

        stat = stat_fn(sub, tol=cfg.test.eig_tol)
        node_cfg = TestConfig(
            bootstrap_samples=cfg.test.bootstrap_samples,
            statistic_variant=cfg.test.statistic_variant,
            seed=_node_seed(cfg.test.seed, path),
            eig_tol=cfg.test.eig_tol,
        )
        try:
            report = run_test(stat.theta, stat.n, stat.p_hat, node_cfg, jobs=jobs)
        except DegenerateBootstrapError:
            return _leaf(members, p_hat, DEGENERATE_BOOTSTRAP, depth)

        if report.p_value >= cfg.alpha:
            return _leaf(members, p_hat, ACCEPTED, depth, p_value=report.p_value)

        left, right = spectral_bipartition(sub, tau=cfg.tau,
                                           eig_tol=cfg.test.eig_tol)
        return ClusterTree(
            node_id=-1, members=members, p_hat=p_hat,
            p_value=report.p_value, stop_reason=None,
            children=(
                recurse(members[left.members], path + (0,), depth + 1),
                recurse(members[right.members], path + (1,), depth + 1),
            ),
            depth=depth,
        )

    root = recurse(np.arange(g.n, dtype=np.int64), (), 0)
    for i, node in enumerate(root.walk()):
        node.node_id = i
    return root


def flatten_leaves(tree):
    """Leaf member sets, left to right; they partition the root's members."""
    return [leaf.members for leaf in tree.leaves()]


def leaf_labels(tree, n=None):
    """Flat cluster-id array (one id per node) from the tree's leaves."""
    n = n if n is not None else tree.size
    labels = np.full(n, -1, dtype=np.int64)
    for cid, members in enumerate(flatten_leaves(tree)):
        labels[members] = cid
    return labels


def density_ordering(tree):
    """Node permutation and nested block extents for density plots.

    The permutation lists original node indices so that every subtree's
    members are consecutive (depth-first).  Each tree node contributes one
    block (start, end, depth, p_hat) in display coordinates; child extents
    nest strictly inside their parent's.
    """
    perm = np.concatenate(flatten_leaves(tree)) if tree.size else np.empty(0, np.int64)
    position = np.empty(tree.size, dtype=np.int64)
    position[perm] = np.arange(tree.size)
    blocks = []
    for node in tree.walk():
        pos = position[node.members]
        start, stop = int(pos.min()), int(pos.max()) + 1
        blocks.append((start, stop, node.depth, node.p_hat))
    return perm, blocks


def validate_tree(tree, n=None):
    """Structural sanity: children partition parents, reasons recorded.

    Returns a list of problem strings; empty means valid.
    """
    problems = []
    if n is not None and tree.size != n:
        problems.append(f"root covers {tree.size} nodes, expected {n}")
    for node in tree.walk():
        if node.children:
            if len(node.children) != 2:
                problems.append(f"node {node.node_id}: {len(node.children)} children")
                continue
            merged = np.concatenate([c.members for c in node.children])
            if any(c.members.size == 0 for c in node.children):
                problems.append(f"node {node.node_id}: empty child")
            if not np.array_equal(np.sort(merged), node.members):
                problems.append(f"node {node.node_id}: children do not partition it")
            for c in node.children:
                if c.depth != node.depth + 1:
                    problems.append(f"node {c.node_id}: bad depth")
        else:
            if node.stop_reason is None:
                problems.append(f"leaf {node.node_id}: missing stop reason")
        if node.p_value is not None and not 0.0 <= node.p_value <= 1.0:
            problems.append(f"node {node.node_id}: p_value {node.p_value}")
    return problems


# -- serialization ------------------------------------------------------------


def tree_to_dict(tree, labels=None):
    """JSON-ready dict: {id, size, p_hat, p_value, stop_reason, members
    (leaves only, as external ids), children}."""

    def label(i):
        return labels[i] if labels is not None else str(int(i))

    def conv(node):
        d = {
            "id": node.node_id,
            "size": node.size,
            "p_hat": node.p_hat,
            "p_value": node.p_value,
            "stop_reason": node.stop_reason,
            "children": [conv(c) for c in node.children],
        }
        if node.is_leaf:
            d["members"] = [label(i) for i in node.members]
        return d

    return conv(tree)


def tree_to_json(tree, labels=None, manifest_name=None, **kwargs):
    doc = {"tree": tree_to_dict(tree, labels)}
    if manifest_name:
        doc["manifest"] = manifest_name
    return json.dumps(doc, **kwargs)


def dict_subtree_members(node):
    """Member ids of a serialized subtree (union of its leaves)."""
    if not node.get("children"):
        return list(node.get("members", []))
    out = []
    for child in node["children"]:
        out.extend(dict_subtree_members(child))
    return out


def dict_flatten_leaves(node):
    if not node.get("children"):
        return [list(node.get("members", []))]
    out = []
    for child in node["children"]:
        out.extend(dict_flatten_leaves(child))
    return out


def validate_tree_dict(node, _depth=0):
    """Validate a deserialized tree dict; returns problem strings."""
    problems = []
    children = node.get("children") or []
    members = dict_subtree_members(node)
    if len(set(members)) != len(members):
        problems.append(f"node {node.get('id')}: duplicate members")
    if node.get("size") != len(members):
        problems.append(
            f"node {node.get('id')}: size {node.get('size')} != {len(members)} leaves"
        )
    if children:
        if len(children) != 2:
            problems.append(f"node {node.get('id')}: {len(children)} children")
        for child in children:
            problems.extend(validate_tree_dict(child, _depth + 1))
    else:
        if node.get("stop_reason") is None:
            problems.append(f"leaf {node.get('id')}: missing stop reason")
        if not node.get("members") and node.get("size", 0) > 0:
            problems.append(f"leaf {node.get('id')}: no members")
    pv = node.get("p_value")
    if pv is not None and not 0.0 <= pv <= 1.0:
        problems.append(f"node {node.get('id')}: p_value {pv}")
    return problems


def write_ordering_files(tree, perm_path, blocks_path, labels=None,
                         manifest_name=None):
    """Emit the permutation list and the block-extent CSV."""
    perm, blocks = density_ordering(tree)
    with open(perm_path, "w") as fh:
        if manifest_name:
            fh.write(f"# manifest: {manifest_name}\n")
        for i in perm:
            fh.write((labels[i] if labels is not None else str(int(i))) + "\n")
    with open(blocks_path, "w") as fh:
        if manifest_name:
            fh.write(f"# manifest: {manifest_name}\n")
        fh.write("start,end,depth,p_hat\n")
        for start, stop, depth, p_hat in blocks:
            p = "" if p_hat is None else repr(float(p_hat))
            fh.write(f"{start},{stop},{depth},{p}\n")
