"""Undirected simple graphs on dense integer indices.

A :class:`Graph` is immutable after construction: edges are stored as a
canonical ``(m, 2)`` array of pairs with ``i < j``, sorted lexicographically,
with no duplicates and no self loops.  External string ids, when present,
are kept in a ``labels`` tuple and everything numerical works on indices.
Immutability makes graphs safe to share across worker processes and
concurrent bootstrap replicates.
"""

from __future__ import annotations

import logging
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from .errors import DegenerateGraphError, GraphInputError

logger = logging.getLogger(__name__)


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    n : int
        Node count (>= 0).  Nodes are ``0 .. n-1``.
    edges : ndarray of shape (m, 2)
        Canonical edge array (``i < j``, unique, sorted).  Use
        :func:`build_graph` to construct from raw pair lists.
    labels : tuple of str, optional
        External id of each node, aligned with node indices.
    """

    __slots__ = ("n", "edges", "labels", "__dict__")

    def __init__(self, n, edges, labels=None):
        self.n = int(n)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        edges.setflags(write=False)
        self.edges = edges
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != self.n:
                raise GraphInputError(
                    f"got {len(labels)} labels for {self.n} nodes"
                )
        self.labels = labels

    @property
    def num_edges(self):
        return self.edges.shape[0]

    @cached_property
    def degrees(self):
        d = np.bincount(self.edges.ravel(), minlength=self.n)
        d.setflags(write=False)
        return d

    @cached_property
    def adjacency(self):
        """Symmetric CSR adjacency matrix with 0/1 float entries."""
        i, j = self.edges[:, 0], self.edges[:, 1]
        rows = np.concatenate([i, j])
        cols = np.concatenate([j, i])
        data = np.ones(rows.shape[0])
        return sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def has_edge(self, i, j):
        if i == j:
            return False
        a, b = (i, j) if i < j else (j, i)
        k = np.searchsorted(self.edges[:, 0] * self.n + self.edges[:, 1],
                            a * self.n + b)
        return k < self.num_edges and self.edges[k, 0] == a and self.edges[k, 1] == b

    def label_of(self, i):
        return self.labels[i] if self.labels is not None else str(i)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


class NodeSubset:
    """Sorted, distinct node indices of a parent graph.

    Carrier for the recursion: induced subgraphs are always taken through a
    NodeSubset so membership stays expressed in the parent's index space.
    """

    __slots__ = ("parent", "members")

    def __init__(self, parent, members):
        members = np.unique(np.asarray(members, dtype=np.int64))
        if members.size and (members[0] < 0 or members[-1] >= parent.n):
            raise GraphInputError(
                f"subset members out of range [0, {parent.n})"
            )
        members.setflags(write=False)
        self.parent = parent
        self.members = members

    def __len__(self):
        return self.members.size

    def __repr__(self):
        return f"NodeSubset({len(self)} of {self.parent.n})"


def build_graph(n, edge_list, labels=None):
    """Build a Graph from raw (i, j) pairs.

    Pairs may arrive in either orientation and may repeat; duplicates are
    removed silently (the dropped count goes to the debug log).  Self loops
    and out-of-range indices are rejected.
    """
    n = int(n)
    if n < 0:
        raise GraphInputError("node count must be >= 0")
    edges = np.asarray(list(edge_list) if not isinstance(edge_list, np.ndarray)
                       else edge_list, dtype=np.int64)
    if edges.size == 0:
        return Graph(n, np.empty((0, 2), dtype=np.int64), labels)
    edges = edges.reshape(-1, 2)

    bad = (edges < 0) | (edges >= n)
    if bad.any():
        k = int(np.flatnonzero(bad.any(axis=1))[0])
        raise GraphInputError(
            f"edge ({edges[k, 0]}, {edges[k, 1]}) has index outside [0, {n})"
        )
    loops = edges[:, 0] == edges[:, 1]
    if loops.any():
        k = int(np.flatnonzero(loops)[0])
        raise GraphInputError(f"self loop at node {edges[k, 0]} is not allowed")

    lo = edges.min(axis=1)
    hi = edges.max(axis=1)
    keys = np.unique(lo * n + hi)
    dropped = edges.shape[0] - keys.size
    if dropped:
        logger.debug("build_graph: deduplicated %d edge entries", dropped)
    canon = np.column_stack([keys // n, keys % n])
    return Graph(n, canon, labels)


def estimate_edge_density(g):
    """Fraction of node pairs that form an edge: 2m / (n(n-1))."""
    if g.n < 2:
        raise DegenerateGraphError(
            f"edge density undefined for n={g.n} (need at least 2 nodes)"
        )
    return 2.0 * g.num_edges / (g.n * (g.n - 1))


def induced_subgraph(g, subset):
    """Subgraph induced by a NodeSubset, relabeled to 0..|s|-1.

    The relabeling preserves sorted member order and carries labels through.
    """
    if not isinstance(subset, NodeSubset):
        subset = NodeSubset(g, subset)
    if subset.parent is not g:
        raise GraphInputError("subset does not belong to this graph")
    members = subset.members
    keep = np.isin(g.edges[:, 0], members) & np.isin(g.edges[:, 1], members)
    sub_edges = g.edges[keep]
    relabeled = np.searchsorted(members, sub_edges)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[i] for i in members)
    return Graph(members.size, relabeled.reshape(-1, 2), labels)


def remove_isolated_nodes(g):
    """Drop all zero-degree nodes.

    Returns
    -------
    (Graph, dict)
        The reduced graph (minimum degree >= 1, possibly empty) and an
        injective mapping old index -> new index for the kept nodes.
    """
    keep = np.flatnonzero(g.degrees > 0)
    if keep.size == g.n:
        return g, {int(i): int(i) for i in range(g.n)}
    sub = induced_subgraph(g, NodeSubset(g, keep))
    mapping = {int(old): new for new, old in enumerate(keep)}
    return sub, mapping


def read_edge_list(path):
    """Parse the edge-list text format into a Graph.

    One edge per line as two whitespace-separated node ids; lines starting
    with '#' and blank lines are ignored.  Ids are arbitrary strings and are
    mapped to dense indices in order of first appearance.
    """
    index = {}
    pairs = []

    def idx(tok):
        if tok not in index:
            index[tok] = len(index)
        return index[tok]

    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise GraphInputError(
                        f"{path}:{lineno}: expected two node ids, got {line!r}"
                    )
                a, b = idx(parts[0]), idx(parts[1])
                if a == b:
                    raise GraphInputError(
                        f"{path}:{lineno}: self loop on id {parts[0]!r}"
                    )
                pairs.append((a, b))
    except OSError as exc:
        raise GraphInputError(f"cannot read edge list {path}: {exc}") from exc

    labels = [None] * len(index)
    for tok, i in index.items():
        labels[i] = tok
    return build_graph(len(index), pairs, labels=labels)


def write_edge_list(g, path):
    """Write a Graph in the edge-list text format (labels if present)."""
    with open(path, "w") as fh:
        for i, j in g.edges:
            fh.write(f"{g.label_of(int(i))} {g.label_of(int(j))}\n")
