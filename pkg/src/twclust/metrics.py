"""Clustering agreement measures.

Flat partitions are compared with the permutation-model Adjusted Rand
Index.  Overlapping, possibly incomplete ground-truth sets are compared
against a cluster tree with the hierarchical F-measure: every subtree is a
candidate cluster, each truth set keeps its best F, and the scores are
averaged weighted by truth-set size.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .errors import GraphInputError


def _as_label_map(x):
    if isinstance(x, dict):
        return dict(x)
    arr = np.asarray(x)
    return {i: arr[i] for i in range(arr.shape[0])}


def adjusted_rand_index(a, b):
    """Chance-corrected partition agreement on a shared node universe.

    Accepts label arrays (index-aligned) or node -> cluster-id maps.
    Identical partitions score 1; independent random labelings score 0 in
    expectation.
    """
    a = _as_label_map(a)
    b = _as_label_map(b)
    if set(a) != set(b):
        raise GraphInputError("partitions cover different node universes")
    nodes = sorted(a)
    n = len(nodes)
    if n == 0:
        raise GraphInputError("empty partitions")

    _, la = np.unique([a[v] for v in nodes], return_inverse=True)
    _, lb = np.unique([b[v] for v in nodes], return_inverse=True)
    ka, kb = la.max() + 1, lb.max() + 1
    table = np.zeros((ka, kb), dtype=np.int64)
    np.add.at(table, (la, lb), 1)

    sum_cells = sum(comb(int(x), 2) for x in table.ravel())
    sum_rows = sum(comb(int(x), 2) for x in table.sum(axis=1))
    sum_cols = sum(comb(int(x), 2) for x in table.sum(axis=0))
    pairs = comb(n, 2)

    expected = sum_rows * sum_cols / pairs if pairs else 0.0
    maximum = 0.5 * (sum_rows + sum_cols)
    if maximum == expected:
        return 1.0
    return float((sum_cells - expected) / (maximum - expected))


def cluster_f_measure(c, c_hat):
    """(recall, precision, F) of a candidate set against one truth set.

    recall = |C & C_hat| / |C|, precision = |C & C_hat| / |C_hat|, F their
    harmonic mean (0 when the intersection is empty).
    """
    c, c_hat = set(c), set(c_hat)
    if not c or not c_hat:
        raise GraphInputError("F-measure needs nonempty sets")
    inter = len(c & c_hat)
    recall = inter / len(c)
    precision = inter / len(c_hat)
    f = 0.0 if inter == 0 else 2.0 * precision * recall / (precision + recall)
    return recall, precision, f


def _subtree_sets(tree):
    from .partition import ClusterTree  # local import to avoid a cycle

    if isinstance(tree, ClusterTree):
        return [set(node.members.tolist()) for node in tree.walk()]
    # serialized dict form
    from .partition import dict_subtree_members

    out = []
    stack = [tree]
    while stack:
        node = stack.pop()
        out.append(set(dict_subtree_members(node)))
        stack.extend(node.get("children") or [])
    return out


def hierarchical_f_measure(truth_sets, tree):
    """Size-weighted best-subtree F over possibly overlapping truth sets.

    Every tree node (internal or leaf) contributes one candidate set by
    flattening its subtree.  Nodes absent from all truth sets are ignored:
    the ground truth is allowed to be incomplete, so unlabeled members of a
    candidate set do not hurt its precision.
    """
    truth_sets = [set(t) for t in truth_sets]
    if not truth_sets or any(not t for t in truth_sets):
        raise GraphInputError("truth sets must be nonempty")
    covered = set().union(*truth_sets)
    candidates = []
    for cand in _subtree_sets(tree):
        trimmed = cand & covered
        if trimmed:
            candidates.append(trimmed)
    if not candidates:
        raise GraphInputError(
            "truth sets share no nodes with the tree; check that both use "
            "the same id type (tree members are indices, serialized trees "
            "carry string labels)"
        )
    total = sum(len(t) for t in truth_sets)
    score = 0.0
    for t in truth_sets:
        best = max((cluster_f_measure(t, cand)[2] for cand in candidates),
                   default=0.0)
        score += best * len(t)
    return score / total


# -- file formats ---------------------------------------------------------------


def read_truth_sets(path):
    """Ground-truth file: one cluster per line, whitespace-separated ids.

    Overlap between lines is allowed; '#' comments and blank lines ignored.
    """
    sets = []
    try:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                sets.append(set(line.split()))
    except OSError as exc:
        raise GraphInputError(f"cannot read truth file {path}: {exc}") from exc
    if not sets:
        raise GraphInputError(f"no clusters found in {path}")
    return sets


def read_flat_labels(path):
    """Flat-label file: one "node cluster" pair per line."""
    labels = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise GraphInputError(
                        f"{path}:{lineno}: expected 'node cluster', got {line!r}"
                    )
                labels[parts[0]] = parts[1]
    except OSError as exc:
        raise GraphInputError(f"cannot read label file {path}: {exc}") from exc
    if not labels:
        raise GraphInputError(f"no labels found in {path}")
    return labels
