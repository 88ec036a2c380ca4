import itertools
import json

import numpy as np
import pytest

from twclust import (
    DegenerateGraphError,
    PartitionConfig,
    SbmParams,
    TestConfig,
    adjusted_rand_index,
    build_graph,
    density_ordering,
    flatten_leaves,
    leaf_labels,
    recursive_bipartition,
    sample_er,
    sample_sbm,
    spectral_bipartition,
    tree_to_dict,
    tree_to_json,
    validate_tree,
)
from twclust import ErParams
from twclust.partition import (
    dict_flatten_leaves,
    validate_tree_dict,
    write_ordering_files,
)


def two_cliques_with_bridge():
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    edges += [(i, j) for i in range(5, 10) for j in range(i + 1, 10)]
    edges.append((4, 5))
    return build_graph(10, edges)


def best_normalized_cut(g):
    """Brute-force oracle: minimize cut * (1/vol + 1/vol) over bipartitions."""
    a = g.adjacency.toarray()
    deg = a.sum(1)
    best, best_side = np.inf, None
    for bits in itertools.product([0, 1], repeat=g.n - 1):
        side = np.array((0,) + bits, dtype=bool)
        if side.all() or not side.any():
            continue
        cut = a[np.ix_(side, ~side)].sum()
        vol1, vol2 = deg[side].sum(), deg[~side].sum()
        if vol1 == 0 or vol2 == 0:
            continue
        score = cut * (1.0 / vol1 + 1.0 / vol2)
        if score < best:
            best, best_side = score, side
    return best_side


class TestSpectralBipartition:
    def test_k2_splits_to_singletons(self):
        g = build_graph(2, [(0, 1)])
        left, right = spectral_bipartition(g)
        assert {len(left), len(right)} == {1}

    def test_two_cliques_match_bruteforce_oracle(self):
        g = two_cliques_with_bridge()
        left, right = spectral_bipartition(g)
        got = frozenset(left.members.tolist())
        oracle_side = best_normalized_cut(g)
        oracle = frozenset(np.flatnonzero(oracle_side).tolist())
        assert got in (oracle, frozenset(range(10)) - oracle)
        assert got in (frozenset(range(5)), frozenset(range(5, 10)))

    def test_sbm_recovery_rate(self):
        params = SbmParams(block_sizes=(150, 150), b=((0.3, 0.05), (0.05, 0.3)))
        hits = 0
        for seed in range(40):
            g, z = sample_sbm(params, seed=seed)
            left, right = spectral_bipartition(g)
            pred = np.zeros(300, dtype=int)
            pred[right.members] = 1
            hits += adjusted_rand_index(pred, z) >= 0.95
        assert hits >= 38

    def test_edgeless_fallback_is_balanced(self):
        g = build_graph(6, [])
        left, right = spectral_bipartition(g)
        assert {len(left), len(right)} == {3}

    def test_too_small(self):
        with pytest.raises(DegenerateGraphError):
            spectral_bipartition(build_graph(1, []))

    def test_sides_nonempty_and_partition(self):
        g = sample_er(ErParams(n=40, p=0.2), seed=3)
        left, right = spectral_bipartition(g)
        merged = np.sort(np.concatenate([left.members, right.members]))
        assert np.array_equal(merged, np.arange(40))
        assert len(left) > 0 and len(right) > 0


class TestRecursiveBipartition:
    def test_er_stays_whole(self):
        splits = 0
        for seed in range(12):
            g = sample_er(ErParams(n=300, p=0.2), seed=seed)
            cfg = PartitionConfig(alpha=0.001, test=TestConfig(seed=seed))
            tree = recursive_bipartition(g, cfg)
            assert validate_tree(tree, n=300) == []
            splits += not tree.is_leaf
        assert splits <= 1

    def test_two_block_sbm_splits_once(self):
        params = SbmParams(block_sizes=(100, 100), b=((0.4, 0.05), (0.05, 0.4)))
        g, z = sample_sbm(params, seed=2)
        cfg = PartitionConfig(alpha=0.01, test=TestConfig(seed=5))
        tree = recursive_bipartition(g, cfg)
        assert validate_tree(tree, n=200) == []
        labels = leaf_labels(tree, 200)
        assert adjusted_rand_index(labels, z) == pytest.approx(1.0)
        assert tree.p_value is not None and tree.p_value < 0.01

    def test_deterministic_and_jobs_invariant(self):
        params = SbmParams(block_sizes=(60, 60), b=((0.5, 0.05), (0.05, 0.5)))
        g, _ = sample_sbm(params, seed=0)
        cfg = PartitionConfig(alpha=0.05, min_size=5, test=TestConfig(seed=9))
        t1 = recursive_bipartition(g, cfg)
        t2 = recursive_bipartition(g, cfg)
        t3 = recursive_bipartition(g, cfg, jobs=2)
        assert tree_to_dict(t1) == tree_to_dict(t2) == tree_to_dict(t3)

    def test_stop_reasons(self):
        # n = 0 and n = 1 degenerate roots
        t = recursive_bipartition(build_graph(0, []))
        assert t.is_leaf and t.stop_reason == "degenerate_graph"
        t = recursive_bipartition(build_graph(1, []))
        assert t.is_leaf and t.stop_reason == "degenerate_graph"
        # edgeless graph: nothing to test
        t = recursive_bipartition(build_graph(5, []), PartitionConfig(min_size=0))
        assert t.is_leaf and t.stop_reason == "degenerate_density"
        # tiny graph below min_size
        g = build_graph(4, [(0, 1), (2, 3)])
        t = recursive_bipartition(g, PartitionConfig(min_size=10))
        assert t.is_leaf and t.stop_reason == "min_size"

    def test_isolated_nodes_become_singleton_leaves(self):
        edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        edges += [(i, j) for i in range(5, 10) for j in range(i + 1, 10)]
        edges.append((0, 5))
        g = build_graph(13, edges)  # nodes 10, 11, 12 isolated
        cfg = PartitionConfig(alpha=0.5, min_size=0, test=TestConfig(seed=1))
        tree = recursive_bipartition(g, cfg)
        assert validate_tree(tree, n=13) == []
        iso_leaves = [l for l in tree.leaves() if l.stop_reason == "isolated"]
        assert sorted(int(l.members[0]) for l in iso_leaves) == [10, 11, 12]
        assert all(l.size == 1 for l in iso_leaves)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            PartitionConfig(alpha=0.0)
        with pytest.raises(ValueError):
            PartitionConfig(min_size=-1)


class TestTreeOps:
    @pytest.fixture
    def split_tree(self):
        params = SbmParams(block_sizes=(40, 40), b=((0.7, 0.05), (0.05, 0.7)))
        g, z = sample_sbm(params, seed=1)
        cfg = PartitionConfig(alpha=0.05, min_size=5, test=TestConfig(seed=2))
        return recursive_bipartition(g, cfg), z

    def test_flatten_single_leaf(self):
        g = sample_er(ErParams(n=30, p=0.3), seed=1)
        tree = recursive_bipartition(g, PartitionConfig(alpha=1e-6,
                                                        test=TestConfig(seed=1)))
        leaves = flatten_leaves(tree)
        assert len(leaves) == 1
        assert np.array_equal(leaves[0], np.arange(30))

    def test_flatten_partitions_root(self, split_tree):
        tree, _ = split_tree
        leaves = flatten_leaves(tree)
        merged = np.sort(np.concatenate(leaves))
        assert np.array_equal(merged, np.arange(80))
        total = sum(len(l) for l in leaves)
        assert total == 80  # pairwise disjoint given the sorted-union check

    def test_density_ordering_nesting(self, split_tree):
        tree, _ = split_tree
        perm, blocks = density_ordering(tree)
        assert np.array_equal(np.sort(perm), np.arange(80))  # bijection
        extents = {}
        for node, (start, stop, depth, p_hat) in zip(tree.walk(), blocks):
            extents[node.node_id] = (start, stop)
            assert stop - start == node.size
            assert depth == node.depth
        for node in tree.walk():
            for child in node.children:
                ps, pe = extents[node.node_id]
                cs, ce = extents[child.node_id]
                assert ps <= cs and ce <= pe

    def test_density_ordering_two_leaves(self):
        g = build_graph(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
        cfg = PartitionConfig(alpha=0.999999, min_size=0, test=TestConfig(seed=0))
        tree = recursive_bipartition(g, cfg)
        if tree.is_leaf:
            pytest.skip("no split at this alpha")
        perm, blocks = density_ordering(tree)
        sizes = sorted((stop - start) for start, stop, d, _ in blocks if d == 1)
        assert sizes == sorted(c.size for c in tree.children)

    def test_single_leaf_ordering(self):
        g = build_graph(3, [(0, 1)])
        tree = recursive_bipartition(g, PartitionConfig(min_size=10))
        perm, blocks = density_ordering(tree)
        assert np.array_equal(perm, np.arange(3))
        assert blocks == [(0, 3, 0, pytest.approx(1.0 / 3.0))]


class TestSerialization:
    def test_roundtrip_and_validation(self, tmp_path):
        params = SbmParams(block_sizes=(30, 30), b=((0.8, 0.05), (0.05, 0.8)))
        g, _ = sample_sbm(params, seed=4)
        cfg = PartitionConfig(alpha=0.05, min_size=5, test=TestConfig(seed=7))
        tree = recursive_bipartition(g, cfg)
        doc = json.loads(tree_to_json(tree, manifest_name="manifest.json"))
        assert doc["manifest"] == "manifest.json"
        root = doc["tree"]
        assert validate_tree_dict(root) == []
        flat = dict_flatten_leaves(root)
        want = [[str(int(i)) for i in leaf] for leaf in flatten_leaves(tree)]
        assert flat == want

    def test_member_labels(self):
        g = build_graph(3, [(0, 1)], labels=["a", "b", "c"])
        tree = recursive_bipartition(g, PartitionConfig(min_size=10))
        doc = tree_to_dict(tree, labels=g.labels)
        assert doc["members"] == ["a", "b", "c"]
        assert doc["children"] == []

    def test_validator_catches_corruption(self):
        bad = {"id": 0, "size": 3, "p_hat": 0.5, "p_value": None,
               "stop_reason": None,
               "children": [
                   {"id": 1, "size": 1, "p_hat": None, "p_value": None,
                    "stop_reason": "accepted", "members": ["a"], "children": []},
                   {"id": 2, "size": 1, "p_hat": None, "p_value": None,
                    "stop_reason": "accepted", "members": ["a"], "children": []},
               ]}
        problems = validate_tree_dict(bad)
        assert problems  # duplicate members and size mismatch

    def test_ordering_files(self, tmp_path):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)], labels="wxyz")
        tree = recursive_bipartition(g, PartitionConfig(min_size=10))
        write_ordering_files(tree, tmp_path / "perm.txt", tmp_path / "blocks.csv",
                             labels=g.labels, manifest_name="manifest.json")
        perm_lines = (tmp_path / "perm.txt").read_text().splitlines()
        assert perm_lines[0] == "# manifest: manifest.json"
        assert sorted(perm_lines[1:]) == ["w", "x", "y", "z"]
        block_lines = (tmp_path / "blocks.csv").read_text().splitlines()
        assert block_lines[1] == "start,end,depth,p_hat"
