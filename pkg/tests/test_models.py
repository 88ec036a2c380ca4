import numpy as np
import pytest

from twclust import (
    ErParams,
    GraphInputError,
    SbmParams,
    estimate_edge_density,
    sample_er,
    sample_goe,
    sample_sbm,
)
from twclust.graphs import induced_subgraph, NodeSubset


class TestErSampler:
    def test_p_one_complete(self):
        g = sample_er(ErParams(n=6, p=1.0), seed=0)
        assert g.num_edges == 15

    def test_p_zero_empty(self):
        g = sample_er(ErParams(n=6, p=0.0), seed=0)
        assert g.num_edges == 0

    def test_deterministic(self):
        a = sample_er(ErParams(n=50, p=0.3), seed=42)
        b = sample_er(ErParams(n=50, p=0.3), seed=42)
        assert np.array_equal(a.edges, b.edges)
        c = sample_er(ErParams(n=50, p=0.3), seed=43)
        assert not np.array_equal(a.edges, c.edges)

    def test_edge_count_in_binomial_band(self):
        n, p = 1000, 0.1
        npairs = n * (n - 1) // 2
        g = sample_er(ErParams(n=n, p=p), seed=7)
        sigma = np.sqrt(npairs * p * (1 - p))
        assert abs(g.num_edges - npairs * p) < 4 * sigma

    def test_edge_structure_valid(self):
        g = sample_er(ErParams(n=30, p=0.4), seed=3)
        assert np.all(g.edges[:, 0] < g.edges[:, 1])
        assert np.unique(g.edges, axis=0).shape == g.edges.shape

    def test_pair_frequency_matches_p(self):
        # fixed pair (2, 5) across many seeds: binomial confidence band
        n, p, trials = 8, 0.35, 400
        hits = sum(sample_er(ErParams(n=n, p=p), seed=s).has_edge(2, 5)
                   for s in range(trials))
        sigma = np.sqrt(trials * p * (1 - p))
        assert abs(hits - trials * p) < 4 * sigma

    def test_validation(self):
        with pytest.raises(GraphInputError):
            ErParams(n=5, p=1.5)


class TestSbmSampler:
    def test_one_block_reduces_to_er(self):
        params = SbmParams(block_sizes=(40,), b=((0.3,),))
        g, z = sample_sbm(params, seed=11)
        g_er = sample_er(ErParams(n=40, p=0.3), seed=11)
        assert np.array_equal(g.edges, g_er.edges)
        assert np.all(z == 0)

    def test_all_ones_complete(self):
        params = SbmParams(block_sizes=(3, 4), b=((1.0, 1.0), (1.0, 1.0)))
        g, z = sample_sbm(params, seed=0)
        assert g.num_edges == 21
        assert z.tolist() == [0, 0, 0, 1, 1, 1, 1]

    def test_block_densities_in_band(self):
        params = SbmParams(block_sizes=(150, 150),
                           b=((0.3, 0.05), (0.05, 0.3)))
        g, z = sample_sbm(params, seed=5)
        block0 = induced_subgraph(g, NodeSubset(g, np.flatnonzero(z == 0)))
        block1 = induced_subgraph(g, NodeSubset(g, np.flatnonzero(z == 1)))
        pairs_within = 150 * 149 // 2
        for sub in (block0, block1):
            sigma = np.sqrt(pairs_within * 0.3 * 0.7)
            assert abs(sub.num_edges - 0.3 * pairs_within) < 4 * sigma
        cross = g.num_edges - block0.num_edges - block1.num_edges
        pairs_cross = 150 * 150
        sigma = np.sqrt(pairs_cross * 0.05 * 0.95)
        assert abs(cross - 0.05 * pairs_cross) < 4 * sigma

    def test_shuffled_labels(self):
        params = SbmParams(block_sizes=(10, 30), b=((0.9, 0.05), (0.05, 0.9)))
        g1, z1 = sample_sbm(params, seed=3, shuffle_labels=True)
        g2, z2 = sample_sbm(params, seed=3, shuffle_labels=True)
        assert np.array_equal(z1, z2) and np.array_equal(g1.edges, g2.edges)
        assert np.bincount(z1).tolist() == [10, 30]
        assert not np.all(z1 == params.membership())

    def test_diagonal_dominance(self):
        dom = SbmParams(block_sizes=(5, 5), b=((0.3, 0.05), (0.05, 0.3)))
        weak = SbmParams(block_sizes=(5, 5), b=((0.1, 0.2), (0.2, 0.1)))
        assert dom.is_diagonally_dominant()
        assert not weak.is_diagonally_dominant()

    def test_validation(self):
        with pytest.raises(GraphInputError):
            SbmParams(block_sizes=(5, 0), b=((0.1, 0.1), (0.1, 0.1)))
        with pytest.raises(GraphInputError):
            SbmParams(block_sizes=(5, 5), b=((0.1, 0.3), (0.2, 0.1)))
        with pytest.raises(GraphInputError):
            SbmParams(block_sizes=(5,), b=((1.2,),))

    def test_density_matches_expectation(self):
        params = SbmParams(block_sizes=(100, 100), b=((0.2, 0.1), (0.1, 0.2)))
        g, _ = sample_sbm(params, seed=9)
        assert estimate_edge_density(g) == pytest.approx(0.15, abs=0.02)


class TestGoeSampler:
    def test_single_entry(self):
        s = sample_goe(1, seed=0)
        assert s.entries.shape == (1, 1)

    def test_deterministic(self):
        a = sample_goe(20, seed=5)
        b = sample_goe(20, seed=5)
        assert np.array_equal(a.entries, b.entries)

    def test_exactly_symmetric(self):
        m = sample_goe(40, seed=1).entries
        assert np.array_equal(m, m.T)

    def test_offdiagonal_mean_clt_band(self):
        n = 500
        m = sample_goe(n, seed=2).entries
        off = m[np.triu_indices(n, k=1)]
        assert abs(off.mean()) < 4.0 / np.sqrt(n * (n - 1) / 2)

    def test_moments_loose(self):
        n = 400
        m = sample_goe(n, seed=3).entries
        off = m[np.triu_indices(n, k=1)]
        assert off.var() == pytest.approx(1.0, rel=0.05)
        assert np.diag(m).var() == pytest.approx(2.0, rel=0.25)

    def test_bad_size(self):
        with pytest.raises(GraphInputError):
            sample_goe(0, seed=0)
