"""Seeded generators: Erdős–Rényi null, stochastic blockmodel, GOE.

All generators are pure functions of (params, seed).  Randomness comes from
counter-based Philox streams keyed through ``numpy.random.SeedSequence``, so
derived sub-streams (bootstrap replicates, recursion branches, sweep runs)
are independent and reproducible regardless of scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphInputError
from .graphs import Graph, build_graph


def derive_seedseq(seed, *key):
    """Child SeedSequence for stream ``key``; ``seed`` is an int or another
    SeedSequence (whose spawn key the new one extends)."""
    if isinstance(seed, np.random.SeedSequence):
        return np.random.SeedSequence(
            entropy=seed.entropy,
            spawn_key=tuple(seed.spawn_key) + tuple(int(k) for k in key),
        )
    return np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))


def make_rng(seed, *key):
    """Philox generator on the derived stream; counter-based, so distinct
    streams are independent and any one stream is reproducible in isolation."""
    return np.random.Generator(np.random.Philox(derive_seedseq(seed, *key)))


@dataclass(frozen=True)
class ErParams:
    """G(n, p): every pair is an edge independently with probability p."""

    n: int
    p: float

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError("n must be >= 0")
        if not 0.0 <= self.p <= 1.0:
            raise GraphInputError(f"edge probability {self.p} outside [0, 1]")


@dataclass(frozen=True)
class SbmParams:
    """Blockmodel with fixed contiguous memberships.

    ``block_sizes`` are the per-class node counts; ``b`` is the symmetric
    k x k matrix of link probabilities.  Nodes 0..n1-1 belong to block 0,
    the next n2 to block 1, and so on.
    """

    block_sizes: tuple
    b: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.block_sizes)
        if not sizes or any(s <= 0 for s in sizes):
            raise GraphInputError("block sizes must be positive")
        b = np.asarray(self.b, dtype=float)
        k = len(sizes)
        if b.shape != (k, k):
            raise GraphInputError(f"B must be {k}x{k}, got {b.shape}")
        if not np.allclose(b, b.T):
            raise GraphInputError("B must be symmetric")
        if (b < 0).any() or (b > 1).any():
            raise GraphInputError("B entries must lie in [0, 1]")
        object.__setattr__(self, "block_sizes", sizes)
        object.__setattr__(self, "b", tuple(map(tuple, b.tolist())))

    @property
    def n(self):
        return sum(self.block_sizes)

    @property
    def k(self):
        return len(self.block_sizes)

    def b_matrix(self):
        return np.asarray(self.b, dtype=float)

    def membership(self):
        """Block index of every node (contiguous ranges)."""
        return np.repeat(np.arange(self.k), self.block_sizes)

    def is_diagonally_dominant(self):
        b = self.b_matrix()
        off = b.sum(axis=1) - np.diag(b)
        return bool(np.all(np.diag(b) >= off))


@dataclass(frozen=True)
class GoeSample:
    """Symmetric Gaussian matrix: off-diagonals N(0,1), diagonal N(0,2)."""

    n: int
    entries: np.ndarray


def _pair_index_decode(k, n):
    """Map linear upper-triangle positions (row-major, i<j) back to (i, j)."""
    k = np.asarray(k, dtype=np.int64)
    # i is the largest row whose triangle offset does not exceed k
    i = np.floor((2 * n - 1 - np.sqrt((2 * n - 1) ** 2 - 8.0 * k)) / 2).astype(np.int64)
    offset = i * n - i * (i + 1) // 2
    # float sqrt can land one row off near block boundaries
    too_big = offset > k
    while too_big.any():
        i[too_big] -= 1
        offset = i * n - i * (i + 1) // 2
        too_big = offset > k
    j = k - offset + i + 1
    return i, j


def sample_er(params, seed):
    """Sample an Erdős–Rényi graph, deterministic given the seed."""
    n, p = params.n, params.p
    rng = make_rng(seed)
    npairs = n * (n - 1) // 2
    if npairs == 0 or p == 0.0:
        return build_graph(n, [])
    if p == 1.0:
        k = np.arange(npairs, dtype=np.int64)
    else:
        k = np.flatnonzero(rng.random(npairs) < p)
    i, j = _pair_index_decode(k, n)
    return Graph(n, np.column_stack([i, j]))


def sample_sbm(params, seed, shuffle_labels=False):
    """Sample a blockmodel graph.

    Returns
    -------
    (Graph, ndarray)
        The graph and the true block index of every node.  With
        ``shuffle_labels`` the memberships are randomly permuted (derived
        sub-stream) instead of laid out in contiguous ranges.
    """
    n = params.n
    rng = make_rng(seed)
    z = params.membership()
    if shuffle_labels:
        z = z[make_rng(seed, 1).permutation(n)]
    npairs = n * (n - 1) // 2
    if npairs == 0:
        return build_graph(n, []), z
    u = rng.random(npairs)
    i, j = _pair_index_decode(np.arange(npairs, dtype=np.int64), n)
    b = params.b_matrix()
    keep = u < b[z[i], z[j]]
    return Graph(n, np.column_stack([i[keep], j[keep]])), z


def sample_goe(n, seed):
    """Sample a GOE matrix (off-diagonal variance 1, diagonal variance 2).

    The diagonal-variance convention only moves the edge statistic at
    O(1/n); edge-law comparisons are insensitive to it from n ~ 50 up.
    """
    if n < 1:
        raise GraphInputError("GOE size must be >= 1")
    rng = make_rng(seed)
    upper = np.triu(rng.standard_normal((n, n)), k=1)
    diag = np.sqrt(2.0) * rng.standard_normal(n)
    m = upper + upper.T + np.diag(diag)
    m.setflags(write=False)
    return GoeSample(n=n, entries=m)
