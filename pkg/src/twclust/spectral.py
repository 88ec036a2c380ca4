"""Centered/scaled spectra and the Tracy-Widom test statistics.

The tested matrix is (A - P_hat) / sqrt((n-1) p_hat (1 - p_hat)) where
P_hat = n * p_hat * e e^T - p_hat * I and e is the normalized all-ones
vector.  That matrix is sparse plus rank-one plus diagonal, so it is never
materialized for large n: the extremal eigensolver only consumes matvecs,
keeping memory at O(edges).  A dense path handles tiny graphs and serves as
the oracle in the test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.sparse.linalg as spla
from scipy.sparse.linalg import ArpackNoConvergence

from .errors import (
    DegenerateDensityError,
    DegenerateGraphError,
    EigensolverError,
    IsolatedNodeError,
)
from .graphs import estimate_edge_density

DENSE_FALLBACK_N = 64
DEFAULT_EIG_TOL = 1e-9
DENSE_SPECTRUM_CEILING = 4000

_V0_STREAM = 0x51B347


class Variant(str, enum.Enum):
    """Which matrix the statistic is computed from."""

    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"


@dataclass(frozen=True)
class TestStatistic:
    """Scaled extreme-eigenvalue statistic plus its provenance.

    ``theta`` is n^(2/3) * (lambda1 - 2) for the adjacency variant and
    n^(2/3) * (sqrt(n p/(1-p)) * (lambda2(L) + 1/n) - 2) for the
    (experimental) degree-normalized variant.
    """

    __test__ = False  # not a pytest class, despite the name

    theta: float
    lambda1: float
    n: int
    p_hat: float
    variant: Variant


@dataclass(frozen=True)
class SpectralOrdering:
    """Eigenpair carrier used by the bipartition step."""

    eigenvector: np.ndarray
    value: float


def _scale(n, p_hat):
    return np.sqrt((n - 1) * p_hat * (1.0 - p_hat))


def _check_density(p_hat):
    if not 0.0 < p_hat < 1.0:
        raise DegenerateDensityError(
            f"edge density {p_hat} leaves the centered matrix unscalable; "
            "treat this graph as a leaf instead of testing it"
        )


def centered_matvec(g, p_hat, x):
    """Multiply the centered, scaled adjacency matrix by a vector.

    Computes [A x - p_hat * sum(x) * 1 + p_hat * x] / sqrt((n-1) p (1-p))
    without forming the dense matrix (n p e e^T x reduces to p * sum(x) * 1).
    """
    _check_density(p_hat)
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != g.n:
        raise ValueError(f"vector length {x.shape[-1]} != n = {g.n}")
    ax = g.adjacency @ x
    return (ax - p_hat * x.sum() + p_hat * x) / _scale(g.n, p_hat)


def centered_operator(g, p_hat):
    """The centered matrix as a LinearOperator (symmetric, matvec-only)."""
    _check_density(p_hat)
    a = g.adjacency
    s = _scale(g.n, p_hat)

    def mv(x):
        x = np.asarray(x, dtype=float).ravel()
        return (a @ x - p_hat * x.sum() + p_hat * x) / s

    return spla.LinearOperator((g.n, g.n), matvec=mv, rmatvec=mv, dtype=float)


def centered_dense(g, p_hat):
    """Dense centered matrix; oracle path and bulk-spectrum workhorse."""
    _check_density(p_hat)
    a = g.adjacency.toarray()
    p = np.full((g.n, g.n), p_hat)
    np.fill_diagonal(p, 0.0)
    return (a - p) / _scale(g.n, p_hat)


def _deterministic_v0(n):
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(_V0_STREAM)))
    return rng.standard_normal(n)


def _power_estimate(op, v0, shift=3.0, iters=30):
    # rough largest-algebraic estimate: power iteration on op + shift*I
    v = v0 / np.linalg.norm(v0)
    for _ in range(iters):
        w = op.matvec(v) + shift * v
        v = w / np.linalg.norm(w)
    return float(v @ op.matvec(v))


def _eigsh_largest(op, n, tol, maxiter):
    v0 = _deterministic_v0(n)
    try:
        # ARPACK's tol is relative to the matrix scale (about 2 here);
        # divide so the requested accuracy lands on the eigenvalue itself.
        vals, vecs = spla.eigsh(
            op, k=1, which="LA", tol=tol / 4.0, v0=v0,
            maxiter=maxiter, ncv=min(n, 20),
        )
    except ArpackNoConvergence as exc:
        best = (float(exc.eigenvalues[-1]) if len(exc.eigenvalues)
                else _power_estimate(op, v0))
        raise EigensolverError(
            f"extremal eigensolve did not converge within {maxiter} iterations "
            f"(best estimate {best:.6f})",
            best_estimate=best,
        ) from exc
    vec = vecs[:, 0]
    return float(vals[0]), vec / np.linalg.norm(vec)


def largest_eigenvalue_centered(g, p_hat, tol=DEFAULT_EIG_TOL, maxiter=None):
    """Largest (signed) eigenvalue of the centered matrix and its eigenvector.

    Uses an implicitly restarted Lanczos iteration over the matvec for large
    graphs and a dense symmetric eigensolve for n <= 64.
    """
    _check_density(p_hat)
    if g.n < 2:
        raise DegenerateGraphError("need at least 2 nodes for an eigenvalue test")
    if maxiter is None:
        maxiter = 10 * g.n
    if g.n <= DENSE_FALLBACK_N:
        w, v = np.linalg.eigh(centered_dense(g, p_hat))
        return float(w[-1]), v[:, -1]
    return _eigsh_largest(centered_operator(g, p_hat), g.n, tol, maxiter)


def adjacency_statistic(g, tol=DEFAULT_EIG_TOL):
    """n^(2/3) * (lambda1 - 2) for the centered, scaled adjacency matrix."""
    if g.n < 2:
        raise DegenerateGraphError("statistic undefined for n < 2")
    p_hat = estimate_edge_density(g)
    _check_density(p_hat)
    lam1, _ = largest_eigenvalue_centered(g, p_hat, tol=tol)
    theta = g.n ** (2.0 / 3.0) * (lam1 - 2.0)
    return TestStatistic(theta=theta, lambda1=lam1, n=g.n, p_hat=p_hat,
                         variant=Variant.ADJACENCY)


# -- degree-normalized variant (experimental) --------------------------------


def _laplacian_operator(g):
    d = g.degrees.astype(float)
    if np.any(d == 0):
        raise IsolatedNodeError(
            "graph has zero-degree nodes; remove them first "
            "(graphs.remove_isolated_nodes)"
        )
    invsqrt = 1.0 / np.sqrt(d)
    a = g.adjacency

    def mv(x):
        x = np.asarray(x, dtype=float).ravel()
        return invsqrt * (a @ (invsqrt * x))

    top_vec = np.sqrt(d / d.sum())
    return mv, top_vec


def laplacian_lambda2(g, tol=DEFAULT_EIG_TOL):
    """Second largest eigenvalue of D^(-1/2) A D^(-1/2) and its eigenvector.

    The top eigenpair is known exactly (eigenvalue 1, eigenvector
    sqrt(d_i / sum d)), so it is deflated by shifting it to -1 rather than
    asking the iterative solver for two Ritz pairs.
    """
    if g.n < 2:
        raise DegenerateGraphError("need at least 2 nodes")
    mv, top = _laplacian_operator(g)
    if g.n <= DENSE_FALLBACK_N:
        d = g.degrees.astype(float)
        invsqrt = 1.0 / np.sqrt(d)
        dense = g.adjacency.toarray() * np.outer(invsqrt, invsqrt)
        w, v = np.linalg.eigh(dense)
        return float(w[-2]), v[:, -2]

    def deflated(x):
        x = np.asarray(x, dtype=float).ravel()
        return mv(x) - 2.0 * top * (top @ x)

    op = spla.LinearOperator((g.n, g.n), matvec=deflated, dtype=float)
    return _eigsh_largest(op, g.n, tol, 10 * g.n)


def laplacian_statistic(g, tol=DEFAULT_EIG_TOL):
    """Conjectured TW statistic from the degree-normalized matrix.

    Experimental: convergence to the limit law is only supported
    empirically, and is known to be slow for sparse graphs.
    """
    if g.n < 2:
        raise DegenerateGraphError("statistic undefined for n < 2")
    p_hat = estimate_edge_density(g)
    _check_density(p_hat)
    lam2, _ = laplacian_lambda2(g, tol=tol)
    n = g.n
    theta = n ** (2.0 / 3.0) * (
        np.sqrt(n * p_hat / (1.0 - p_hat)) * (lam2 + 1.0 / n) - 2.0
    )
    return TestStatistic(theta=float(theta), lambda1=float(lam2), n=n,
                         p_hat=p_hat, variant=Variant.LAPLACIAN)


# -- diagnostics --------------------------------------------------------------


def semicircle_density(x):
    """Semicircle density (1/2pi) sqrt((4 - x^2)+), the bulk eigenvalue law."""
    x_arr = np.asarray(x, dtype=float)
    val = np.sqrt(np.clip(4.0 - x_arr**2, 0.0, None)) / (2.0 * np.pi)
    return float(val) if np.isscalar(x) or x_arr.ndim == 0 else val


def bulk_spectrum(g, p_hat, ceiling=DENSE_SPECTRUM_CEILING):
    """All eigenvalues of the centered matrix, ascending (dense solve).

    Refuses n above ``ceiling``: subsample the graph or raise the ceiling
    explicitly if you really want a dense eigendecomposition that large.
    """
    if g.n > ceiling:
        raise DegenerateGraphError(
            f"n = {g.n} exceeds the dense-solve ceiling {ceiling}; "
            "sample a subgraph or pass a larger ceiling"
        )
    return np.linalg.eigvalsh(centered_dense(g, p_hat))


def write_spectrum_csv(eigenvalues, path):
    """One eigenvalue per line, for external plotting against the bulk law."""
    with open(path, "w") as fh:
        for v in np.asarray(eigenvalues, dtype=float):
            fh.write(f"{float(v)!r}\n")
