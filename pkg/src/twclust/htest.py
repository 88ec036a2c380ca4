"""Bootstrap moment-corrected Tracy-Widom hypothesis test.

The finite-sample distribution of the statistic lags its limit law, so the
test draws a handful of null replicates at the observed (n, p_hat), matches
the replicate sample's first two moments to the TW1 moments by an affine
map, and reads the p-value from the TW1 survival function:

    theta' = mu_TW + ((theta - mean(theta_i)) / sd(theta_i)) * sigma_TW
    pval   = P_TW1(X > theta')

The correction is invariant to any common affine reparameterization of
theta and the replicate statistics, so consistently using the
n^(2/3) * (lambda1 - 2) form everywhere changes nothing downstream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict

import numpy as np

from .errors import (
    DegenerateBootstrapError,
    DegenerateDensityError,
    DegenerateGraphError,
    IsolatedNodeError,
)
from .models import ErParams, SbmParams, derive_seedseq, sample_er, sample_sbm
from .spectral import DEFAULT_EIG_TOL, Variant, adjacency_statistic, laplacian_statistic
from ._parallel import parallel_map
from .tracy_widom import TW1_MEAN, TW1_STD, tw1_survival

_MAX_REDRAWS = 5


@dataclass(frozen=True)
class TestConfig:
    """Knobs for one hypothesis test."""

    __test__ = False  # not a pytest class, despite the name

    bootstrap_samples: int = 50
    statistic_variant: Variant = Variant.ADJACENCY
    seed: int = 0
    eig_tol: float = DEFAULT_EIG_TOL

    def __post_init__(self):
        if self.bootstrap_samples < 2:
            raise ValueError("need at least 2 bootstrap replicates for a spread")
        object.__setattr__(self, "statistic_variant", Variant(self.statistic_variant))


@dataclass(frozen=True)
class TestReport:
    """Outcome of one moment-corrected test."""

    __test__ = False  # not a pytest class, despite the name

    theta: float
    theta_prime: float
    p_value: float
    boot_mean: float
    boot_std: float
    n: int
    p_hat: float

    def to_dict(self):
        return asdict(self)

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _statistic_fn(variant):
    return adjacency_statistic if variant == Variant.ADJACENCY else laplacian_statistic


def _replicate_statistic(n, p_hat, cfg, index):
    """Statistic of one null replicate, redrawing degenerate samples.

    A replicate whose own density estimate hits 0 or 1 (or, for the
    degree-normalized variant, that contains zero-degree nodes) carries no
    usable statistic; it is redrawn from a fresh sub-stream a bounded number
    of times.
    """
    stat = _statistic_fn(cfg.statistic_variant)
    params = ErParams(n=n, p=p_hat)
    for attempt in range(_MAX_REDRAWS + 1):
        g = sample_er(params, derive_seedseq(cfg.seed, index, attempt))
        try:
            return stat(g, tol=cfg.eig_tol).theta
        except (DegenerateDensityError, IsolatedNodeError):
            continue
    raise DegenerateDensityError(
        f"replicate {index}: degenerate density in {_MAX_REDRAWS + 1} "
        f"consecutive draws at n={n}, p_hat={p_hat}"
    )


def bootstrap_statistics(n, p_hat, cfg, jobs=1):
    """The replicate statistics theta_i, i = 1..bootstrap_samples.

    Replicates live on independent sub-streams, so evaluating them in
    parallel cannot change the result.
    """
    tasks = [(n, p_hat, cfg, i) for i in range(cfg.bootstrap_samples)]
    return np.array(parallel_map(_replicate_statistic, tasks, jobs=jobs))


def moment_correct(theta, boot):
    """Map theta onto the TW1 scale using replicate sample moments."""
    boot = np.asarray(boot, dtype=float)
    mu = float(boot.mean())
    sd = float(boot.std(ddof=1))
    if sd == 0.0:
        raise DegenerateBootstrapError(
            "all bootstrap replicates produced the same statistic"
        )
    theta_prime = TW1_MEAN + (theta - mu) / sd * TW1_STD
    return theta_prime, mu, sd


def run_test(theta, n, p_hat, cfg=None, jobs=1):
    """Moment-corrected TW1 test of the flat-graph null.

    Parameters
    ----------
    theta : float
        Observed statistic (n^(2/3)-scaled, as produced by
        ``adjacency_statistic`` / ``laplacian_statistic``).
    n, p_hat :
        Size and estimated density of the observed graph; the replicates
        are drawn from the matching flat model.
    cfg : TestConfig, optional
    jobs : int
        Worker processes for the bootstrap replicates.

    Returns
    -------
    TestReport
    """
    cfg = cfg or TestConfig()
    if n < 2:
        raise DegenerateGraphError("cannot test a graph with fewer than 2 nodes")
    if not 0.0 < p_hat < 1.0:
        raise DegenerateDensityError(f"p_hat = {p_hat} admits no null replicates")
    boot = bootstrap_statistics(n, p_hat, cfg, jobs=jobs)
    theta_prime, mu, sd = moment_correct(theta, boot)
    return TestReport(
        theta=float(theta),
        theta_prime=float(theta_prime),
        p_value=float(tw1_survival(theta_prime)),
        boot_mean=mu,
        boot_std=sd,
        n=int(n),
        p_hat=float(p_hat),
    )


def test_graph(g, cfg=None, jobs=1):
    """Convenience wrapper: statistic plus run_test on one graph."""
    cfg = cfg or TestConfig()
    stat = _statistic_fn(cfg.statistic_variant)(g, tol=cfg.eig_tol)
    return run_test(stat.theta, stat.n, stat.p_hat, cfg, jobs=jobs)


# -- parameter sweeps ---------------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    """Planted-cluster sweep: vary the planted size or the background level.

    ``kind`` is "n1" (values are planted-cluster sizes) or "b12" (values are
    the tied off-diagonal/background probability).  The base model is a
    two-block graph with within-cluster probability ``b11`` and
    B12 = B22 = ``b12`` so that only the planted block stands out.
    """

    kind: str
    values: tuple
    n: int = 1000
    b11: float = 0.15
    b12: float = 0.05
    n1: int = 150

    def __post_init__(self):
        if self.kind not in ("n1", "b12"):
            raise ValueError(f"unknown sweep kind {self.kind!r}")
        vals = tuple(self.values)
        if not vals:
            raise ValueError("sweep needs at least one value")
        object.__setattr__(self, "values", vals)

    def params_at(self, value):
        if self.kind == "n1":
            n1, b12 = int(value), self.b12
        else:
            n1, b12 = self.n1, float(value)
        return SbmParams(
            block_sizes=(n1, self.n - n1),
            b=((self.b11, b12), (b12, b12)),
        )


@dataclass(frozen=True)
class SweepRow:
    param: float
    mean_pvalue: float
    sd_pvalue: float
    runs: int


def _sweep_one(spec, cfg, value, run_index):
    # Common random numbers across sweep points: the sub-streams depend on
    # the run index only, so run r reuses the same noise at every parameter
    # value.  Each point's marginal Monte Carlo law is untouched, but
    # point-to-point comparisons (the reason sweeps exist) see far less
    # variance.
    params = spec.params_at(value)
    g, _ = sample_sbm(params, derive_seedseq(cfg.seed, run_index))
    run_cfg = TestConfig(
        bootstrap_samples=cfg.bootstrap_samples,
        statistic_variant=cfg.statistic_variant,
        seed=int(derive_seedseq(cfg.seed, run_index, 1).generate_state(1)[0]),
        eig_tol=cfg.eig_tol,
    )
    return test_graph(g, run_cfg).p_value


def pvalue_sweep(spec, runs, cfg=None, jobs=1):
    """Monte Carlo p-value summary along a parameter sweep.

    Returns one :class:`SweepRow` per sweep point with the mean and sample
    standard deviation of the p-values over ``runs`` independent draws.
    """
    cfg = cfg or TestConfig()
    tasks = [
        (spec, cfg, value, r)
        for value in spec.values
        for r in range(runs)
    ]
    pvals = parallel_map(_sweep_one, tasks, jobs=jobs)
    rows = []
    for pi, value in enumerate(spec.values):
        chunk = np.array(pvals[pi * runs:(pi + 1) * runs])
        rows.append(SweepRow(
            param=float(value),
            mean_pvalue=float(chunk.mean()),
            sd_pvalue=float(chunk.std(ddof=1)) if runs > 1 else 0.0,
            runs=runs,
        ))
    return rows


def write_sweep_csv(rows, path, manifest_name=None):
    with open(path, "w") as fh:
        if manifest_name:
            fh.write(f"# manifest: {manifest_name}\n")
        fh.write("param,mean_pvalue,sd_pvalue,runs\n")
        for r in rows:
            fh.write(f"{r.param!r},{r.mean_pvalue!r},{r.sd_pvalue!r},{r.runs}\n")
