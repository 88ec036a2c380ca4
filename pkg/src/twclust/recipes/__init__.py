"""Named simulation recipes behind the ``simulate`` subcommand.

Each recipe's parameters live in a versioned .cfg file next to this module
(flat ``key value...`` lines) rather than in code, so the studies stay
auditable; ``--runs`` / ``--seed`` override the file.  Recipes emit
plot-ready CSV, never images.
"""

from __future__ import annotations

import importlib.resources
from pathlib import Path

import numpy as np
from scipy.stats import kstest

from ..errors import GraphInputError
from ..graphs import remove_isolated_nodes
from ..htest import SweepSpec, TestConfig, pvalue_sweep, test_graph, write_sweep_csv
from ..manifest import MANIFEST_NAME, RunManifest
from ..metrics import adjusted_rand_index
from ..models import (
    ErParams,
    SbmParams,
    derive_seedseq,
    sample_er,
    sample_goe,
    sample_sbm,
)
from ..partition import PartitionConfig, leaf_labels, recursive_bipartition
from ..spectral import Variant, adjacency_statistic, laplacian_statistic
from ..tracy_widom import TW1_MEAN, TW1_STD, tw1_cdf
from .._parallel import parallel_map

RECIPES = ("tw-convergence", "laplacian-fit", "planted-cluster", "nested-sbm")

_HIST_RANGE = (-6.0, 4.0)
_HIST_BINS = 40


# -- config files ---------------------------------------------------------------


def recipe_config_path(name):
    if name not in RECIPES:
        raise GraphInputError(
            f"unknown recipe {name!r}; available: {', '.join(RECIPES)}"
        )
    return importlib.resources.files(__package__) / f"{name}.cfg"


def parse_kv_config(path):
    """Flat config: one ``key value [value...]`` per line, '#' comments."""
    out = {}
    text = Path(path).read_text() if not hasattr(path, "read_text") else path.read_text()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, *values = line.split()
        if not values:
            raise GraphInputError(f"config line {lineno}: key {key!r} has no value")
        out[key] = values
    return out


def _floats(cfg, key):
    return [float(v) for v in cfg[key]]


def _ints(cfg, key):
    return [int(v) for v in cfg[key]]


def load_model_params(path):
    """ER/SBM parameters from a key-value config file.

    Either ``n`` and ``p`` (flat model) or ``block_sizes`` plus ``B``
    (row-major blockmodel probabilities).
    """
    cfg = parse_kv_config(Path(path))
    if "block_sizes" in cfg:
        sizes = _ints(cfg, "block_sizes")
        flat = _floats(cfg, "B")
        k = len(sizes)
        if len(flat) != k * k:
            raise GraphInputError(f"B must have {k * k} row-major entries")
        b = np.array(flat).reshape(k, k)
        return SbmParams(block_sizes=tuple(sizes), b=tuple(map(tuple, b)))
    if "n" in cfg and "p" in cfg:
        return ErParams(n=int(cfg["n"][0]), p=float(cfg["p"][0]))
    raise GraphInputError(
        f"{path}: expected either 'n'+'p' or 'block_sizes'+'B'"
    )


# -- shared statistics helpers ----------------------------------------------------


def goe_edge_statistic(n, seed):
    """n^(2/3) (lambda1 / sqrt(n) - 2) for one GOE draw."""
    m = sample_goe(n, seed).entries
    lam1 = np.linalg.eigvalsh(m)[-1]
    return n ** (2.0 / 3.0) * (lam1 / np.sqrt(n) - 2.0)


def _stat_block(kind, n, p, seed, lo, hi):
    out = np.empty(hi - lo)
    for r in range(lo, hi):
        ss = derive_seedseq(seed, r)
        if kind == "goe":
            out[r - lo] = goe_edge_statistic(n, ss)
        else:
            g = sample_er(ErParams(n=n, p=p), ss)
            if kind == "er-laplacian":
                g, _ = remove_isolated_nodes(g)
                out[r - lo] = laplacian_statistic(g).theta
            else:
                out[r - lo] = adjacency_statistic(g).theta
    return out


def sample_statistics(kind, n, p, runs, seed, jobs=1, block=25):
    """Monte Carlo sample of the edge statistic for one ensemble."""
    bounds = list(range(0, runs, block)) + [runs]
    tasks = [(kind, n, p, seed, lo, hi)
             for lo, hi in zip(bounds[:-1], bounds[1:]) if lo < hi]
    return np.concatenate(parallel_map(_stat_block, tasks, jobs=jobs))


def moment_corrected(values, reference):
    """Affine-map values so the reference sample's moments match TW1's."""
    mu = reference.mean()
    sd = reference.std(ddof=1)
    return TW1_MEAN + (values - mu) / sd * TW1_STD


def ks_to_tw1(values):
    return float(kstest(values, tw1_cdf).statistic)


def ks_to_uniform(pvalues):
    return float(kstest(pvalues, "uniform").statistic)


def correction_study(n, p, runs, correction_samples, seed, jobs=1):
    """Raw and moment-corrected edge statistics for one flat ensemble.

    Returns a dict with the raw sample, one corrected sample per
    correction size, and their KS distances to TW1.
    """
    raw = sample_statistics("er", n, p, runs, seed, jobs=jobs)
    out = {"n": n, "p": p, "raw": raw, "ks_raw": ks_to_tw1(raw),
           "corrected": {}, "ks_corrected": {}}
    for idx, m in enumerate(correction_samples):
        ref = sample_statistics("er", n, p, m,
                                derive_seedseq(seed, 900 + idx),
                                jobs=jobs)
        corr = moment_corrected(raw, ref)
        out["corrected"][m] = corr
        out["ks_corrected"][m] = ks_to_tw1(corr)
    return out


# -- CSV writers ------------------------------------------------------------------


def _write_values(path, rows, header):
    with open(path, "w") as fh:
        fh.write(f"# manifest: {MANIFEST_NAME}\n")
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(str(x) for x in row) + "\n")


def _histogram_rows(case, values):
    counts, edges = np.histogram(values, bins=_HIST_BINS, range=_HIST_RANGE)
    mids = 0.5 * (edges[:-1] + edges[1:])
    dens = np.gradient(tw1_cdf(mids), mids)
    return [(case, edges[i], edges[i + 1], int(counts[i]), repr(float(dens[i])))
            for i in range(len(counts))]


# -- recipes ----------------------------------------------------------------------


def recipe_tw_convergence(out_dir, runs=None, seed=0, jobs=1, config_path=None):
    """Edge-statistic convergence and the small-sample moment correction."""
    cfg = parse_kv_config(config_path or recipe_config_path("tw-convergence"))
    runs = runs or int(cfg["runs"][0])
    er_p = float(cfg["er_p"][0])
    correction_samples = _ints(cfg, "correction_samples")
    cases = [("goe", n, 0.0) for n in _ints(cfg, "goe_sizes")]
    cases += [("er", n, er_p) for n in _ints(cfg, "er_sizes")]

    out_dir = Path(out_dir)
    raw_rows, hist_rows, summary = [], [], []
    for idx, (kind, n, p) in enumerate(cases):
        label = f"{kind}_n{n}" + (f"_p{p}" if kind == "er" else "")
        vals = sample_statistics(kind, n, p, runs,
                                 derive_seedseq(seed, idx),
                                 jobs=jobs)
        raw_rows += [(label, r, repr(float(v))) for r, v in enumerate(vals)]
        hist_rows += _histogram_rows(label, vals)
        summary.append((label, n, p, "", repr(ks_to_tw1(vals))))

    corrected_rows = []
    for idx, spec in enumerate(cfg["correction_cases"]):
        n_s, p_s = spec.split(":")
        study = correction_study(int(n_s), float(p_s), runs, correction_samples,
                                 int(derive_seedseq(seed, 50 + idx).generate_state(1)[0]),
                                 jobs=jobs)
        label = f"er_n{n_s}_p{p_s}"
        raw_rows += [(label, r, repr(float(v))) for r, v in enumerate(study["raw"])]
        hist_rows += _histogram_rows(label, study["raw"])
        summary.append((label, n_s, p_s, "", repr(study["ks_raw"])))
        for m, corr in study["corrected"].items():
            corrected_rows += [(label, m, r, repr(float(v)))
                               for r, v in enumerate(corr)]
            hist_rows += _histogram_rows(f"{label}_corr{m}", corr)
            summary.append((label, n_s, p_s, m, repr(study["ks_corrected"][m])))

    _write_values(out_dir / "raw_statistics.csv", raw_rows, "case,run,value")
    _write_values(out_dir / "corrected_statistics.csv", corrected_rows,
                  "case,correction_samples,run,value")
    _write_values(out_dir / "histograms.csv", hist_rows,
                  "case,bin_left,bin_right,count,tw1_density")
    _write_values(out_dir / "summary.csv", summary,
                  "case,n,p,correction_samples,ks_to_tw1")
    return {"summary": summary}


def recipe_laplacian_fit(out_dir, runs=None, seed=0, jobs=1, config_path=None):
    """Fit of the degree-normalized statistic against the TW1 law."""
    cfg = parse_kv_config(config_path or recipe_config_path("laplacian-fit"))
    runs = runs or int(cfg["runs"][0])
    m_corr = int(cfg["correction_samples"][0])

    out_dir = Path(out_dir)
    raw_rows, corrected_rows, hist_rows, summary = [], [], [], []
    for idx, spec in enumerate(cfg["cases"]):
        n_s, p_s = spec.split(":")
        n, p = int(n_s), float(p_s)
        label = f"laplacian_n{n}_p{p}"
        vals = sample_statistics("er-laplacian", n, p, runs,
                                 derive_seedseq(seed, idx),
                                 jobs=jobs)
        ref = sample_statistics("er-laplacian", n, p, m_corr,
                                derive_seedseq(seed, 700 + idx),
                                jobs=jobs)
        corr = moment_corrected(vals, ref)
        raw_rows += [(label, r, repr(float(v))) for r, v in enumerate(vals)]
        corrected_rows += [(label, m_corr, r, repr(float(v)))
                           for r, v in enumerate(corr)]
        hist_rows += _histogram_rows(label, vals)
        hist_rows += _histogram_rows(f"{label}_corr{m_corr}", corr)
        summary.append((label, n, p, "", repr(ks_to_tw1(vals))))
        summary.append((label, n, p, m_corr, repr(ks_to_tw1(corr))))

    _write_values(out_dir / "raw_statistics.csv", raw_rows, "case,run,value")
    _write_values(out_dir / "corrected_statistics.csv", corrected_rows,
                  "case,correction_samples,run,value")
    _write_values(out_dir / "histograms.csv", hist_rows,
                  "case,bin_left,bin_right,count,tw1_density")
    _write_values(out_dir / "summary.csv", summary,
                  "case,n,p,correction_samples,ks_to_tw1")
    return {"summary": summary}


def planted_cluster_sweeps(runs, seed, jobs=1, config_path=None):
    """The two planted-cluster sweeps as (spec, rows, raw-pvalue) triples."""
    cfg = parse_kv_config(config_path or recipe_config_path("planted-cluster"))
    runs = runs or int(cfg["runs"][0])
    boot = int(cfg["bootstrap_samples"][0])
    base = dict(n=int(cfg["n"][0]), b11=float(cfg["b11"][0]),
                b12=float(cfg["base_b12"][0]))

    n1_spec = SweepSpec(kind="n1", values=tuple(_ints(cfg, "n1_values")), **base)
    b12_spec = SweepSpec(kind="b12", values=tuple(_floats(cfg, "b12_values")),
                         n=base["n"], b11=base["b11"],
                         n1=int(cfg["b12_sweep_n1"][0]))
    out = []
    for tag_index, (tag, spec) in enumerate((("n1", n1_spec), ("b12", b12_spec))):
        cfg_t = TestConfig(bootstrap_samples=boot,
                           seed=int(derive_seedseq(seed, tag_index).generate_state(1)[0]))
        rows = pvalue_sweep(spec, runs, cfg_t, jobs=jobs)
        out.append((tag, spec, rows))
    return out


def recipe_planted_cluster(out_dir, runs=None, seed=0, jobs=1, config_path=None):
    """P-value behavior as the planted cluster grows / the background rises."""
    out_dir = Path(out_dir)
    results = {}
    for tag, _spec, rows in planted_cluster_sweeps(runs, seed, jobs, config_path):
        write_sweep_csv(rows, out_dir / f"pvalues_{tag}_sweep.csv",
                        manifest_name=MANIFEST_NAME)
        results[tag] = rows
    return results


def nested_sbm_params(rho, config_path=None):
    cfg = parse_kv_config(config_path or recipe_config_path("nested-sbm"))
    sizes = tuple(_ints(cfg, "block_sizes"))
    unit = np.array(_floats(cfg, "B")).reshape(len(sizes), len(sizes))
    return SbmParams(block_sizes=sizes, b=tuple(map(tuple, rho * unit)))


def _nested_run(rho, alpha, min_size, boot, seed, run, config_path):
    params = nested_sbm_params(rho, config_path)
    g, z = sample_sbm(params, derive_seedseq(seed, run))
    cfg = PartitionConfig(
        alpha=alpha, min_size=min_size,
        test=TestConfig(bootstrap_samples=boot,
                        seed=int(derive_seedseq(seed, run, 1).generate_state(1)[0])),
    )
    tree = recursive_bipartition(g, cfg)
    labels = leaf_labels(tree, g.n)
    return adjusted_rand_index(labels, z), len(tree.leaves())


def recipe_nested_sbm(out_dir, runs=None, seed=0, jobs=1, config_path=None):
    """Recovery of the three-block nested design across density scales."""
    cfg = parse_kv_config(config_path or recipe_config_path("nested-sbm"))
    runs = runs or int(cfg["runs"][0])
    alpha = float(cfg["alpha"][0])
    min_size = int(cfg["min_size"][0])
    boot = int(cfg["bootstrap_samples"][0])
    rhos = _floats(cfg, "rho_values")

    raw_rows, summary = [], []
    results = {}
    for idx, rho in enumerate(rhos):
        rho_seed = int(derive_seedseq(seed, idx).generate_state(1)[0])
        tasks = [(rho, alpha, min_size, boot, rho_seed, r, config_path)
                 for r in range(runs)]
        pairs = parallel_map(_nested_run, tasks, jobs=jobs)
        aris = np.array([a for a, _ in pairs])
        raw_rows += [(repr(rho), r, repr(float(a)), k)
                     for r, (a, k) in enumerate(pairs)]
        summary.append((repr(rho), repr(float(aris.mean())),
                        repr(float(aris.std(ddof=1))), runs))
        results[rho] = aris

    out_dir = Path(out_dir)
    _write_values(out_dir / "ari_runs.csv", raw_rows, "rho,run,ari,n_leaves")
    _write_values(out_dir / "ari_by_rho.csv", summary, "rho,mean_ari,sd_ari,runs")
    return results


_RECIPE_FN = {
    "tw-convergence": recipe_tw_convergence,
    "laplacian-fit": recipe_laplacian_fit,
    "planted-cluster": recipe_planted_cluster,
    "nested-sbm": recipe_nested_sbm,
}


def run_recipe(name, out_dir, runs=None, seed=0, jobs=1, config_path=None):
    """Run one named recipe, writing its CSVs plus a manifest."""
    if name not in _RECIPE_FN:
        raise GraphInputError(
            f"unknown recipe {name!r}; available: {', '.join(RECIPES)}"
        )
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    config = {"recipe": name, "runs": runs, "jobs": jobs,
              "config_path": str(config_path) if config_path else
              str(recipe_config_path(name))}
    manifest = RunManifest("simulate", config, seed,
                           inputs=[config_path] if config_path else [])
    result = _RECIPE_FN[name](out_dir, runs=runs, seed=seed, jobs=jobs,
                              config_path=config_path)
    manifest.write(out_dir)
    return result
